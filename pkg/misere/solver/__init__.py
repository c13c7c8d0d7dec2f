from misere.solver.candidate import Candidate, Failure, FailureKind, TransitionTable
from misere.solver.closed_set import (
    QuotientSolution,
    SolveLimits,
    name_generators,
    resolve_symbol,
    solution_from_candidate,
    solve_closed_set,
)
from misere.solver.recalibration import (
    RecalibrationPolicy,
    covering_n,
    recalibrate,
    subset_order,
)
from misere.solver.verification import (
    collect_transitions,
    exhaustive_least_failure,
    least_failure,
    n_verify,
    p_verify,
)

__all__ = [
    "Candidate",
    "Failure",
    "FailureKind",
    "QuotientSolution",
    "RecalibrationPolicy",
    "SolveLimits",
    "TransitionTable",
    "collect_transitions",
    "covering_n",
    "exhaustive_least_failure",
    "least_failure",
    "n_verify",
    "name_generators",
    "p_verify",
    "recalibrate",
    "resolve_symbol",
    "solution_from_candidate",
    "solve_closed_set",
    "subset_order",
]
