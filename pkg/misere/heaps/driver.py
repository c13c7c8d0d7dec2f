"""Heap-by-heap solver for octal games.

Each new heap is resolved by the cheapest path that works: a moveless heap
is the identity; the interpolation precheck may force its value; otherwise
each value admitted by the compatibility sets is tried under full
verification; only then does the recalibration loop run.
"""

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field

from misere.config import settings
from misere.core.exceptions import BudgetExceededError, OrderBoundError
from misere.core.metrics import record_heap, record_solve
from misere.core.tracing import TraceEvent, emit
from misere.games.codes import OctalCode, parse_octal_code
from misere.games.rules import RuleSet
from misere.heaps.periodicity import PeriodPolicy, detect_phi_period
from misere.heaps.transitions import (
    Bound,
    TransitionAlgebra,
    candidate_values,
    interpolate_next_heap,
    transition_lower_bounds,
)
from misere.solver.candidate import Candidate
from misere.solver.closed_set import (
    QuotientSolution,
    SolveLimits,
    resolve_symbol,
    solution_from_candidate,
)
from misere.solver.recalibration import RecalibrationPolicy
from misere.solver.verification import least_failure

logger = logging.getLogger(__name__)


@dataclass
class PartialQuotient:
    """Converged quotient of the first n heaps."""

    n: int
    candidate: Candidate
    transitions: TransitionAlgebra = field(default_factory=TransitionAlgebra)

    @classmethod
    def empty(cls) -> "PartialQuotient":
        return cls(0, Candidate.trivial())

    @property
    def order(self) -> int:
        return self.candidate.order


@dataclass
class DriverOptions:
    shortcuts: bool = True
    paranoid: bool = False
    bound: Bound = "compatible"
    policy: RecalibrationPolicy = field(default_factory=RecalibrationPolicy.from_settings)
    max_nodes: int | None = None
    deadline: float | None = None

    @classmethod
    def from_settings(cls, limits: SolveLimits | None = None) -> "DriverOptions":
        limits = limits or SolveLimits.from_settings()
        return cls(
            shortcuts=settings.shortcuts,
            paranoid=settings.paranoid,
            bound=settings.interpolation_bound,
            policy=limits.policy(),
            max_nodes=limits.max_nodes,
        )


def _next_heap_options(c: Candidate, rules: RuleSet) -> int:
    mask = 0
    for option in rules.generator_options(c.size):
        mask |= 1 << c.evaluate(option)
    return mask


def _accept(candidate: Candidate, rules: RuleSet, options: DriverOptions) -> bool:
    return least_failure(candidate, rules, max_nodes=options.max_nodes) is None


def extend_one_heap(
    pq: PartialQuotient,
    rules: RuleSet,
    options: DriverOptions | None = None,
    trace: list[TraceEvent] | None = None,
) -> tuple[PartialQuotient, str]:
    """Converged quotient for n + 1 heaps and the method that produced it."""
    options = options or DriverOptions.from_settings()
    trace = trace if trace is not None else []
    c = pq.candidate
    n = pq.n
    identity = c.monoid.identity

    if rules.is_dead(n):
        return PartialQuotient(n + 1, c.with_symbol(identity, rules), pq.transitions), "dead"

    if options.shortcuts:
        heap_options = _next_heap_options(c, rules)
        forced = interpolate_next_heap(pq.transitions, heap_options, options.bound)
        if forced is not None:
            tentative = c.with_symbol(forced, rules)
            if not options.paranoid or _accept(tentative, rules, options):
                return PartialQuotient(n + 1, tentative, pq.transitions), "interpolated"
            logger.warning(f"heap {n + 1}: interpolated value failed re-verification")

        for x in candidate_values(pq.transitions, heap_options, c.order, options.bound):
            tentative = c.with_symbol(x, rules)
            if _accept(tentative, rules, options):
                ta = transition_lower_bounds(tentative, options.max_nodes)
                return PartialQuotient(n + 1, tentative, ta), "filtered"

    resolved = resolve_symbol(c, rules, options.policy, trace, rules.describe(), options.deadline)
    ta = TransitionAlgebra()
    if options.shortcuts:
        ta = transition_lower_bounds(resolved, options.max_nodes)
    return PartialQuotient(n + 1, resolved, ta), "recalibrated"


def solve_octal(
    code: OctalCode | str,
    heaps: int | None = None,
    limits: SolveLimits | None = None,
    shortcuts: bool | None = None,
    paranoid: bool | None = None,
    period_policy: PeriodPolicy | None = None,
    on_partial: Callable[[PartialQuotient, str], None] | None = None,
) -> QuotientSolution:
    """Partial quotients for heaps 1..heaps, the last one reported with its period."""
    code = parse_octal_code(code) if isinstance(code, str) else code
    heaps = heaps or settings.default_heaps
    limits = limits or SolveLimits.from_settings()
    options = DriverOptions.from_settings(limits)
    if shortcuts is not None:
        options.shortcuts = shortcuts
    if paranoid is not None:
        options.paranoid = paranoid
    source = code.render()
    rules = RuleSet.heaps(code, heaps)

    started = time.monotonic()
    options.deadline = started + limits.max_seconds
    pq = PartialQuotient.empty()
    partial: list[int] = []
    trace: list[TraceEvent] = []
    stable_from = 1
    reason = None
    for n in range(heaps):
        try:
            if time.monotonic() > options.deadline:
                raise BudgetExceededError("wall clock budget exhausted", budget="seconds")
            pq, method = extend_one_heap(pq, rules, options, trace)
        except (BudgetExceededError, OrderBoundError) as e:
            reason = e.message
            logger.warning(f"{source}: stopped at heap {n + 1}: {reason}")
            trace.append(
                emit(
                    TraceEvent(event="budget", source=source, heap=n + 1, extra={"reason": reason})
                )
            )
            break
        if partial and partial[-1] != pq.order:
            stable_from = n + 1
        partial.append(pq.order)
        record_heap(method)
        trace.append(
            emit(TraceEvent(event="heap", source=source, heap=n + 1, order=pq.order, method=method))
        )
        logger.info(f"{source}: heap {n + 1} -> order {pq.order} ({method})")
        if on_partial is not None:
            on_partial(pq, method)

    elapsed = time.monotonic() - started
    record_solve("octal", elapsed, pq.order)
    solution = solution_from_candidate(
        pq.candidate,
        rules,
        source,
        partial_orders=partial,
        converged=reason is None,
        reason=reason,
        stable_from=stable_from if partial else None,
        trace=trace,
        elapsed=elapsed,
    )
    info = detect_phi_period(solution.phi, code, period_policy)
    if info is not None:
        solution.period_start, solution.period = info.start, info.period
    return solution


def partial_orders(
    code: OctalCode | str, heaps: int, limits: SolveLimits | None = None
) -> list[int]:
    return solve_octal(code, heaps, limits).partial_orders


def sweep_repetitions(
    code: OctalCode | str,
    k_max: int,
    heaps: int | None = None,
    limits: SolveLimits | None = None,
) -> list[QuotientSolution]:
    """Solve d0.(block)^k for k = 1..k_max, block being the code's digits."""
    code = parse_octal_code(code) if isinstance(code, str) else code
    return [solve_octal(code.repeated(k), heaps, limits) for k in range(1, k_max + 1)]

