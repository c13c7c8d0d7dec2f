"""Failure search for candidate quotients.

A position X is a failure of (Q, P, phi) when phi(X) in P and some option
of X also lands in P, or phi(X) not in P and no option lands in P. The
least failure in <lex order is what recalibration needs.
"""

import logging

from misere.algebra.monoid import lex_least_preimages
from misere.config import settings
from misere.core.exceptions import BudgetExceededError
from misere.core.metrics import record_nodes
from misere.games.rules import Position, RuleSet, iter_heap_positions, position_options
from misere.solver.candidate import Candidate, Failure, FailureKind, TransitionTable, earliest

logger = logging.getLogger(__name__)


def p_verify(c: Candidate, rules: RuleSet) -> Failure | None:
    """Least position that is in P and has an option in P.

    For a symbol H and x with xH in P and xH' in P for an option H', the
    least position is L(x) + H with L(x) the least preimage of x.
    """
    m = c.monoid
    preimages = lex_least_preimages(m, c.phi)
    best: Position | None = None
    for s in range(c.size):
        if c.is_dead(s):
            continue
        col = m.column(c.phi[s])
        for x, counts in preimages.items():
            if col[x] not in m.pset:
                continue
            if c.times(c.option_masks[s], x) & m.p_mask:
                candidate = Position(counts).add(s)
                if best is None or candidate < best:
                    best = candidate
    return Failure(best, FailureKind.P) if best is not None else None


class _Traversal:
    """Depth-first walk over positions in <lex order with subsumption pruning.

    Symbol s is decided before every symbol below it, and multiplicities
    increase, so leaves come out in <lex order. A partial position Y whose
    (phi(Y), options(Y)) dominates a recorded pair from an earlier position
    X0 is cut together with every extension: X0 + Z is a smaller failure
    whenever Y + Z is one.
    """

    def __init__(
        self,
        c: Candidate,
        stop_at_failure: bool,
        prune: bool = True,
        max_nodes: int | None = None,
        max_beans: int | None = None,
    ):
        self.c = c
        self.stop_at_failure = stop_at_failure
        self.prune = prune
        self.max_nodes = max_nodes or settings.max_nodes
        self.max_beans = max_beans
        self.table = TransitionTable()
        self.nodes = 0
        self.symbols = [s for s in range(c.size) if not c.is_dead(s)]
        self.counts = [0] * c.size

    def run(self) -> Failure | None:
        if self.max_beans is None and not self.prune:
            raise ValueError("an unpruned traversal needs a bean bound")
        return self._descend(len(self.symbols), self.c.monoid.identity, 0, 0)

    def _descend(self, depth: int, x: int, mask: int, beans: int) -> Failure | None:
        if depth == 0:
            return self._visit(x, mask)
        found = self._descend(depth - 1, x, mask, beans)
        if found is not None:
            return found
        c = self.c
        s = self.symbols[depth - 1]
        value, options = c.phi[s], c.option_masks[s]
        col = c.monoid.column(value)
        added = 0
        while True:
            mask = c.times(mask, value) | c.times(options, x)
            x = col[x]
            beans += s + 1
            if self.max_beans is not None and beans > self.max_beans:
                break
            if self.prune and self.table.subsumed(x, mask):
                break
            self.counts[s] += 1
            added += 1
            found = self._descend(depth - 1, x, mask, beans)
            if found is not None:
                break
        self.counts[s] -= added
        return found

    def _visit(self, x: int, mask: int) -> Failure | None:
        if not any(self.counts):
            return None
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceededError(
                f"verification visited more than {self.max_nodes} positions",
                budget="nodes",
                frontier=Position(tuple(self.counts)),
            )
        m = self.c.monoid
        if self.stop_at_failure and x not in m.pset and not mask & m.p_mask:
            return Failure(Position(tuple(self.counts)), FailureKind.N)
        self.table.add(x, mask)
        return None


def n_verify(
    c: Candidate,
    rules: RuleSet,
    prune: bool = True,
    max_nodes: int | None = None,
    max_beans: int | None = None,
) -> Failure | None:
    """Least position outside P with no option in P.

    With ``prune=False`` every position up to ``max_beans`` is visited.
    """
    walk = _Traversal(c, True, prune, max_nodes, max_beans)
    try:
        return walk.run()
    finally:
        record_nodes("n_verify", walk.nodes)


def collect_transitions(
    c: Candidate, max_nodes: int | None = None
) -> TransitionTable:
    """Minimal realized (value, option images) pairs of a converged candidate."""
    walk = _Traversal(c, False, True, max_nodes)
    try:
        walk.run()
    finally:
        record_nodes("transitions", walk.nodes)
    return walk.table


def least_failure(
    c: Candidate, rules: RuleSet, max_nodes: int | None = None
) -> Failure | None:
    found = earliest(p_verify(c, rules), n_verify(c, rules, max_nodes=max_nodes))
    c.failure, c.failure_known = found, True
    return found


def exhaustive_least_failure(c: Candidate, rules: RuleSet, max_beans: int) -> Failure | None:
    """Least failure among heap positions of at most max_beans beans, by definition.

    Options come from the rule set, not from the candidate's option images.
    """
    best: Failure | None = None
    pset = c.monoid.pset
    visited = 0
    limit = min(max_beans, c.size)
    for x in iter_heap_positions(max_beans, limit):
        if any(c.is_dead(s) for s in x.support()):
            continue
        visited += 1
        inside = c.evaluate(x) in pset
        any_option_in_p = any(c.evaluate(o) in pset for o in position_options(rules, x))
        if inside and any_option_in_p:
            found = Failure(x, FailureKind.P)
        elif not inside and not any_option_in_p:
            found = Failure(x, FailureKind.N)
        else:
            continue
        if best is None or found < best:
            best = found
    record_nodes("exhaustive", visited)
    return best
