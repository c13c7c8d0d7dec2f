"""Transition lower bounds and the next-heap interpolation shortcut.

A converged partial quotient realizes pairs (phi(X), options(X)). When the
option images E of the next heap sit between some realized pair (x, D) and
the compatibility set of x, D <= E <= M_x, the next heap must take the
value x.
"""

from dataclasses import dataclass, field
from typing import Literal

from misere.algebra.monoid import BipartiteMonoid
from misere.config import settings
from misere.solver.candidate import Candidate, TransitionTable
from misere.solver.verification import collect_transitions

Bound = Literal["compatible", "realized"]


def compatibility_masks(m: BipartiteMonoid) -> list[int]:
    """M_x = {y : no z has xz in P and yz in P}, one bitmask per x."""
    into_p = [0] * m.size  # z with xz in P
    for z in range(m.size):
        col = m.column(z)
        bit = 1 << z
        for x in range(m.size):
            if col[x] in m.pset:
                into_p[x] |= bit
    masks = []
    for x in range(m.size):
        zx = into_p[x]
        masks.append(sum(1 << y for y in range(m.size) if not zx & into_p[y]))
    return masks


@dataclass
class TransitionAlgebra:
    table: TransitionTable = field(default_factory=TransitionTable)
    compatible: list[int] = field(default_factory=list)

    def upper(self, x: int, bound: Bound) -> int:
        if bound == "realized":
            return self.table.unions.get(x, 0)
        return self.compatible[x] if x < len(self.compatible) else 0

    def pairs(self) -> list[tuple[int, frozenset[int]]]:
        return self.table.pairs()

    def is_empty(self) -> bool:
        return len(self.table) == 0


def transition_lower_bounds(c: Candidate, max_nodes: int | None = None) -> TransitionAlgebra:
    """Antichain of realized transitions of a converged candidate."""
    return TransitionAlgebra(collect_transitions(c, max_nodes), compatibility_masks(c.monoid))


def interpolate_next_heap(
    ta: TransitionAlgebra, options: int, bound: Bound | None = None
) -> int | None:
    """The forced value of a heap whose option images are ``options``, if any."""
    bound = bound or settings.interpolation_bound
    for x in sorted(ta.table.records):
        if options & ~ta.upper(x, bound):
            continue
        if ta.table.subsumed(x, options):
            return x
    return None


def candidate_values(
    ta: TransitionAlgebra, options: int, order: int, bound: Bound | None = None
) -> list[int]:
    """Values x whose upper bound admits ``options``, smallest first."""
    bound = bound or settings.interpolation_bound
    return [x for x in range(order) if not options & ~ta.upper(x, bound)]


def describe(ta: TransitionAlgebra, m: BipartiteMonoid) -> list[str]:
    return [
        f"({m.render(x)}, {{{', '.join(m.render(y) for y in sorted(e))}}})"
        for x, e in ta.pairs()
    ]
