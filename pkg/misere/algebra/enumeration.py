"""Enumerate a finitely presented commutative monoid into explicit tables.

Coset enumeration in HLT style: every live node traces each relation (and
each commutation gh = hg), defining missing edges on the way, and the two
endpoints are merged. Merges propagate through a union-find forest.
"""

import logging
from collections.abc import Iterable

from misere.algebra.monoid import BipartiteMonoid
from misere.algebra.words import MonoidWord, Presentation, parse_word
from misere.config import settings
from misere.core.exceptions import OrderBoundError

logger = logging.getLogger(__name__)


class _CosetTable:
    def __init__(self, rank: int, cap: int):
        self.rank = rank
        self.cap = cap
        self.parent: list[int] = [0]
        self.edges: list[list[int | None]] = [[None] * rank]
        self.live = 1

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            x, p[x] = p[x], p[p[x]]
        return x

    def new_node(self) -> int:
        node = len(self.parent)
        self.parent.append(node)
        self.edges.append([None] * self.rank)
        self.live += 1
        if self.live > self.cap:
            raise OrderBoundError(
                f"enumeration passed {self.cap} live elements; the presentation may be infinite"
            )
        return node

    def follow(self, x: int, g: int) -> int:
        x = self.find(x)
        target = self.edges[x][g]
        if target is None:
            target = self.new_node()
            self.edges[x][g] = target
        return self.find(target)

    def trace(self, x: int, letters: list[int]) -> int:
        for g in letters:
            x = self.follow(x, g)
        return x

    def merge(self, a: int, b: int) -> None:
        pending = [(a, b)]
        while pending:
            a, b = pending.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if b < a:
                a, b = b, a
            self.parent[b] = a
            self.live -= 1
            for g in range(self.rank):
                tb = self.edges[b][g]
                if tb is None:
                    continue
                ta = self.edges[a][g]
                if ta is None:
                    self.edges[a][g] = tb
                else:
                    pending.append((ta, tb))


def monoid_from_presentation(
    pres: Presentation,
    bound: int | None = None,
    pset: Iterable[MonoidWord | str] | None = None,
) -> BipartiteMonoid:
    """Explicit monoid of a commutative presentation, P attached if given.

    Raises OrderBoundError when the monoid has more than ``bound`` elements
    or the enumeration blows past its working cap.
    """
    bound = bound or settings.presentation_bound
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rank = pres.rank
    table = _CosetTable(rank, max(4 * bound, bound + 256))

    rules: list[tuple[list[int], list[int]]] = [
        (u.letters(), v.letters()) for u, v in pres.relations
    ]
    for g in range(rank):
        for h in range(g + 1, rank):
            rules.append(([g, h], [h, g]))

    x = 0
    while x < len(table.parent):
        if table.find(x) == x:
            for left, right in rules:
                if table.find(x) != x:
                    break
                table.merge(table.trace(x, left), table.trace(x, right))
            if table.find(x) == x:
                for g in range(rank):
                    table.follow(x, g)
        x += 1

    live = [n for n in range(len(table.parent)) if table.find(n) == n]
    if len(live) > bound:
        raise OrderBoundError(f"monoid order {len(live)} exceeds bound {bound}")
    index = {n: i for i, n in enumerate(live)}
    actions = [
        [index[table.find(table.edges[n][g])] for n in live]  # type: ignore[arg-type]
        for g in range(rank)
    ]
    m, _ = BipartiteMonoid.from_actions(actions, index[table.find(0)], pres.generators)
    logger.debug(f"enumerated {pres} to order {len(m)} ({len(table.parent)} nodes defined)")

    if pset is not None:
        words = [parse_word(w, pres.generators) if isinstance(w, str) else w for w in pset]
        m = m.with_p(m.evaluate(w) for w in words)
    return m
