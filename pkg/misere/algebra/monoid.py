"""Explicit finite commutative monoids with a distinguished subset P."""

import heapq
from collections.abc import Hashable, Iterable, Sequence
from typing import Any, Protocol, TypeVar

from misere.algebra.words import MonoidWord, generator_names, render_word
from misere.core.exceptions import OrderBoundError

S = TypeVar("S", bound=Hashable)


class Step(Protocol):
    def __getitem__(self, state: Any) -> Any: ...


def best_first_words(
    identity: S, steps: Sequence[Step], limit: int | None = None
) -> list[tuple[S, tuple[int, ...]]]:
    """Reachable states with their <lex-least words, in <lex order of those words.

    steps[s][x] is x times the image of symbol s. Every sub-word of a
    lex-least word is lex-least, so extending only first arrivals is enough.
    """
    found: dict[S, tuple[int, ...]] = {}
    order: list[tuple[S, tuple[int, ...]]] = []
    heap: list[tuple[tuple[int, tuple[int, ...]], int, S, tuple[int, ...]]] = [
        ((0, ()), 0, identity, ())
    ]
    pushed = 0
    while heap:
        _, _, x, counts = heapq.heappop(heap)
        if x in found:
            continue
        found[x] = counts
        order.append((x, counts))
        if limit is not None and len(order) > limit:
            raise OrderBoundError(f"more than {limit} elements reachable")
        for s, step in enumerate(steps):
            y = step[x]
            if y in found:
                continue
            if len(counts) > s:
                bumped = counts[:s] + (counts[s] + 1,) + counts[s + 1 :]
            else:
                bumped = counts + (0,) * (s - len(counts)) + (1,)
            pushed += 1
            heapq.heappush(heap, ((len(bumped), bumped[::-1]), pushed, y, bumped))
    return order


class BipartiteMonoid:
    """Commutative monoid given by generator action tables, plus P.

    Elements are indices 0..size-1. Index order is the <lex order of each
    element's least generator word, so the identity is always 0.
    """

    def __init__(
        self,
        actions: Sequence[Sequence[int]],
        names: Sequence[str] | None = None,
        pset: Iterable[int] = (),
        size: int | None = None,
    ):
        self.actions: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in actions)
        self.size = size if size is not None else (len(self.actions[0]) if self.actions else 1)
        self.names: tuple[str, ...] = (
            tuple(names) if names is not None else generator_names(len(self.actions))
        )
        if len(self.names) != len(self.actions):
            raise ValueError("one name per generator required")
        self.identity = 0
        self.pset: frozenset[int] = frozenset(pset)
        order = best_first_words(0, self.actions)
        if len(order) != self.size:
            raise ValueError("monoid is not generated by its generators")
        if [x for x, _ in order] != list(range(self.size)):
            raise ValueError("element indices are not in canonical order; use from_actions")
        rank = len(self.actions)
        self.words: tuple[tuple[int, ...], ...] = tuple(
            counts + (0,) * (rank - len(counts)) for _, counts in order
        )
        self.p_mask = sum(1 << p for p in self.pset)
        self._columns: dict[int, tuple[int, ...]] = {}

    @classmethod
    def from_actions(
        cls,
        actions: Sequence[Sequence[int]],
        identity: int,
        names: Sequence[str] | None = None,
        pset: Iterable[int] = (),
    ) -> tuple["BipartiteMonoid", list[int]]:
        """Relabel arbitrary action tables into canonical order.

        Returns the monoid and the map old index -> new index. Elements not
        reachable from the identity are dropped (mapped to -1).
        """
        size = len(actions[0]) if actions else 1
        order = best_first_words(identity, actions)
        relabel = [-1] * size
        for new, (old, _) in enumerate(order):
            relabel[old] = new
        new_actions = [[0] * len(order) for _ in actions]
        for g, table in enumerate(actions):
            for old, _ in order:
                new_actions[g][relabel[old]] = relabel[table[old]]
        new_pset = [relabel[p] for p in pset if relabel[p] >= 0]
        return cls(new_actions, names, new_pset, size=len(order)), relabel

    @classmethod
    def trivial(cls) -> "BipartiteMonoid":
        return cls((), (), ())

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return (
            f"BipartiteMonoid(order={self.size}, generators={len(self.actions)}, "
            f"|P|={len(self.pset)})"
        )

    @property
    def rank(self) -> int:
        return len(self.actions)

    def generator_element(self, g: int) -> int:
        return self.actions[g][self.identity]

    def column(self, e: int) -> tuple[int, ...]:
        """x -> x*e for every element x."""
        col = self._columns.get(e)
        if col is None:
            values = list(range(self.size))
            for g, count in enumerate(self.words[e]):
                table = self.actions[g]
                for _ in range(count):
                    values = [table[v] for v in values]
            col = tuple(values)
            self._columns[e] = col
        return col

    def multiply(self, x: int, y: int) -> int:
        return self.column(y)[x]

    def product(self, elements: Iterable[int]) -> int:
        x = self.identity
        for e in elements:
            x = self.column(e)[x]
        return x

    def power(self, x: int, n: int) -> int:
        result = self.identity
        col = self.column(x)
        for _ in range(n):
            result = col[result]
        return result

    def evaluate(self, word: MonoidWord | Sequence[int]) -> int:
        exps = word.exponents if isinstance(word, MonoidWord) else word
        x = self.identity
        for g, count in enumerate(exps):
            table = self.actions[g]
            for _ in range(count):
                x = table[x]
        return x

    def in_p(self, x: int) -> bool:
        return x in self.pset

    def with_p(self, pset: Iterable[int]) -> "BipartiteMonoid":
        m = BipartiteMonoid.__new__(BipartiteMonoid)
        m.actions = self.actions
        m.size = self.size
        m.names = self.names
        m.identity = self.identity
        m.pset = frozenset(pset)
        m.words = self.words
        m.p_mask = sum(1 << p for p in m.pset)
        m._columns = self._columns
        return m

    def renamed(self, names: Sequence[str]) -> "BipartiteMonoid":
        m = self.with_p(self.pset)
        if len(names) != self.rank:
            raise ValueError("one name per generator required")
        m.names = tuple(names)
        return m

    def word(self, x: int) -> MonoidWord:
        return MonoidWord(self.words[x])

    def render(self, x: int) -> str:
        return render_word(self.word(x), self.names)

    def is_idempotent(self, x: int) -> bool:
        return self.multiply(x, x) == x

    def power_signature(self, x: int) -> tuple[int, int, tuple[bool, ...]]:
        """(index, period, P-pattern of x^1..x^(index+period-1)) of the cyclic submonoid."""
        seen: dict[int, int] = {}
        pattern: list[bool] = []
        col = self.column(x)
        y, n = x, 1
        while y not in seen:
            seen[y] = n
            pattern.append(y in self.pset)
            y = col[y]
            n += 1
        index = seen[y]
        return index, n - index, tuple(pattern)

    def products(self) -> list[list[int]]:
        """Full product table; only sensible for small monoids."""
        return [[self.multiply(x, y) for y in range(self.size)] for x in range(self.size)]


def lex_least_preimages(m: BipartiteMonoid, phi: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """Element -> least exponent vector (over the alphabet) mapping to it under phi.

    Unreachable elements are absent. Vectors have trailing zeros stripped.
    """
    steps = [m.column(e) for e in phi]
    return dict(best_first_words(m.identity, steps))
