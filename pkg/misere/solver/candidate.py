"""Candidate quotients and failures."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from misere.algebra.monoid import BipartiteMonoid
from misere.games.rules import Position, RuleSet


class FailureKind(str, Enum):
    P = "P"  # P-position with an option in P
    N = "N"  # N-position with no option in P
    SEED = "seed"  # new symbol carrying a placeholder value


@dataclass(frozen=True)
class Failure:
    position: Position
    kind: FailureKind

    def __lt__(self, other: "Failure") -> bool:
        return self.position < other.position

    def __str__(self) -> str:
        return f"{self.kind.value}-failure at {self.position}"


def earliest(*failures: Failure | None) -> Failure | None:
    found = [f for f in failures if f is not None]
    return min(found) if found else None


def mask_elements(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_image(mask: int, column: tuple[int, ...]) -> int:
    """{column[y] : y in mask} as a bitmask."""
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << column[low.bit_length() - 1]
        mask ^= low
    return out


class Candidate:
    """A reduced bipartite monoid with an assignment of alphabet symbols.

    The monoid's generators are the distinct non-identity symbol images in
    symbol order, so element indices follow the <lex order of each element's
    least alphabet preimage. option_masks[s] is the bitmask of option images
    of symbol s.
    """

    def __init__(
        self,
        monoid: BipartiteMonoid,
        phi: tuple[int, ...],
        option_masks: tuple[int, ...],
        provenance: dict[str, Any] | None = None,
    ):
        self.monoid = monoid
        self.phi = phi
        self.option_masks = option_masks
        self.provenance = provenance or {}
        self.failure: Failure | None = None
        self.failure_known = False
        self._products: dict[tuple[int, int], int] = {}

    @classmethod
    def trivial(cls) -> "Candidate":
        return cls(BipartiteMonoid.trivial(), (), ())

    @classmethod
    def build(
        cls,
        monoid: BipartiteMonoid,
        phi: tuple[int, ...] | list[int],
        rules: RuleSet,
        provenance: dict[str, Any] | None = None,
    ) -> "Candidate":
        """Relabel canonically and compute option images for every symbol."""
        images: list[int] = []
        for v in phi:
            if v != monoid.identity and v not in images:
                images.append(v)
        canonical, relabel = BipartiteMonoid.from_actions(
            [monoid.column(v) for v in images], monoid.identity, None, monoid.pset
        )
        if canonical.size != monoid.size:
            raise ValueError("symbol images do not generate the monoid")
        new_phi = tuple(relabel[v] for v in phi)
        candidate = cls(canonical, new_phi, (), provenance)
        masks = []
        for s in range(len(new_phi)):
            mask = 0
            for option in rules.generator_options(s):
                mask |= 1 << candidate.evaluate(option)
            masks.append(mask)
        candidate.option_masks = tuple(masks)
        return candidate

    def __repr__(self) -> str:
        return f"Candidate(order={len(self.monoid)}, symbols={self.size})"

    @property
    def size(self) -> int:
        return len(self.phi)

    @property
    def order(self) -> int:
        return self.monoid.size

    def is_dead(self, s: int) -> bool:
        return self.option_masks[s] == 0

    def evaluate(self, x: Position) -> int:
        m = self.monoid
        value = m.identity
        for s, c in enumerate(x.counts):
            if c:
                col = m.column(self.phi[s])
                for _ in range(c):
                    value = col[value]
        return value

    def times(self, mask: int, element: int) -> int:
        """mask * element, memoized."""
        key = (mask, element)
        out = self._products.get(key)
        if out is None:
            out = mask_image(mask, self.monoid.column(element))
            self._products[key] = out
        return out

    def option_mask(self, x: Position) -> int:
        """Option images of position x: grown one symbol at a time."""
        value, mask = self.monoid.identity, 0
        for s, c in enumerate(x.counts):
            for _ in range(c):
                mask = self.times(mask, self.phi[s]) | self.times(self.option_masks[s], value)
                value = self.monoid.column(self.phi[s])[value]
        return mask

    def option_images(self, x: Position) -> set[int]:
        return set(mask_elements(self.option_mask(x)))

    def in_p(self, x: Position) -> bool:
        return self.evaluate(x) in self.monoid.pset

    def with_symbol(self, value: int, rules: RuleSet) -> "Candidate":
        """Same monoid, one more symbol mapped to ``value``."""
        return Candidate.build(self.monoid, self.phi + (value,), rules, self.provenance)

    def truncated(self, size: int, rules: RuleSet) -> "Candidate":
        return Candidate.build(self.monoid, self.phi[:size], rules, self.provenance)


@dataclass
class TransitionTable:
    """Antichain of minimal (value, option-image mask) pairs, plus realized unions."""

    records: dict[int, list[int]] = field(default_factory=dict)
    unions: dict[int, int] = field(default_factory=dict)

    def subsumed(self, x: int, mask: int) -> bool:
        return any(d & ~mask == 0 for d in self.records.get(x, ()))

    def add(self, x: int, mask: int) -> None:
        self.unions[x] = self.unions.get(x, 0) | mask
        current = self.records.get(x, [])
        if any(d & ~mask == 0 for d in current):
            return
        self.records[x] = [d for d in current if mask & ~d != 0] + [mask]

    def pairs(self) -> list[tuple[int, frozenset[int]]]:
        found = [(x, mask_elements(d)) for x, masks in self.records.items() for d in masks]
        return [(x, frozenset(e)) for x, e in sorted(found)]

    def __len__(self) -> int:
        return sum(len(v) for v in self.records.values())
