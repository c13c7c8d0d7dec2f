"""Positions over a finite alphabet and the move rules that generate them."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import total_ordering
from typing import TYPE_CHECKING, Literal

from misere.core.exceptions import AlphabetBoundError
from misere.games.codes import OctalCode, heap_options
from misere.games.dag import EMPTY, GameDag

if TYPE_CHECKING:
    from misere.games.oracle import OutcomeOracle


@total_ordering
@dataclass(frozen=True, slots=True)
class Position:
    """Exponent vector over the alphabet; counts[i] copies of symbol i.

    Trailing zeros are stripped so equal positions compare equal. Ordering is
    <lex: the largest differing index decides.
    """

    counts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.counts and self.counts[-1] == 0:
            object.__setattr__(self, "counts", _strip(self.counts))

    @classmethod
    def zero(cls) -> "Position":
        return cls(())

    @classmethod
    def unit(cls, index: int, times: int = 1) -> "Position":
        return cls((0,) * index + (times,))

    @classmethod
    def from_heaps(cls, heaps: Iterable[int]) -> "Position":
        """Position of a multiset of heap sizes (heap k is symbol k - 1)."""
        counts: list[int] = []
        for k in heaps:
            if k < 1:
                raise ValueError(f"heap sizes must be positive, got {k}")
            if len(counts) < k:
                counts.extend([0] * (k - len(counts)))
            counts[k - 1] += 1
        return cls(tuple(counts))

    def __len__(self) -> int:
        return len(self.counts)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Position):
            return NotImplemented
        return self.lex_key() < other.lex_key()

    def __add__(self, other: "Position") -> "Position":
        a, b = self.counts, other.counts
        if len(a) < len(b):
            a, b = b, a
        return Position(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __str__(self) -> str:
        return self.render()

    def lex_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self.counts), self.counts[::-1]

    def count(self, index: int) -> int:
        return self.counts[index] if index < len(self.counts) else 0

    def add(self, index: int, times: int = 1) -> "Position":
        counts = list(self.counts)
        if len(counts) <= index:
            counts.extend([0] * (index + 1 - len(counts)))
        counts[index] += times
        return Position(tuple(counts))

    def remove(self, index: int) -> "Position":
        if self.count(index) == 0:
            raise ValueError(f"symbol {index} not present in {self}")
        counts = list(self.counts)
        counts[index] -= 1
        return Position(tuple(counts))

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.counts) if c]

    def is_zero(self) -> bool:
        return not self.counts

    def total(self) -> int:
        """Number of beans when the alphabet is heap sizes."""
        return sum((i + 1) * c for i, c in enumerate(self.counts))

    def heaps(self) -> list[int]:
        return [i + 1 for i, c in enumerate(self.counts) for _ in range(c)]

    def render(self, prefix: str = "H") -> str:
        if not self.counts:
            return "0"
        return "+".join(f"{prefix}{i + 1}" for i, c in enumerate(self.counts) for _ in range(c))


def _strip(counts: tuple[int, ...]) -> tuple[int, ...]:
    end = len(counts)
    while end and counts[end - 1] == 0:
        end -= 1
    return counts[:end]


class RuleSet:
    """Move rules over a finite alphabet: heaps of an octal game, or DAG nodes.

    Symbol options must only use earlier symbols, so every prefix of the
    alphabet is itself closed.
    """

    def __init__(
        self,
        kind: Literal["heap", "dag"],
        size: int,
        code: OctalCode | None = None,
        dag: GameDag | None = None,
        generators: tuple[int, ...] = (),
    ):
        self.kind = kind
        self.size = size
        self.code = code
        self.dag = dag
        self.generators = generators
        self._node_index = {node: i for i, node in enumerate(generators)}
        self._options: dict[int, tuple[Position, ...]] = {}
        self._oracle: "OutcomeOracle | None" = None

    @classmethod
    def heaps(cls, code: OctalCode, n: int) -> "RuleSet":
        return cls("heap", n, code=code)

    @classmethod
    def from_dag(cls, dag: GameDag, generators: Iterable[int] | None = None) -> "RuleSet":
        gens = tuple(dag.closure_generators() if generators is None else generators)
        if EMPTY in gens:
            raise ValueError("the empty game cannot be a generator")
        return cls("dag", len(gens), dag=dag, generators=gens)

    def __repr__(self) -> str:
        return f"RuleSet({self.describe()}, size={self.size})"

    def describe(self) -> str:
        if self.kind == "heap":
            return str(self.code)
        assert self.dag is not None
        return self.dag.render()

    def symbol_name(self, index: int) -> str:
        if self.kind == "heap":
            return f"H{index + 1}"
        assert self.dag is not None
        return self.dag.render(self.generators[index])

    def generator_options(self, index: int) -> tuple[Position, ...]:
        cached = self._options.get(index)
        if cached is not None:
            return cached
        if not 0 <= index < self.size:
            raise AlphabetBoundError(f"symbol {index + 1} outside alphabet of size {self.size}")
        if self.kind == "heap":
            assert self.code is not None
            opts = tuple(Position.from_heaps(h) for h in heap_options(self.code, index + 1))
        else:
            assert self.dag is not None
            opts = tuple(self._node_position(o) for o in self.dag.options(self.generators[index]))
        self._options[index] = opts
        return opts

    def is_dead(self, index: int) -> bool:
        return not self.generator_options(index)

    def position_of_heaps(self, heaps: Iterable[int]) -> Position:
        x = Position.from_heaps(heaps)
        self.check(x)
        return x

    def position_of_node(self, node: int) -> Position:
        if self.kind != "dag":
            raise ValueError("node positions only exist for DAG rule sets")
        return self._node_position(node)

    def check(self, x: Position) -> None:
        if len(x) > self.size:
            what = "heap size" if self.kind == "heap" else "symbol"
            raise AlphabetBoundError(f"{what} {len(x)} exceeds alphabet bound {self.size}")

    def _node_position(self, node: int) -> Position:
        if node == EMPTY:
            return Position.zero()
        if node not in self._node_index:
            raise AlphabetBoundError(f"node {node} is not a generator of this rule set")
        return Position.unit(self._node_index[node])

    def oracle(self) -> "OutcomeOracle":
        """Shared outcome/Grundy oracle for this rule set."""
        from misere.games.oracle import OutcomeOracle

        if self._oracle is None:
            self._oracle = OutcomeOracle(self)
        return self._oracle


def position_options(rules: RuleSet, x: Position) -> set[Position]:
    """All positions reachable from x in one move."""
    rules.check(x)
    found: set[Position] = set()
    for i in x.support():
        opts = rules.generator_options(i)
        if not opts:
            continue
        rest = x.remove(i)
        for o in opts:
            found.add(rest + o)
    return found


def iter_heap_positions(
    max_beans: int, max_heap: int, max_heaps: int | None = None
) -> Iterator[Position]:
    """Every nonempty heap multiset with at most max_beans beans, smallest totals first."""
    for total in range(1, max_beans + 1):
        for parts in _partitions(total, min(total, max_heap)):
            if max_heaps is None or len(parts) <= max_heaps:
                yield Position.from_heaps(parts)


def _partitions(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest
