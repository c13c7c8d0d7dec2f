"""Recalibration: grow a candidate so its least failure moves strictly forward.

Given the least failure F, some symbols in the support of F are freed: each
gets a fresh cyclic generator t with t^(n+k) = t^n, while the remaining
symbols keep their old images in the submonoid Q- they generate. P is then
rebuilt by induction along the <lex-least preimages of Q- x R(n,k)^m, and
the result is reduced.
"""

import logging
import time
from collections.abc import Iterator
from itertools import combinations

from pydantic import BaseModel, Field

from misere.algebra.monoid import BipartiteMonoid, best_first_words
from misere.algebra.reduction import reduce_bipartite
from misere.config import settings
from misere.core.exceptions import BudgetExceededError, OrderBoundError, RecalibrationStuckError
from misere.core.metrics import record_recalibration
from misere.games.rules import Position, RuleSet
from misere.solver.candidate import Candidate, Failure
from misere.solver.verification import least_failure

logger = logging.getLogger(__name__)

State = tuple[int, ...]  # (element of Q-, exponent of each fresh generator)


class RecalibrationPolicy(BaseModel):
    """Which (n, k) pairs to try and how large an expansion may get."""

    schedule: list[tuple[int, int]] = Field(default_factory=lambda: [(2, 2)])
    max_elements: int = 4096
    max_nodes: int = 10_000_000

    @classmethod
    def from_settings(cls) -> "RecalibrationPolicy":
        schedule = []
        n, k = settings.recal_base_n, settings.recal_base_k
        while n <= settings.recal_n_cap:
            schedule.append((n, k))
            n += settings.recal_n_step
        n = schedule[-1][0] if schedule else settings.recal_base_n
        k *= 2
        while k <= settings.recal_k_cap:
            schedule.append((n, k))
            k *= 2
        return cls(
            schedule=schedule,
            max_elements=settings.max_elements,
            max_nodes=settings.max_nodes,
        )


def covering_n(n: int, failure: Failure, freed: tuple[int, ...]) -> int:
    """Smallest transient length at least n that keeps the failure's powers apart.

    A freed symbol used c times in the failure needs t^c outside the cycle of
    R(n, k), otherwise the failure shares its state with a smaller position.
    """
    counts = failure.position.counts
    return max([n, *(counts[s] + 1 for s in freed if s < len(counts))])


def subset_order(support: list[int]) -> Iterator[tuple[int, ...]]:
    """Singletons by descending symbol, then pairs, then the whole support."""
    ordered = sorted(support, reverse=True)
    seen: set[tuple[int, ...]] = set()
    for size in (1, 2):
        for subset in combinations(ordered, size):
            if subset not in seen:
                seen.add(subset)
                yield subset
    whole = tuple(ordered)
    if whole not in seen:
        yield whole


class _Expansion:
    """Q- x R(n,k)^m with its alphabet assignment."""

    def __init__(self, c: Candidate, freed: tuple[int, ...], n: int, k: int):
        self.q = c.monoid
        self.n, self.k = n, k
        self.slot = {s: i for i, s in enumerate(sorted(freed))}
        zero = (0,) * len(self.slot)
        self.identity: State = (self.q.identity,) + zero
        self.images: list[State] = []
        for s, value in enumerate(c.phi):
            if s in self.slot:
                exps = list(zero)
                exps[self.slot[s]] = 1
                self.images.append((self.q.identity, *exps))
            else:
                self.images.append((value,) + zero)

    def _add(self, a: int, b: int) -> int:
        total = a + b
        if total >= self.n:
            total = self.n + (total - self.n) % self.k
        return total

    def multiply(self, u: State, v: State) -> State:
        head = self.q.multiply(u[0], v[0])
        return (head, *(self._add(a, b) for a, b in zip(u[1:], v[1:])))

    def evaluate(self, x: Position) -> State:
        value = self.identity
        for s, count in enumerate(x.counts):
            for _ in range(count):
                value = self.multiply(value, self.images[s])
        return value


class _SymbolStep:
    def __init__(self, expansion: _Expansion, image: State):
        self.expansion = expansion
        self.image = image

    def __getitem__(self, state: State) -> State:
        return self.expansion.multiply(state, self.image)


def expand(
    c: Candidate,
    rules: RuleSet,
    freed: tuple[int, ...],
    n: int,
    k: int,
    max_elements: int,
) -> Candidate:
    """The reduced candidate obtained by freeing ``freed`` with R(n, k)."""
    ex = _Expansion(c, freed, n, k)
    steps = [_SymbolStep(ex, image) for image in ex.images]
    order = best_first_words(ex.identity, steps, limit=max_elements)
    index = {state: i for i, (state, _) in enumerate(order)}
    by_word = {counts: state for state, counts in order}

    symbol_options = [
        frozenset(ex.evaluate(o) for o in rules.generator_options(s)) for s in range(c.size)
    ]
    option_sets: dict[State, frozenset[State]] = {ex.identity: frozenset()}
    pstar: set[State] = set()
    for state, counts in order:
        if not counts:
            continue
        top = len(counts) - 1
        parent_word = Position(counts).remove(top).counts
        parent = by_word[parent_word]
        image = ex.images[top]
        options = frozenset(ex.multiply(y, image) for y in option_sets[parent]) | frozenset(
            ex.multiply(parent, y) for y in symbol_options[top]
        )
        option_sets[state] = options
        if options.isdisjoint(pstar):
            pstar.add(state)

    generators: list[State] = []
    for image in ex.images:
        if image != ex.identity and image not in generators:
            generators.append(image)
    actions = [[index[ex.multiply(state, g)] for state, _ in order] for g in generators]
    expanded, relabel = BipartiteMonoid.from_actions(
        actions, index[ex.identity], pset=[index[p] for p in pstar]
    )
    reduced, factor = reduce_bipartite(expanded)
    phi = [factor[relabel[index[image]]] for image in ex.images]
    logger.debug(
        f"expansion freed={[s + 1 for s in freed]} R({n},{k}): "
        f"|Q*|={len(order)} reduced to {len(reduced)}"
    )
    return Candidate.build(
        reduced, phi, rules, {"freed": [s + 1 for s in freed], "n": n, "k": k}
    )


def recalibrate(
    c: Candidate,
    failure: Failure,
    rules: RuleSet,
    policy: RecalibrationPolicy | None = None,
    deadline: float | None = None,
) -> Candidate:
    """A candidate whose least failure is None or strictly after ``failure``.

    The returned candidate carries its least failure (``failure``/``failure_known``)
    and the freed subset and (n, k) in ``provenance``.
    """
    policy = policy or RecalibrationPolicy.from_settings()
    support = failure.position.support()
    too_large = 0
    attempts: list[dict[str, object]] = []
    tried: set[tuple[tuple[int, ...], int, int]] = set()
    for base_n, k in policy.schedule:
        for freed in subset_order(support):
            n = covering_n(base_n, failure, freed)
            if (freed, n, k) in tried:
                continue
            tried.add((freed, n, k))
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceededError("wall clock budget exhausted", budget="seconds")
            try:
                candidate = expand(c, rules, freed, n, k, policy.max_elements)
            except OrderBoundError:
                too_large += 1
                record_recalibration("too_large")
                attempts.append(
                    {"freed": [s + 1 for s in freed], "n": n, "k": k, "result": "too_large"}
                )
                continue
            found = least_failure(candidate, rules, max_nodes=policy.max_nodes)
            if found is None or failure < found:
                record_recalibration("accepted")
                return candidate
            record_recalibration("rejected")
            attempts.append(
                {"freed": [s + 1 for s in freed], "n": n, "k": k, "result": str(found)}
            )

    diagnostics = {"failure": str(failure), "order": c.order, "attempts": attempts}
    if too_large:
        raise BudgetExceededError(
            f"no expansion moved past {failure}; {too_large} of {len(attempts)} "
            f"exceeded {policy.max_elements} elements",
            budget="elements",
            frontier=failure.position,
        )
    raise RecalibrationStuckError(f"no expansion moved past {failure}", diagnostics)
