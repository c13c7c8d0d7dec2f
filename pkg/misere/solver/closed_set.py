"""Convergence loop over a growing alphabet, and the solution it produces."""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from pydantic import BaseModel

from misere.algebra.enumeration import monoid_from_presentation
from misere.algebra.monoid import BipartiteMonoid
from misere.algebra.presentation import extract_presentation
from misere.algebra.words import Presentation, generator_names, parse_word
from misere.config import settings
from misere.core.exceptions import BudgetExceededError, OrderBoundError
from misere.core.metrics import record_solve
from misere.core.tracing import TraceEvent, emit
from misere.games.rules import Position, RuleSet
from misere.solver.candidate import Candidate, Failure, FailureKind
from misere.solver.recalibration import RecalibrationPolicy, recalibrate

logger = logging.getLogger(__name__)


class SolveLimits(BaseModel):
    max_elements: int = 4096
    max_nodes: int = 10_000_000
    max_seconds: float = 600.0

    @classmethod
    def from_settings(cls) -> "SolveLimits":
        return cls(
            max_elements=settings.max_elements,
            max_nodes=settings.max_nodes,
            max_seconds=settings.max_seconds,
        )

    def policy(self) -> RecalibrationPolicy:
        policy = RecalibrationPolicy.from_settings()
        return policy.model_copy(
            update={"max_elements": self.max_elements, "max_nodes": self.max_nodes}
        )


@dataclass
class QuotientSolution:
    """A (possibly partial) quotient with its pretending function.

    Generators are named in symbol order: a symbol gets a new letter when
    its value lies outside the submonoid generated by the earlier named
    values. Element indices follow the <lex order of generator words.
    """

    source: str
    kind: str
    monoid: BipartiteMonoid
    phi: list[int]
    symbols: list[str]
    partial_orders: list[int] = field(default_factory=list)
    converged: bool = True
    reason: str | None = None
    period_start: int | None = None  # first heap of the observed periodic tail
    period: int | None = None
    stable_from: int | None = None
    trace: list[TraceEvent] = field(default_factory=list)
    provenance: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def order(self) -> int:
        return self.monoid.size

    @property
    def names(self) -> tuple[str, ...]:
        return self.monoid.names

    def phi_words(self) -> list[str]:
        return [self.monoid.render(x) for x in self.phi]

    def pset_words(self) -> list[str]:
        return [self.monoid.render(x) for x in sorted(self.monoid.pset)]

    def presentation(self) -> Presentation:
        return extract_presentation(self.monoid)

    def value(self, x: Position) -> int:
        return self.monoid.product(self.phi[s] for s, c in enumerate(x.counts) for _ in range(c))

    def to_record(self) -> dict[str, Any]:
        """Catalog-shaped JSON record."""
        return {
            "code": self.source,
            "kind": self.kind,
            "generators": list(self.names),
            "presentation": self.presentation().pairs(),
            "pset": self.pset_words(),
            "phi": {
                "preperiod": len(self.phi) - self.period if self.period else None,
                "period": self.period,
                "words": self.phi_words(),
            },
            "order": self.order,
            "partial_orders": self.partial_orders,
            "symbols": self.symbols,
            "converged": self.converged,
            "reason": self.reason,
            "period_start": self.period_start,
            "stable_from": self.stable_from,
            "provenance": self.provenance,
        }

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> "QuotientSolution":
        pres = Presentation.from_pairs(record["generators"], record["presentation"])
        monoid = monoid_from_presentation(pres, pset=record["pset"])
        phi = [monoid.evaluate(parse_word(w, pres.generators)) for w in record["phi"]["words"]]
        return cls(
            source=record["code"],
            kind=record.get("kind", "heap"),
            monoid=monoid,
            phi=phi,
            symbols=record.get("symbols") or [f"H{i + 1}" for i in range(len(phi))],
            partial_orders=record.get("partial_orders", []),
            converged=record.get("converged", True),
            reason=record.get("reason"),
            period_start=record.get("period_start"),
            period=record["phi"].get("period"),
            stable_from=record.get("stable_from"),
            provenance=record.get("provenance", {}),
        )


def name_generators(
    monoid: BipartiteMonoid, phi: list[int] | tuple[int, ...]
) -> tuple[BipartiteMonoid, list[int]]:
    """Relabel so generators are the symbol values that needed a new letter."""
    named: list[int] = []
    generated = {monoid.identity}
    for v in phi:
        if v in generated:
            continue
        named.append(v)
        frontier = list(generated)
        col = monoid.column(v)
        while frontier:
            y = col[frontier.pop()]
            if y not in generated:
                generated.add(y)
                frontier.append(y)
    result, relabel = BipartiteMonoid.from_actions(
        [monoid.column(v) for v in named],
        monoid.identity,
        generator_names(len(named)),
        monoid.pset,
    )
    return result, [relabel[v] for v in phi]


def solution_from_candidate(
    c: Candidate, rules: RuleSet, source: str, **extra: Any
) -> QuotientSolution:
    monoid, phi = name_generators(c.monoid, c.phi)
    symbols = [rules.symbol_name(s) for s in range(c.size)]
    return QuotientSolution(
        source=source, kind=rules.kind, monoid=monoid, phi=phi, symbols=symbols, **extra
    )


def resolve_symbol(
    c: Candidate,
    rules: RuleSet,
    policy: RecalibrationPolicy,
    trace: list[TraceEvent],
    source: str = "",
    deadline: float | None = None,
) -> Candidate:
    """Extend a converged candidate by the next symbol and recalibrate to convergence.

    The new symbol starts at the identity with itself as the least failure.
    """
    s = c.size
    if rules.is_dead(s):
        return c.with_symbol(c.monoid.identity, rules)
    candidate = c.with_symbol(c.monoid.identity, rules)
    failure: Failure | None = Failure(Position.unit(s), FailureKind.SEED)
    started = time.monotonic()
    while failure is not None:
        candidate = recalibrate(candidate, failure, rules, policy, deadline)
        trace.append(
            emit(
                TraceEvent(
                    event="recalibrated",
                    source=source,
                    heap=s + 1,
                    order=candidate.order,
                    failure=list(failure.position.counts),
                    failure_kind=failure.kind.value,
                    freed=candidate.provenance.get("freed"),
                    n=candidate.provenance.get("n"),
                    k=candidate.provenance.get("k"),
                    elapsed=round(time.monotonic() - started, 6),
                )
            )
        )
        failure = candidate.failure
    return candidate


def solve_closed_set(
    rules: RuleSet,
    limits: SolveLimits | None = None,
    source: str | None = None,
    on_symbol: Callable[[int, Candidate], None] | None = None,
) -> QuotientSolution:
    """Quotient of the closed set generated by the rule set's alphabet.

    Budget exhaustion returns the last converged prefix with ``converged=False``.
    """
    limits = limits or SolveLimits.from_settings()
    policy = limits.policy()
    source = source or rules.describe()
    started = time.monotonic()
    deadline = started + limits.max_seconds
    c = Candidate.trivial()
    partial: list[int] = []
    trace: list[TraceEvent] = []
    reason = None

    for s in range(rules.size):
        try:
            if time.monotonic() > deadline:
                raise BudgetExceededError("wall clock budget exhausted", budget="seconds")
            c = resolve_symbol(c, rules, policy, trace, source, deadline)
        except (BudgetExceededError, OrderBoundError) as e:
            reason = e.message
            logger.warning(f"{source}: stopped at symbol {s + 1}: {reason}")
            event = TraceEvent(event="budget", source=source, heap=s + 1, extra={"reason": reason})
            trace.append(emit(event))
            break
        partial.append(c.order)
        if on_symbol is not None:
            on_symbol(s + 1, c)

    elapsed = time.monotonic() - started
    trace.append(
        emit(
            TraceEvent(
                event="converged" if reason is None else "partial",
                source=source,
                order=c.order,
                elapsed=round(elapsed, 6),
            )
        )
    )
    record_solve("closed_set", elapsed, c.order)
    return solution_from_candidate(
        c,
        rules,
        source,
        partial_orders=partial,
        converged=reason is None,
        reason=reason,
        trace=trace,
        elapsed=elapsed,
    )
