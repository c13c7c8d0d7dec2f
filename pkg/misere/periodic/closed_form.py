"""Closed-form outcomes for 0.26 and 4.7.

Every heap carries three numbers: t and w, which add over sums, and its
Grundy value g, which nim-adds. Writing G = X + H with H a largest heap,
G is a P-position iff one of

    (i)   t(G) = 0 and g(G) = 1
    (ii)  t(G) != 0, w(H) <= t(X) and g(G) = 0
    (iii) t(G) != 0, w(H) >= t(X) + 2 and g(G) = 2 (0.26) or 3 (4.7)
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import cast

from pydantic import BaseModel, Field

from misere.algebra.monoid import lex_least_preimages
from misere.core.exceptions import UnknownGeneratorError
from misere.games.codes import parse_octal_code
from misere.games.oracle import Outcome
from misere.games.rules import Position, RuleSet
from misere.periodic.elements import (
    TAGS,
    ApElement,
    Tag,
    ap_in_P,
    ap_normalize,
    ap_phi,
    ap_position_element,
)
from misere.solver.closed_set import QuotientSolution

logger = logging.getLogger(__name__)

_CASE_III_GRUNDY = {"0.26": 2, "4.7": 3}


@dataclass(frozen=True)
class TwValues:
    t: int
    w: int
    g: int


def tw_values(tag: Tag, k: int) -> TwValues:
    if k < 1:
        raise ValueError(f"heap size must be positive, got {k}")
    if tag == "0.26":
        if k <= 2:
            t = 0
        elif k <= 4:
            t = 1
        else:
            t = (k - 5) // 2
        if k <= 8:
            w = 0
        elif k <= 10:
            w = 1
        elif k % 2 == 1:
            w = (k - 7) // 2
        else:
            w = (k - 12) // 2
        return TwValues(t, w, (k - 1) % 4)
    t = 0 if k == 1 else 1 if k == 2 else k - 3
    w = 0 if k <= 4 else 1 if k == 5 else k - 6
    return TwValues(t, w, 2 if k % 2 == 0 else 1)


def _heaps(position: Position | Iterable[int]) -> list[int]:
    return position.heaps() if isinstance(position, Position) else sorted(position)


def ap_outcome(tag: Tag, position: Position | Iterable[int]) -> Outcome:
    heaps = _heaps(position)
    if not heaps:
        return Outcome.N
    largest = max(heaps)
    t_total = 0
    g_total = 0
    for k in heaps:
        values = tw_values(tag, k)
        t_total += values.t
        g_total ^= values.g
    top = tw_values(tag, largest)
    t_rest = t_total - top.t

    if t_total == 0:
        is_p = g_total == 1
    elif top.w <= t_rest:
        is_p = g_total == 0
    elif top.w >= t_rest + 2:
        is_p = g_total == _CASE_III_GRUNDY[tag]
    else:
        is_p = False
    return Outcome.P if is_p else Outcome.N


def family_phi_words(solution: QuotientSolution, tag: str) -> list[str]:
    """Phi of a heap-by-heap solution of 0.26 or 4.7 in closed-form family names.

    Each value is written as the closed-form product over its least preimage, so the
    new generators of 0.26 read c0, c1, ... instead of fresh letters.
    """
    if tag not in TAGS:
        raise UnknownGeneratorError(f"no closed form for {tag!r}")
    family = cast(Tag, tag)
    preimages = lex_least_preimages(solution.monoid, solution.phi)
    words: dict[int, str] = {}
    for v in set(solution.phi):
        words[v] = ap_position_element(family, Position(preimages[v]).heaps()).render()
    return [words[v] for v in solution.phi]


def bridge_product(tag: Tag, k: int, k2: int) -> tuple[ApElement, ApElement]:
    """Both sides of phi(H_k) phi(H_k2) = a^g(H_k) b^t(H_k) phi(H_k2), k <= k2."""
    if k > k2:
        k, k2 = k2, k
    values = tw_values(tag, k)
    lhs = ap_normalize(tag, [ap_phi(tag, k), ap_phi(tag, k2)])
    rhs = ap_normalize(tag, [ApElement(tag, i=values.g % 2, m=values.t), ap_phi(tag, k2)])
    return lhs, rhs


def bridge_power(tag: Tag, m: int, k: int) -> tuple[ApElement, ApElement]:
    """Both sides of b^m phi(H_k) = a^g b^(m+t), valid once w(H_k) <= m."""
    values = tw_values(tag, k)
    if values.w > m:
        raise ValueError(f"w(H{k}) = {values.w} exceeds m = {m}")
    lhs = ap_normalize(tag, [ApElement(tag, m=m), ap_phi(tag, k)])
    return lhs, ApElement(tag, i=values.g % 2, m=m + values.t)


class ApMismatch(BaseModel):
    heaps: list[int]
    element: str
    quotient: Outcome
    closed: Outcome
    oracle: Outcome | None = None


class ApCheckReport(BaseModel):
    tag: str
    max_heaps: int
    max_beans: int
    positions: int = 0
    oracle_used: bool = True
    mismatches: list[ApMismatch] = Field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.mismatches


def ap_check(
    tag: Tag, max_heaps: int = 3, max_beans: int = 12, use_oracle: bool = True
) -> ApCheckReport:
    """Compare quotient, closed form and (optionally) brute force on every position.

    Positions are all multisets of at most max_heaps heaps of size at most
    max_beans each.
    """
    report = ApCheckReport(
        tag=tag, max_heaps=max_heaps, max_beans=max_beans, oracle_used=use_oracle
    )
    rules = RuleSet.heaps(parse_octal_code(tag), max_beans) if use_oracle else None
    for count in range(1, max_heaps + 1):
        for heaps in combinations_with_replacement(range(1, max_beans + 1), count):
            report.positions += 1
            element = ap_position_element(tag, heaps)
            quotient = Outcome.P if ap_in_P(element) else Outcome.N
            closed = ap_outcome(tag, heaps)
            oracle = None
            if rules is not None:
                oracle = rules.oracle().outcome(Position.from_heaps(heaps))
            if quotient != closed or (oracle is not None and oracle != quotient):
                logger.warning(
                    f"{tag}: disagreement at {list(heaps)}: quotient {quotient.value}, "
                    f"closed form {closed.value}, oracle {oracle.value if oracle else '-'}"
                )
                report.mismatches.append(
                    ApMismatch(
                        heaps=list(heaps),
                        element=element.render(),
                        quotient=quotient,
                        closed=closed,
                        oracle=oracle,
                    )
                )
    logger.info(f"{tag}: checked {report.positions} positions, {len(report.mismatches)} mismatches")
    return report
