"""Checks published (Q, P, phi) data against brute-force outcomes."""

import logging
import time

from pydantic import BaseModel

from misere.algebra.enumeration import monoid_from_presentation
from misere.algebra.isomorphism import iso_check
from misere.algebra.monoid import BipartiteMonoid
from misere.algebra.reduction import is_reduced
from misere.algebra.words import Presentation, parse_word
from misere.catalog.records import Catalog, PublishedSolution, load_catalog
from misere.catalog.tables import extend_phi
from misere.config import settings
from misere.core.exceptions import (
    BudgetExceededError,
    IsomorphismTooLargeError,
    MisereError,
    OrderBoundError,
)
from misere.games.rules import RuleSet, iter_heap_positions
from misere.heaps.driver import solve_octal
from misere.solver.closed_set import QuotientSolution

logger = logging.getLogger(__name__)

LARGE_TABLE = 60  # longer published tables get the reduced bean bound


class VerificationReport(BaseModel):
    code: str
    label: str = ""
    bean_bound: int
    positions: int = 0
    consistent: bool = False
    witness: list[int] | None = None  # heap sizes of the first disagreement
    reduced: bool = False
    order: int | None = None
    claimed_name: str | None = None
    iso_match: bool | None = None
    error: str | None = None
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        if self.error is not None or self.iso_match is False:
            return False
        return self.consistent and self.reduced


def default_bean_bound(rec: PublishedSolution) -> int:
    if len(rec.phi.words) > LARGE_TABLE:
        return settings.large_bean_bound
    return settings.bean_bound


def published_monoid(
    rec: PublishedSolution, catalog: Catalog | None = None
) -> tuple[BipartiteMonoid, list[str]]:
    catalog = catalog or load_catalog()
    generators, relations, pset = catalog.resolve(rec)
    pres = Presentation.from_pairs(generators, relations)
    return monoid_from_presentation(pres, bound=settings.presentation_bound, pset=pset), generators


def published_phi(
    rec: PublishedSolution, monoid: BipartiteMonoid, generators: list[str], heaps: int
) -> list[int]:
    return [monoid.evaluate(parse_word(w, generators)) for w in extend_phi(rec.phi, heaps)]


def verify_published(
    rec: PublishedSolution,
    bean_bound: int | None = None,
    catalog: Catalog | None = None,
) -> VerificationReport:
    """Reducedness, outcome agreement up to bean_bound, and the claimed isomorphism type."""
    catalog = catalog or load_catalog()
    bound = bean_bound or default_bean_bound(rec)
    report = VerificationReport(
        code=rec.code, label=rec.label, bean_bound=bound, claimed_name=rec.claimed_name
    )
    started = time.monotonic()
    try:
        if rec.claimed_name is not None:
            report.iso_match = claimed_name_holds(rec, catalog)
        m, generators = published_monoid(rec, catalog)
        report.order = m.size
        report.reduced = is_reduced(m)
        phi = published_phi(rec, m, generators, bound)

        rules = RuleSet.heaps(rec.octal(), bound)
        oracle = rules.oracle()
        report.consistent = True
        for x in iter_heap_positions(bound, bound):
            report.positions += 1
            value = m.product(phi[k - 1] for k in x.heaps())
            if (value in m.pset) != oracle.is_p(x):
                report.consistent = False
                report.witness = x.heaps()
                logger.warning(f"{rec.code}: published data mispredicts {x}")
                break
    except (OrderBoundError, BudgetExceededError, IsomorphismTooLargeError) as e:
        report.error = e.message
        report.consistent = False
    except MisereError as e:
        report.error = f"malformed record: {e.message}"
        report.consistent = False
    report.elapsed = round(time.monotonic() - started, 6)
    logger.info(
        f"{rec.code}: consistent={report.consistent} reduced={report.reduced} "
        f"order={report.order} ({report.positions} positions, B={bound})"
    )
    return report


def claimed_name_holds(
    rec: PublishedSolution, catalog: Catalog | None = None, heaps: int | None = None
) -> bool | None:
    """Whether the quotient solved from the code itself has the claimed isomorphism type.

    The claim is tested against a fresh heap-by-heap solve over the published rows, never
    against the presentation the name resolves to. None when that solve stops early.
    """
    catalog = catalog or load_catalog()
    named = catalog.named(rec.claimed_name or "")
    solution = solve_octal(rec.code, heaps or len(rec.phi.words))
    if not solution.converged:
        logger.warning(f"{rec.code}: cannot test claim {named.name}: {solution.reason}")
        return None
    if solution.order != named.order:
        return False
    return iso_check(solution.monoid, named.monoid()) is not None


def verify_all(
    bean_bound: int | None = None, catalog: Catalog | None = None
) -> list[VerificationReport]:
    catalog = catalog or load_catalog()
    return [verify_published(rec, bean_bound, catalog) for rec in catalog.solutions]


def match_solution(
    solution: QuotientSolution, rec: PublishedSolution, catalog: Catalog | None = None
) -> list[int] | None:
    """Isomorphism from the solution's quotient to the published one sending phi to phi.

    Only heaps present in both tables are compared.
    """
    m, generators = published_monoid(rec, catalog)
    heaps = len(solution.phi)
    if rec.phi.period is None:
        heaps = min(heaps, len(rec.phi.words))
    published = published_phi(rec, m, generators, heaps)
    fixed: dict[int, int] = {}
    for ours, theirs in zip(solution.phi, published):
        if fixed.setdefault(ours, theirs) != theirs:
            return None
    if len(set(fixed.values())) != len(fixed):
        return None
    try:
        return iso_check(solution.monoid, m, fixed=fixed)
    except IsomorphismTooLargeError:
        logger.warning(f"{rec.code}: quotient of order {m.size} too large to match")
        return None


def identify_named(monoid: BipartiteMonoid, catalog: Catalog | None = None) -> str | None:
    """Name of the day-4 quotient isomorphic to ``monoid``, if any."""
    catalog = catalog or load_catalog()
    for named in catalog.quotients:
        if named.order == monoid.size and iso_check(monoid, named.monoid()) is not None:
            return named.name
    return None
