"""Builtin solution database.

Records are JSON files under ``data/``. A published solution either carries
its own presentation, names one of the day-4 quotients, or points at another
record whose quotient it shares.
"""

import json
import logging
from functools import lru_cache
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError, model_validator

from misere.algebra.enumeration import monoid_from_presentation
from misere.algebra.monoid import BipartiteMonoid
from misere.algebra.words import Presentation
from misere.core.exceptions import CatalogError, CodeSyntaxError
from misere.games.codes import OctalCode, parse_octal_code

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"


class PhiSpec(BaseModel):
    preperiod: int | None = None
    period: int | None = None
    words: list[str]

    @model_validator(mode="after")
    def check_period(self) -> "PhiSpec":
        if self.period is not None and not 0 < self.period <= len(self.words):
            raise ValueError(f"period {self.period} does not fit a table of {len(self.words)}")
        return self


class NamedQuotient(BaseModel):
    """One of the eight quotients born by day 4."""

    name: str
    order: int
    generators: list[str]
    presentation: list[list[str]]
    pset: list[str]
    games: list[str] = Field(default_factory=list)
    representatives: list[str] = Field(default_factory=list)

    def monoid(self) -> BipartiteMonoid:
        pres = Presentation.from_pairs(self.generators, self.presentation)
        return monoid_from_presentation(pres, pset=self.pset)


class PublishedSolution(BaseModel):
    code: str
    label: str = ""  # code as printed, decorations included
    figure: str = ""
    claimed_name: str | None = None
    same_as: str | None = None
    generators: list[str] | None = None
    presentation: list[list[str]] | None = None
    pset: list[str] | None = None
    phi: PhiSpec

    @model_validator(mode="after")
    def check_quotient_source(self) -> "PublishedSolution":
        sources = [
            self.presentation is not None,
            self.claimed_name is not None,
            self.same_as is not None,
        ]
        if not any(sources):
            raise ValueError(f"{self.code}: no presentation, name or shared record")
        return self

    def octal(self) -> OctalCode:
        return parse_octal_code(self.code)


class OrderRecord(BaseModel):
    """Published quotient order of a code, with the table's pd column."""

    code: str
    order: int
    pd: int


class Catalog(BaseModel):
    solutions: list[PublishedSolution]
    quotients: list[NamedQuotient]
    orders: list[OrderRecord]

    def resolve(self, rec: PublishedSolution) -> tuple[list[str], list[list[str]], list[str]]:
        """Generators, relations and P words of the record's quotient."""
        if rec.presentation is not None:
            return rec.generators or [], rec.presentation, rec.pset or []
        if rec.same_as is not None:
            return self.resolve(self.find(rec.same_as))
        named = self.named(rec.claimed_name or "")
        return named.generators, named.presentation, named.pset

    def find(self, code: str) -> PublishedSolution:
        key = code_key(code)
        for rec in self.solutions:
            if code_key(rec.code) == key:
                return rec
        raise CatalogError(f"no builtin solution for {code}", code="not_found")

    def named(self, name: str) -> NamedQuotient:
        for q in self.quotients:
            if q.name == name:
                return q
        raise CatalogError(f"no named quotient {name!r}", code="not_found")


def code_key(code: str) -> str:
    """Comparison key: trailing zero digits do not change a finite code's game."""
    try:
        parsed = parse_octal_code(code)
    except CodeSyntaxError:
        return code.strip()
    if parsed.cycle:
        return parsed.render()
    digits = "".join(str(d) for d in parsed.prefix).rstrip("0") or "0"
    return f"{parsed.d0}.{digits}"


def _read(name: str) -> list[dict]:
    path = DATA_DIR / name
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise CatalogError(f"cannot read {path}: {e}") from e


@lru_cache
def load_catalog() -> Catalog:
    try:
        catalog = Catalog(
            solutions=_read("solutions.json"),
            quotients=_read("quotients.json"),
            orders=_read("orders.json"),
        )
    except ValidationError as e:
        raise CatalogError(f"malformed builtin catalog: {e}") from e
    logger.debug(
        f"loaded {len(catalog.solutions)} solutions, {len(catalog.quotients)} named quotients"
    )
    return catalog


def find_record(code: str) -> PublishedSolution:
    return load_catalog().find(code)


def named_quotient(name: str) -> NamedQuotient:
    return load_catalog().named(name)
