import pytest

from misere.algebra import Presentation, monoid_from_presentation
from misere.config import settings
from misere.games import RuleSet, parse_octal_code


@pytest.fixture(autouse=True)
def isolated_cache(monkeypatch, tmp_path):
    """Keep the quotient cache out of the user's home directory."""
    monkeypatch.setattr(settings, "cache_dir", tmp_path / "cache")
    return tmp_path / "cache"


@pytest.fixture
def heap_rules():
    """Rule set factory: heap_rules("0.75", 12)."""

    def make(code: str, heaps: int) -> RuleSet:
        return RuleSet.heaps(parse_octal_code(code), heaps)

    return make


@pytest.fixture
def t2_monoid():
    """T2 = <a,b | a2=1, b3=b>, P = {a, b2}."""
    pres = Presentation.parse("ab", "a2=1, b3=b")
    return monoid_from_presentation(pres, pset=["a", "b2"])


@pytest.fixture
def r8_monoid():
    pres = Presentation.parse("abc", "a2=1, b3=b, bc=ab, c2=b2")
    return monoid_from_presentation(pres, pset=["a", "b2"])
