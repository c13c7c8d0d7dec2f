import pytest

from misere.catalog import (
    PhiSpec,
    claimed_name_holds,
    extend_phi,
    find_record,
    identify_named,
    load_catalog,
    named_quotient,
    parse_phi_table,
    published_monoid,
    render_phi_table,
    verify_all,
    verify_published,
)
from misere.catalog.harness import LARGE_TABLE, default_bean_bound
from misere.catalog.records import code_key
from misere.core.exceptions import CatalogError, UnknownGeneratorError, WordSyntaxError
from misere.games import RuleSet, parse_game_expr
from misere.solver import solve_closed_set


class TestRecords:
    def test_load(self):
        catalog = load_catalog()
        assert len(catalog.quotients) == 8
        assert {q.name for q in catalog.quotients} >= {"T2", "R8", "S12'", "R14"}
        assert catalog.solutions

    def test_find_ignores_trailing_zeros(self):
        assert find_record("0.75").code == "0.750"
        assert find_record("0.75").label == "0.75=0"
        assert find_record("0.7500").code == "0.750"

    def test_missing_record(self):
        with pytest.raises(CatalogError) as exc_info:
            find_record("0.6")
        assert exc_info.value.code == "not_found"

    def test_code_key(self):
        assert code_key("0.530") == "0.53"
        assert code_key("0.(3)") == "0.(3)"
        assert code_key("not a code") == "not a code"

    def test_shared_quotient_resolves(self):
        catalog = load_catalog()
        shared = catalog.find("0.241")
        assert shared.same_as == "0.710"
        assert catalog.resolve(shared) == catalog.resolve(catalog.find("0.71"))

    def test_named_quotient_data(self):
        t2 = named_quotient("T2")
        assert t2.representatives == ["*2", "*3"]
        with pytest.raises(CatalogError):
            named_quotient("T9")

    def test_orders_table(self):
        orders = load_catalog().orders
        assert [r.order for r in orders] == [6, 202, 226, 226, 226]
        assert [r.pd for r in orders] == [3, 7, 11, 15, 19]

    def test_published_monoid_named(self):
        m, generators = published_monoid(find_record("0.75"))
        assert m.size == 8
        assert generators == ["a", "b", "c"]

    def test_bean_bound_by_table_length(self):
        rec = find_record("0.75")
        assert len(rec.phi.words) <= LARGE_TABLE
        assert default_bean_bound(rec) == 20


class TestTables:
    def test_period_mark(self):
        spec = parse_phi_table("a b a b | c b")
        assert spec.words == ["a", "b", "a", "b", "c", "b"]
        assert (spec.preperiod, spec.period) == (4, 2)

    def test_explicit_period(self):
        spec = parse_phi_table("a b c b c", period=2)
        assert spec.preperiod == 3

    def test_conflicting_period(self):
        with pytest.raises(WordSyntaxError):
            parse_phi_table("a b | c", period=2)

    def test_period_too_long(self):
        with pytest.raises(WordSyntaxError):
            parse_phi_table("a b", period=3)

    def test_generators_checked(self):
        with pytest.raises(UnknownGeneratorError):
            parse_phi_table("a x", generators="ab")

    def test_extend(self):
        spec = PhiSpec(words=["a", "b", "c", "d"], period=2)
        assert extend_phi(spec, 7) == ["a", "b", "c", "d", "c", "d", "c"]
        assert extend_phi(spec, 2) == ["a", "b"]

    def test_extend_without_period(self):
        with pytest.raises(WordSyntaxError):
            extend_phi(PhiSpec(words=["a", "b"]), 3)

    def test_render(self):
        solution = solve_closed_set(RuleSet.from_dag(parse_game_expr("*2")))
        assert render_phi_table(solution) == "a b"


class TestHarness:
    def test_r8_game_verifies(self):
        report = verify_published(find_record("0.75"), bean_bound=12)
        assert report.ok
        assert report.order == 8
        assert report.reduced
        assert report.iso_match
        assert report.witness is None
        assert report.positions > 0

    def test_mutated_table_is_caught(self):
        rec = find_record("0.75")
        words = list(rec.phi.words)
        words[2] = "b"  # heap 3 is really a
        broken = rec.model_copy(update={"phi": PhiSpec(words=words, period=2)})
        report = verify_published(broken, bean_bound=8)
        assert not report.consistent
        assert not report.ok
        assert 3 in report.witness

    def test_wrong_claimed_name(self):
        rec = find_record("0.75").model_copy(update={"claimed_name": "T3"})
        report = verify_published(rec, bean_bound=6)
        assert report.iso_match is False
        assert not report.ok

    def test_wrong_claim_of_equal_order(self):
        # S12 and S12' share an order, so only the isomorphism test can tell them apart
        rec = find_record("0.34").model_copy(update={"claimed_name": "S12'"})
        assert claimed_name_holds(rec) is False
        assert claimed_name_holds(find_record("0.34")) is True

    def test_seven_generator_record(self):
        report = verify_published(find_record("0.77"), bean_bound=10)
        assert report.ok, report
        assert report.claimed_name is None
        assert report.iso_match is None

    def test_identify(self):
        assert identify_named(named_quotient("S12'").monoid()) == "S12'"

    @pytest.mark.slow
    def test_every_record(self):
        for report in verify_all():
            assert report.ok, report
