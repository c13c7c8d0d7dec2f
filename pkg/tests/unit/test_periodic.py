import random

import pytest

from misere.core.exceptions import UnknownGeneratorError, WordSyntaxError
from misere.games import Outcome
from misere.periodic import (
    ApElement,
    ap_check,
    ap_distinguish,
    ap_in_P,
    ap_normalize,
    ap_outcome,
    ap_phi,
    ap_position_element,
    ap_power,
    bridge_power,
    bridge_product,
    parse_ap_element,
    separates,
    tw_values,
)


def normal_forms(tag: str, bound: int) -> list[ApElement]:
    found = []
    for i in (0, 1):
        found.extend(ApElement(tag, i=i, m=m) for m in range(bound + 1))
        if tag == "4.7":
            found.append(ApElement(tag, i=i, c=True))
        for n in range(bound + 1):
            found.extend(ApElement(tag, i=i, m=m, n=n) for m in range(n + 1))
    return found


def random_factors(rng: random.Random, tag: str) -> list[str]:
    names = ["a", "b"] + (["c"] if tag == "4.7" else [])
    family = "c" if tag == "0.26" else "d"
    names += [f"{family}{n}" for n in range(6)]
    return [rng.choice(names) for _ in range(rng.randint(1, 7))]


class TestNormalForms:
    def test_relation_examples(self):
        assert ap_normalize("0.26", ["b", "c0"]).render() == "b3"
        assert ap_normalize("4.7", ["b", "c"]).render() == "ab3"
        assert ap_normalize("0.26", ["a", "a"]).is_identity()
        assert ap_normalize("4.7", ["c", "c"]).render() == "b4"
        assert ap_normalize("4.7", ["c", "d3"]).render() == "ab2d3"
        assert ap_normalize("4.7", ["d1", "d5"]).render() == "b5d5"
        assert ap_normalize("4.7", ["d1", "d3"]).render() == "b12"

    def test_family_products(self):
        assert ap_normalize("0.26", ["c1", "c4"]).render() == "b3c4"
        # b^2 c_1 collapses to b^5
        assert ap_normalize("0.26", ["b", "b", "c1"]).render() == "b5"

    def test_parse_render(self):
        for text in ("1", "a", "ab3", "c0", "abc1", "b2c5"):
            assert parse_ap_element("0.26", text).render() == text
        for text in ("c", "ac", "d4", "ab2d3"):
            assert parse_ap_element("4.7", text).render() == text

    def test_parse_normalizes(self):
        assert parse_ap_element("0.26", "b2c1") == ApElement("0.26", m=5)

    def test_unknown_generator(self):
        with pytest.raises(UnknownGeneratorError):
            ap_normalize("0.26", ["d0"])
        with pytest.raises(UnknownGeneratorError):
            ApElement("0.5")

    def test_malformed_element(self):
        with pytest.raises(WordSyntaxError):
            parse_ap_element("0.26", "ba")

    def test_power(self):
        b = ApElement("0.26", m=1)
        assert ap_power(b, 4) == ApElement("0.26", m=4)
        assert ap_power(b, 0).is_identity()

    @pytest.mark.parametrize("tag", ["0.26", "4.7"])
    def test_association_order_does_not_matter(self, tag):
        rng = random.Random(11)
        for _ in range(2000):
            factors = random_factors(rng, tag)
            shuffled = factors[:]
            rng.shuffle(shuffled)
            assert ap_normalize(tag, factors) == ap_normalize(tag, shuffled)


class TestPortion:
    def test_membership(self):
        assert ap_in_P(ApElement("0.26", i=1))
        assert not ap_in_P(ApElement("0.26", m=3))
        assert ap_in_P(ApElement("0.26", m=4))
        assert ap_in_P(ApElement("0.26", m=1, n=2))
        assert not ap_in_P(ApElement("0.26", i=1, m=1, n=2))
        assert ap_in_P(ap_normalize("4.7", ["b", "d2"]))
        assert ap_in_P(ApElement("4.7", i=1, m=2, n=3))
        assert not ap_in_P(ApElement("4.7", c=True))
        assert not ap_in_P(ApElement("4.7", m=3, n=3))


class TestPretendingFunction:
    def test_026_table(self):
        row = [ap_phi("0.26", k).render() for k in range(1, 15)]
        assert row == [
            "1", "a", "b", "ab", "1", "a", "b", "ab", "c0", "ac0", "c1", "ab3", "c2", "abc1",
        ]

    def test_47_table(self):
        row = [ap_phi("4.7", k).render() for k in range(1, 10)]
        assert row == ["a", "b", "a", "b", "c", "b3", "d0", "d1", "d2"]

    def test_bad_heap(self):
        with pytest.raises(ValueError):
            ap_phi("0.26", 0)

    def test_tw_values(self):
        assert tw_values("0.26", 3).t == 1
        assert tw_values("0.26", 9).w == 1
        assert tw_values("0.26", 11).w == 2
        assert tw_values("0.26", 14).w == 1
        assert tw_values("0.26", 7).g == 2
        assert tw_values("4.7", 8).t == 5
        assert tw_values("4.7", 8).w == 2
        assert tw_values("4.7", 4).g == 2


class TestClosedFormOutcome:
    @pytest.mark.parametrize(
        "tag,heaps,expected",
        [
            ("0.26", [2], Outcome.P),
            ("0.26", [9], Outcome.N),
            ("0.26", [3, 3, 5], Outcome.P),
            ("4.7", [1], Outcome.P),
            ("4.7", [2], Outcome.N),
            ("4.7", [1, 1], Outcome.N),
            ("4.7", [2, 2], Outcome.P),
        ],
    )
    def test_examples(self, tag, heaps, expected):
        assert ap_outcome(tag, heaps) == expected

    def test_empty_position(self):
        assert ap_outcome("0.26", []) == Outcome.N

    @pytest.mark.parametrize("tag,beans", [("0.26", 25), ("4.7", 14)])
    def test_agrees_with_quotient(self, tag, beans):
        for k in range(1, beans + 1):
            for k2 in range(k, beans + 1):
                for k3 in range(k2, beans + 1):
                    heaps = [k, k2, k3]
                    inside = ap_in_P(ap_position_element(tag, heaps))
                    assert inside == (ap_outcome(tag, heaps) == Outcome.P)


class TestBridges:
    @pytest.mark.parametrize("tag", ["0.26", "4.7"])
    def test_products(self, tag):
        for k in range(1, 31):
            for k2 in range(k, 31):
                lhs, rhs = bridge_product(tag, k, k2)
                assert lhs == rhs

    @pytest.mark.parametrize("tag", ["0.26", "4.7"])
    def test_powers(self, tag):
        for k in range(1, 31):
            for m in range(tw_values(tag, k).w, 31):
                lhs, rhs = bridge_power(tag, m, k)
                assert lhs == rhs

    def test_power_needs_w(self):
        with pytest.raises(ValueError):
            bridge_power("0.26", 0, 9)


class TestDistinguish:
    def test_examples(self):
        one, a = ApElement("0.26"), ApElement("0.26", i=1)
        assert ap_distinguish("0.26", one, a) == ApElement("0.26", m=2)
        b, b3 = ApElement("0.26", m=1), ApElement("0.26", m=3)
        assert ap_distinguish("0.26", b, b3) == ApElement("0.26", n=2)

    def test_equal(self):
        x = ApElement("4.7", i=1, m=2, n=5)
        assert ap_distinguish("4.7", x, x) is None

    def test_tag_mismatch(self):
        with pytest.raises(ValueError):
            ap_distinguish("0.26", ApElement("4.7"), ApElement("4.7", i=1))

    def test_026_grid(self):
        elements = normal_forms("0.26", 8)
        for p, x in enumerate(elements):
            for y in elements[p + 1 :]:
                assert separates(x, y, ap_distinguish("0.26", x, y))

    def test_47_small_grid(self):
        elements = normal_forms("4.7", 4)
        for p, x in enumerate(elements):
            for y in elements[p + 1 :]:
                assert separates(x, y, ap_distinguish("4.7", x, y))

    @pytest.mark.slow
    def test_47_grid(self):
        elements = normal_forms("4.7", 8)
        for p, x in enumerate(elements):
            for y in elements[p + 1 :]:
                assert separates(x, y, ap_distinguish("4.7", x, y))


class TestThreeWayCheck:
    @pytest.mark.parametrize("tag", ["0.26", "4.7"])
    def test_small(self, tag):
        report = ap_check(tag, max_heaps=2, max_beans=10)
        assert report.consistent
        assert report.positions == 10 + 55

    def test_without_oracle(self):
        report = ap_check("0.26", max_heaps=3, max_beans=12, use_oracle=False)
        assert report.consistent
        assert not report.oracle_used

    @pytest.mark.slow
    @pytest.mark.parametrize("tag,beans", [("0.26", 25), ("4.7", 14)])
    def test_full(self, tag, beans):
        assert ap_check(tag, max_heaps=3, max_beans=beans).consistent
