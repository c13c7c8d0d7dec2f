import random

import pytest

from misere.algebra import (
    BipartiteMonoid,
    MonoidWord,
    Presentation,
    extract_presentation,
    is_reduced,
    iso_check,
    lex_least_preimages,
    monoid_from_presentation,
    parse_word,
    reduce_bipartite,
    render_word,
)
from misere.catalog import load_catalog
from misere.core.exceptions import (
    IsomorphismTooLargeError,
    OrderBoundError,
    UnknownGeneratorError,
    WordSyntaxError,
)


def random_cyclic_product(rng: random.Random) -> BipartiteMonoid:
    """Product of up to three cyclic monoids t^(n+k) = t^n with a random P."""
    rank = rng.randint(1, 3)
    names = "abc"[:rank]
    relations = []
    for g in names:
        n, k = rng.randint(0, 2), rng.randint(1, 3)
        relations.append([f"{g}{n + k}", f"{g}{n}" if n else "1"])
    m = monoid_from_presentation(Presentation.from_pairs(names, relations))
    return m.with_p(x for x in range(m.size) if rng.random() < 0.4)


class TestWords:
    def test_parse_plain_exponents(self):
        assert parse_word("ab2", "abc").exponents == (1, 2, 0)
        assert parse_word("b^3c", "abc").exponents == (0, 3, 1)

    def test_identity_word(self):
        assert parse_word("1", "ab").is_identity()

    def test_multi_character_generators(self):
        word = parse_word("ac_0^2", ["a", "b", "c_0"])
        assert word.exponents == (1, 0, 2)
        assert render_word(word, ["a", "b", "c_0"]) == "ac_0^2"

    def test_repeated_factor_accumulates(self):
        assert parse_word("bab", "ab").exponents == (1, 2)

    def test_render(self):
        assert render_word(MonoidWord((1, 0, 3)), "abc") == "ac3"
        assert render_word(MonoidWord.identity(2), "ab") == "1"

    @pytest.mark.parametrize("text", ["", "a0", "a-b", "2a"])
    def test_malformed(self, text):
        with pytest.raises(WordSyntaxError):
            parse_word(text, "ab")

    def test_unknown_generator(self):
        with pytest.raises(UnknownGeneratorError):
            parse_word("ad", "abc")

    def test_presentation_parse(self):
        pres = Presentation.parse("ab", "a2=1, b3=b")
        assert pres.pairs() == [["a2", "1"], ["b3", "b"]]
        assert str(pres) == "<a,b | a2=1, b3=b>"

    def test_presentation_rejects_trivial_relation(self):
        with pytest.raises(WordSyntaxError):
            Presentation.parse("ab", "a2=a2")

    def test_presentation_rejects_duplicate_generators(self):
        with pytest.raises(WordSyntaxError):
            Presentation.parse("aa", "a2=1")


class TestEnumeration:
    def test_t2_canonical_order(self, t2_monoid):
        assert [t2_monoid.render(x) for x in range(t2_monoid.size)] == [
            "1", "a", "b", "ab", "b2", "ab2",
        ]
        assert t2_monoid.pset == frozenset({1, 4})

    def test_t2_products(self, t2_monoid):
        b = t2_monoid.evaluate(parse_word("b", "ab"))
        assert t2_monoid.render(t2_monoid.power(b, 3)) == "b"
        assert t2_monoid.render(t2_monoid.multiply(1, 1)) == "1"

    @pytest.mark.parametrize(
        "name,order",
        [("T0", 1), ("T1", 2), ("T2", 6), ("R8", 8), ("T3", 10), ("S12", 12), ("S12'", 12),
         ("R14", 14)],
    )
    def test_named_orders(self, name, order):
        assert load_catalog().named(name).monoid().size == order

    def test_free_monoid_hits_bound(self):
        with pytest.raises(OrderBoundError):
            monoid_from_presentation(Presentation.parse("a", ""), bound=10)

    def test_small_bound(self):
        with pytest.raises(OrderBoundError):
            monoid_from_presentation(Presentation.parse("a", "a5=a"), bound=3)

    def test_r8_relations_hold(self, r8_monoid):
        assert r8_monoid.evaluate(parse_word("bc", "abc")) == r8_monoid.evaluate(
            parse_word("ab", "abc")
        )
        assert r8_monoid.render(r8_monoid.evaluate(parse_word("c2", "abc"))) == "b2"


class TestMonoid:
    def test_power_signature(self, t2_monoid):
        b = 2
        assert t2_monoid.power_signature(b) == (1, 2, (False, True))

    def test_idempotents(self, t2_monoid):
        assert t2_monoid.is_idempotent(0)
        assert t2_monoid.is_idempotent(4)
        assert not t2_monoid.is_idempotent(1)

    def test_from_actions_relabels(self):
        # Z/3 given with the generator's image at index 2
        m, relabel = BipartiteMonoid.from_actions([[2, 0, 1]], identity=0)
        assert m.size == 3
        assert relabel == [0, 2, 1]

    def test_lex_least_preimages(self, t2_monoid):
        phi = [t2_monoid.generator_element(0), t2_monoid.generator_element(1)]
        found = lex_least_preimages(t2_monoid, phi)
        assert {t2_monoid.render(e): v for e, v in found.items()} == {
            "1": (),
            "a": (1,),
            "b": (0, 1),
            "ab": (1, 1),
            "b2": (0, 2),
            "ab2": (1, 2),
        }

    def test_with_p_shares_actions(self, t2_monoid):
        other = t2_monoid.with_p({0})
        assert other.actions is t2_monoid.actions
        assert other.pset == frozenset({0})


class TestReduction:
    def test_named_quotients_reduced(self, t2_monoid, r8_monoid):
        assert is_reduced(t2_monoid)
        assert is_reduced(r8_monoid)

    def test_empty_p_collapses(self, t2_monoid):
        q, factor = reduce_bipartite(t2_monoid.with_p(()))
        assert q.size == 1
        assert set(factor) == {0}

    def test_collapse_to_three(self, t2_monoid):
        # with P = {a}, nothing divisible by b can reach P
        q, factor = reduce_bipartite(t2_monoid.with_p({1}))
        assert q.size == 3
        assert len({factor[x] for x in (2, 3, 4, 5)}) == 1

    def test_random_monoids(self):
        rng = random.Random(7)
        for _ in range(200):
            m = random_cyclic_product(rng)
            q, factor = reduce_bipartite(m)
            assert is_reduced(q)
            assert reduce_bipartite(q)[0].size == q.size
            for x in range(m.size):
                assert (x in m.pset) == (factor[x] in q.pset)
                for y in range(m.size):
                    assert factor[m.multiply(x, y)] == q.multiply(factor[x], factor[y])


class TestIsomorphism:
    def test_self(self, r8_monoid):
        found = iso_check(r8_monoid, r8_monoid)
        assert found is not None
        assert sorted(found) == list(range(8))
        assert {found[p] for p in r8_monoid.pset} == r8_monoid.pset

    def test_different_orders(self, t2_monoid, r8_monoid):
        assert iso_check(t2_monoid, r8_monoid) is None

    def test_s12_pair_not_isomorphic(self):
        catalog = load_catalog()
        s12, s12p = catalog.named("S12").monoid(), catalog.named("S12'").monoid()
        assert iso_check(s12, s12p) is None

    def test_renamed_generators(self, t2_monoid):
        # same quotient with the generators listed the other way round
        swapped = monoid_from_presentation(
            Presentation.parse("ba", "b3=b, a2=1"), pset=["a", "b2"]
        )
        found = iso_check(t2_monoid, swapped)
        assert found is not None
        assert swapped.render(found[2]) == "b"

    def test_fixed_images_respected(self, t2_monoid):
        # a is an involution, b is not
        assert iso_check(t2_monoid, t2_monoid, fixed={1: 2}) is None
        assert iso_check(t2_monoid, t2_monoid, fixed={1: 1}) is not None

    def test_cap(self, t2_monoid):
        with pytest.raises(IsomorphismTooLargeError):
            iso_check(t2_monoid, t2_monoid, max_order=2)


class TestPresentationExtraction:
    def test_t2(self, t2_monoid):
        assert extract_presentation(t2_monoid).pairs() == [["a2", "1"], ["b3", "b"]]

    @pytest.mark.parametrize("name", ["T2", "R8", "T3", "S12", "S12'", "R14"])
    def test_round_trip(self, name):
        m = load_catalog().named(name).monoid()
        pres = extract_presentation(m)
        rebuilt = monoid_from_presentation(pres, pset=[m.render(p) for p in m.pset])
        assert iso_check(m, rebuilt) is not None
