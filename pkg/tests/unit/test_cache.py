import json

import pytest

from misere.games import RuleSet, parse_game_expr
from misere.services import QuotientCache, make_cache_key
from misere.solver import solve_closed_set


@pytest.fixture
def t3_solution():
    return solve_closed_set(RuleSet.from_dag(parse_game_expr("*4")))


class TestCacheKey:
    def test_deterministic(self):
        assert make_cache_key("0.75", 40) == make_cache_key("0.75", 40)

    def test_arguments_matter(self):
        assert make_cache_key("0.75", 40) != make_cache_key("0.75", 41)
        assert make_cache_key("0.75", version="1") != make_cache_key("0.75", version="2")

    def test_prefix(self):
        assert make_cache_key("x").startswith("quotient-")
        assert make_cache_key("x", prefix="other").startswith("other-")


class TestQuotientCache:
    def test_miss(self, tmp_path):
        assert QuotientCache(tmp_path).get("0.75", 10) is None

    def test_set_then_get(self, tmp_path, t3_solution):
        cache = QuotientCache(tmp_path)
        assert cache.set("*4", 4, t3_solution)
        loaded = cache.get("*4", 4)
        assert loaded is not None
        assert loaded.order == 10
        assert loaded.phi_words() == t3_solution.phi_words()
        assert loaded.pset_words() == t3_solution.pset_words()
        assert loaded.partial_orders == t3_solution.partial_orders

    def test_no_temp_files_left(self, tmp_path, t3_solution):
        cache = QuotientCache(tmp_path)
        cache.set("*4", 4, t3_solution)
        assert [p.name for p in tmp_path.iterdir() if p.name.startswith(".tmp-")] == []

    def test_tampered_file_is_a_miss(self, tmp_path, t3_solution):
        cache = QuotientCache(tmp_path)
        cache.set("*4", 4, t3_solution)
        path = cache.path("*4", 4)
        payload = json.loads(path.read_text())
        payload["record"]["order"] = 11
        path.write_text(json.dumps(payload))
        assert cache.get("*4", 4) is None

    def test_garbage_file_is_a_miss(self, tmp_path):
        cache = QuotientCache(tmp_path)
        cache.path("0.75", 3).write_text("{not json")
        assert cache.get("0.75", 3) is None

    def test_disabled(self, tmp_path, t3_solution):
        cache = QuotientCache(tmp_path, enabled=False)
        assert not cache.set("*4", 4, t3_solution)
        assert cache.get("*4", 4) is None
        assert list(tmp_path.iterdir()) == []

    def test_clear(self, tmp_path, t3_solution):
        cache = QuotientCache(tmp_path)
        cache.set("*4", 4, t3_solution)
        cache.set("*4", 5, t3_solution)
        assert cache.clear() == 2
        assert cache.get("*4", 4) is None

    def test_default_directory_follows_settings(self, isolated_cache):
        assert QuotientCache().directory == isolated_cache
