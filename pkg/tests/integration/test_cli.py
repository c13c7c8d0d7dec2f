import json

import pytest

from misere.cli import EXIT_OK, EXIT_USAGE, build_parser, main
from misere.heaps import partial_orders


class TestSolve:
    def test_game_expression(self, capsys):
        assert main(["solve-game", "*2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "order: 6 (T2)" in out
        assert "relations: a2=1, b3=b" in out
        assert "P: a b2" in out

    def test_octal_game(self, capsys):
        assert main(["solve", "0.75", "--heaps", "13"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "order: 8 (R8)" in out
        assert "phi: a b a b c b c b ab2 b ab2 b ab2" in out
        assert "period: 2" in out

    def test_json_output(self, capsys):
        assert main(["solve", "0.75", "--heaps", "13", "--format", "json"]) == EXIT_OK
        record = json.loads(capsys.readouterr().out)
        assert record["order"] == 8
        assert record["name"] == "R8"
        assert record["phi"]["period"] == 2

    def test_family_names(self, capsys):
        assert main(["solve", "0.26", "--heaps", "12", "--family"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "phi (closed form): 1 a b ab 1 a b ab c0 ac0 c1 ab3" in out

    def test_family_needs_closed_form(self, capsys):
        assert main(["solve", "0.75", "--heaps", "4", "--family"]) == EXIT_USAGE
        assert "no closed form" in capsys.readouterr().err

    def test_second_run_uses_cache(self, capsys, isolated_cache):
        assert main(["solve", "0.75", "--heaps", "6"]) == EXIT_OK
        first = capsys.readouterr().out
        assert list(isolated_cache.glob("quotient-*.json"))
        assert main(["solve", "0.75", "--heaps", "6"]) == EXIT_OK
        assert capsys.readouterr().out == first

    def test_no_cache(self, isolated_cache):
        assert main(["solve", "0.75", "--heaps", "4", "--no-cache"]) == EXIT_OK
        assert not isolated_cache.exists() or not list(isolated_cache.iterdir())

    def test_budget_exhausted(self, capsys):
        assert main(["solve-game", "*2", "--max-elements", "4"]) == EXIT_USAGE
        assert "PARTIAL" in capsys.readouterr().out


class TestOutcome:
    def test_heaps(self, capsys):
        assert main(["outcome", "0.26", "3", "3", "5"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "P"

    def test_expression(self, capsys):
        assert main(["outcome-expr", "*+*"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "N"

    def test_json(self, capsys):
        assert main(["outcome", "0.75", "1", "--format", "json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == {
            "code": "0.75",
            "heaps": [1],
            "outcome": "P",
        }


class TestVerify:
    def test_single_record(self, capsys):
        assert main(["verify", "0.75", "--beans", "10"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("0.750: ok")
        assert "R8 matches" in out

    def test_needs_code(self, capsys):
        assert main(["verify"]) == EXIT_USAGE
        assert "needs a code" in capsys.readouterr().err

    def test_unknown_record(self):
        assert main(["verify", "0.6"]) == EXIT_USAGE

    @pytest.mark.slow
    def test_all_records(self):
        assert main(["verify", "--all"]) == EXIT_OK


class TestOtherCommands:
    def test_partials(self, capsys):
        assert main(["partials", "0.75", "--to", "5"]) == EXIT_OK
        expected = " ".join(str(n) for n in partial_orders("0.75", 5))
        assert capsys.readouterr().out.strip() == expected

    def test_sweep(self, capsys):
        assert main(["partials", "0.3310", "--to", "4", "--sweep", "1"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("0.3310: ")

    def test_ap_check(self, capsys):
        assert main(["ap", "check", "0.26", "--beans", "6"]) == EXIT_OK
        assert "0 mismatches" in capsys.readouterr().out

    def test_catalog(self, capsys):
        assert main(["catalog", "list"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "0.750" in out
        assert "R14" in out
        assert "0.3310 order 6 pd 3" in out

    def test_metrics_file(self, tmp_path):
        target = tmp_path / "misere.prom"
        assert main(["outcome", "0.26", "1", "--metrics", str(target)]) == EXIT_OK
        assert target.exists()


class TestUsage:
    def test_bad_code(self, capsys):
        assert main(["solve", "0.x"]) == EXIT_USAGE
        assert "malformed octal code" in capsys.readouterr().err

    def test_invalid_option(self, capsys):
        assert main(["solve", "0.75", "--heaps", "0"]) == EXIT_USAGE
        assert "invalid options" in capsys.readouterr().err

    def test_unknown_command(self):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_parser_lists_commands(self):
        help_text = build_parser().format_help()
        for command in ("solve", "solve-game", "outcome", "verify", "partials", "ap", "catalog"):
            assert command in help_text
