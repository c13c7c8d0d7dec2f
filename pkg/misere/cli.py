"""Command-line interface.

Exit status: 0 on success, 1 when a check finds an inconsistency, 2 on usage
errors and exhausted budgets.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, ValidationError

from misere import __version__
from misere.catalog import (
    find_record,
    identify_named,
    load_catalog,
    match_solution,
    render_phi_table,
    verify_all,
    verify_published,
)
from misere.config import settings
from misere.core.exceptions import CatalogError, MisereError
from misere.core.metrics import write_metrics
from misere.core.tracing import configure_logging
from misere.games import RuleSet, parse_game_expr, parse_octal_code
from misere.heaps import solve_octal, sweep_repetitions
from misere.periodic import TAGS, ap_check, family_phi_words
from misere.services import QuotientCache
from misere.solver import QuotientSolution, SolveLimits, solve_closed_set

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2


class CliConfig(BaseModel):
    """Validated options shared by every command."""

    command: str
    output_format: Literal["text", "json"] = "text"
    heaps: int = Field(default_factory=lambda: settings.default_heaps, gt=0)
    beans: int | None = Field(default=None, gt=0)
    max_elements: int = Field(default_factory=lambda: settings.max_elements, gt=0)
    max_nodes: int = Field(default_factory=lambda: settings.max_nodes, gt=0)
    max_seconds: float = Field(default_factory=lambda: settings.max_seconds, gt=0)
    paranoid: bool = False
    shortcuts: bool = True
    trace: bool = False
    use_cache: bool = True
    cache_dir: Path = Field(default_factory=lambda: settings.cache_dir)
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    metrics: Path | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        values: dict[str, Any] = {
            "command": args.command,
            "output_format": args.format,
            "paranoid": args.paranoid,
            "shortcuts": not args.no_shortcuts,
            "trace": args.trace,
            "use_cache": not args.no_cache,
            "log_level": args.log_level,
            "metrics": args.metrics,
        }
        for name in ("heaps", "beans", "max_elements", "max_nodes", "max_seconds", "cache_dir"):
            value = getattr(args, name, None)
            if value is not None:
                values[name] = value
        return cls(**values)

    def limits(self) -> SolveLimits:
        return SolveLimits(
            max_elements=self.max_elements,
            max_nodes=self.max_nodes,
            max_seconds=self.max_seconds,
        )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--heaps", type=int, help="largest heap size to solve for")
    common.add_argument("--beans", type=int, help="bean bound for checks")
    common.add_argument("--max-elements", type=int, help="largest candidate monoid")
    common.add_argument("--max-nodes", type=int, help="positions per verification")
    common.add_argument("--max-seconds", type=float, help="wall clock budget")
    common.add_argument("--paranoid", action="store_true", help="re-verify shortcut results")
    common.add_argument("--no-shortcuts", action="store_true", help="always recalibrate")
    common.add_argument("--trace", action="store_true", help="JSON-line trace on stderr")
    common.add_argument("--no-cache", action="store_true", help="bypass the quotient cache")
    common.add_argument("--cache-dir", type=Path, help="quotient cache directory")
    common.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=settings.log_level
    )
    common.add_argument("--metrics", type=Path, help="write Prometheus metrics to this file")

    parser = argparse.ArgumentParser(prog="misere", description="Misère quotient solver")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="quotient of an octal game")
    p.add_argument("code")
    p.add_argument(
        "--family", action="store_true", help="name 0.26 and 4.7 values by closed-form family"
    )

    p = sub.add_parser("solve-game", parents=[common], help="quotient of a game expression")
    p.add_argument("expr")

    p = sub.add_parser("outcome", parents=[common], help="misère outcome of heaps")
    p.add_argument("code")
    p.add_argument("sizes", nargs="*", type=int)

    p = sub.add_parser("outcome-expr", parents=[common], help="misère outcome of an expression")
    p.add_argument("expr")

    p = sub.add_parser("verify", parents=[common], help="check builtin published solutions")
    p.add_argument("code", nargs="?")
    p.add_argument("--all", action="store_true")

    p = sub.add_parser("partials", parents=[common], help="partial quotient orders")
    p.add_argument("code")
    p.add_argument("--to", type=int, help="last heap (defaults to --heaps)")
    p.add_argument("--sweep", type=int, help="solve d0.(digits)^k for k = 1..SWEEP")

    p = sub.add_parser("ap", parents=[common], help="0.26 and 4.7 closed forms")
    p.add_argument("action", choices=["check"])
    p.add_argument("tag", choices=list(TAGS))
    p.add_argument("--no-oracle", action="store_true")

    p = sub.add_parser("catalog", parents=[common], help="builtin solution database")
    p.add_argument("action", choices=["list"])
    return parser


def _emit(config: CliConfig, payload: Any, text: str) -> None:
    if config.output_format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _solution_text(
    solution: QuotientSolution, name: str | None, family: list[str] | None = None
) -> str:
    lines = [
        f"game: {solution.source}",
        f"order: {solution.order}" + (f" ({name})" if name else ""),
        f"generators: {' '.join(solution.names) or '-'}",
        f"relations: {solution.presentation().render_relations() or '-'}",
        f"P: {' '.join(solution.pset_words()) or '-'}",
        f"phi: {render_phi_table(solution)}",
    ]
    if family is not None:
        lines.append(f"phi (closed form): {' '.join(family)}")
    if solution.period is not None:
        lines.append(f"period: {solution.period} from heap {solution.period_start}")
    if solution.partial_orders:
        lines.append(f"partial orders: {' '.join(str(n) for n in solution.partial_orders)}")
    if not solution.converged:
        lines.append(f"PARTIAL: {solution.reason}")
    return "\n".join(lines)


def _quotient_name(solution: QuotientSolution) -> str | None:
    try:
        rec = find_record(solution.source)
    except CatalogError:
        rec = None
    if rec is not None and rec.claimed_name and match_solution(solution, rec) is not None:
        return rec.claimed_name
    if solution.order <= max(q.order for q in load_catalog().quotients):
        return identify_named(solution.monoid)
    return None


def _report_solution(
    config: CliConfig, solution: QuotientSolution, family: list[str] | None = None
) -> int:
    name = _quotient_name(solution)
    record = solution.to_record()
    record["name"] = name
    if family is not None:
        record["family_phi"] = family
    _emit(config, record, _solution_text(solution, name, family))
    return EXIT_OK if solution.converged else EXIT_USAGE


def cmd_solve(config: CliConfig, args: argparse.Namespace) -> int:
    code = parse_octal_code(args.code)
    cache = QuotientCache(config.cache_dir, enabled=config.use_cache and settings.cache_enabled)
    solution = cache.get(code.render(), config.heaps)
    if solution is None:
        solution = solve_octal(
            code,
            config.heaps,
            config.limits(),
            shortcuts=config.shortcuts,
            paranoid=config.paranoid,
        )
        if solution.converged:
            cache.set(code.render(), config.heaps, solution)
    family = family_phi_words(solution, code.render()) if args.family else None
    return _report_solution(config, solution, family)


def cmd_solve_game(config: CliConfig, args: argparse.Namespace) -> int:
    dag = parse_game_expr(args.expr)
    rules = RuleSet.from_dag(dag)
    solution = solve_closed_set(rules, config.limits(), source=dag.render())
    return _report_solution(config, solution)


def cmd_outcome(config: CliConfig, args: argparse.Namespace) -> int:
    code = parse_octal_code(args.code)
    rules = RuleSet.heaps(code, max(args.sizes, default=1))
    outcome = rules.oracle().outcome(rules.position_of_heaps(args.sizes))
    payload = {"code": code.render(), "heaps": args.sizes, "outcome": outcome.value}
    _emit(config, payload, outcome.value)
    return EXIT_OK


def cmd_outcome_expr(config: CliConfig, args: argparse.Namespace) -> int:
    dag = parse_game_expr(args.expr)
    rules = RuleSet.from_dag(dag)
    outcome = rules.oracle().outcome(rules.position_of_node(dag.root))
    _emit(config, {"expr": dag.render(), "outcome": outcome.value}, outcome.value)
    return EXIT_OK


def cmd_verify(config: CliConfig, args: argparse.Namespace) -> int:
    if args.all:
        reports = verify_all(config.beans)
    elif args.code:
        reports = [verify_published(find_record(args.code), config.beans)]
    else:
        raise CatalogError("verify needs a code or --all", code="usage")
    lines = []
    for r in reports:
        status = "ok" if r.ok else "FAILED"
        detail = f"order {r.order}, B={r.bean_bound}"
        if r.claimed_name:
            detail += f", {r.claimed_name} {'matches' if r.iso_match else 'does not match'}"
        if r.witness:
            detail += f", mispredicted at heaps {r.witness}"
        if r.error:
            detail += f", {r.error}"
        lines.append(f"{r.code}: {status} ({detail})")
    _emit(config, [r.model_dump(exclude={"elapsed"}) for r in reports], "\n".join(lines))
    if any(r.error for r in reports):
        return EXIT_USAGE
    return EXIT_OK if all(r.ok for r in reports) else EXIT_INCONSISTENT


def cmd_partials(config: CliConfig, args: argparse.Namespace) -> int:
    heaps = args.to or config.heaps
    if args.sweep:
        solutions = sweep_repetitions(args.code, args.sweep, heaps, config.limits())
    else:
        solutions = [solve_octal(args.code, heaps, config.limits(), shortcuts=config.shortcuts)]
    payload = [
        {
            "code": s.source,
            "order": s.order,
            "partial_orders": s.partial_orders,
            "converged": s.converged,
        }
        for s in solutions
    ]
    if args.sweep:
        text = "\n".join(f"{s.source}: {s.order}" for s in solutions)
    else:
        text = " ".join(str(n) for n in solutions[0].partial_orders)
    _emit(config, payload, text)
    return EXIT_OK if all(s.converged for s in solutions) else EXIT_USAGE


def cmd_ap(config: CliConfig, args: argparse.Namespace) -> int:
    beans = config.beans or (25 if args.tag == "0.26" else 14)
    report = ap_check(args.tag, max_heaps=3, max_beans=beans, use_oracle=not args.no_oracle)
    text = f"{args.tag}: {report.positions} positions, {len(report.mismatches)} mismatches"
    for mm in report.mismatches[:10]:
        text += (
            f"\n  {mm.heaps}: {mm.element} "
            f"quotient={mm.quotient.value} closed={mm.closed.value}"
        )
    _emit(config, report.model_dump(), text)
    return EXIT_OK if report.consistent else EXIT_INCONSISTENT


def cmd_catalog(config: CliConfig, args: argparse.Namespace) -> int:
    catalog = load_catalog()
    lines = []
    for rec in catalog.solutions:
        quotient = rec.claimed_name or rec.same_as or "-"
        lines.append(f"{rec.code:<8} {quotient:<6} p={rec.phi.period}  {rec.label}")
    lines += [f"{q.name:<8} order {q.order}" for q in catalog.quotients]
    lines += [f"{o.code} order {o.order} pd {o.pd}" for o in catalog.orders]
    _emit(config, catalog.model_dump(), "\n".join(lines))
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "solve-game": cmd_solve_game,
    "outcome": cmd_outcome,
    "outcome-expr": cmd_outcome_expr,
    "verify": cmd_verify,
    "partials": cmd_partials,
    "ap": cmd_ap,
    "catalog": cmd_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        config = CliConfig.from_args(args)
    except ValidationError as e:
        print(f"misere: invalid options: {e}", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(config.log_level, config.trace)
    try:
        status = COMMANDS[config.command](config, args)
    except MisereError as e:
        print(f"misere: {e.message}", file=sys.stderr)
        status = EXIT_USAGE
    finally:
        if config.metrics is not None:
            write_metrics(config.metrics)
    return status


def run() -> None:
    sys.exit(main())
