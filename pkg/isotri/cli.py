"""Command line interface.

Every subcommand returns an exit code: 0 on success, 1 on bad input and 2
when a verification or cross-check fails.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from isotri.candidates import Candidate
from isotri.exceptions import InputError, IsotriException
from isotri.geometry import (
    DEFAULT_TOLERANCE,
    Tolerance,
    Triangle,
    Vec,
    triangle_from_sides,
)
from isotri.oracle import OracleConfig, OracleResult, oracle_solve
from isotri.problems import Problem
from isotri.reference import reference_table
from isotri.rendering import DEFAULT_SCALE, render_phase_map, render_svg
from isotri.reporting import (
    RunRecord,
    candidate_table,
    format_table,
    input_record,
    oracle_record,
    result_record,
    summary_table,
    sweep_table,
    winner_frequencies,
)
from isotri.solvers import SolveResult, solve
from isotri.verification import LEMMAS, SuiteConfig, run_all
from isotri.version import __version__

logger = logging.getLogger(__name__)

# Relative gap between oracle and solver tolerated by ``solve --oracle``.
CROSS_CHECK = 1e-3
EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAILED = 2

# Oracle grid of the cli; the library default is finer.
CLI_ORACLE_GRID = 360


class TriangleInput(BaseModel):
    """A triangle given either by its vertices or by its side lengths."""

    model_config = ConfigDict(frozen=True)

    vertices: Optional[Tuple[Vec, Vec, Vec]] = None
    sides: Optional[Tuple[float, float, float]] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> TriangleInput:
        if (self.vertices is None) == (self.sides is None):
            raise ValueError("Give exactly one of vertices or sides.")
        return self

    def triangle(self) -> Triangle:
        """The input triangle; sides are placed canonically."""
        if self.sides is not None:
            return triangle_from_sides(*self.sides)
        assert self.vertices is not None
        return Triangle.from_points(*self.vertices)


def _numbers(text: str, count: int, what: str) -> List[float]:
    try:
        values = [float(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"Could not read {what} from {text!r}.")
    if len(values) != count:
        raise InputError(f"Expected {count} numbers for {what}, got {len(values)}.")
    return values


def parse_triangle_input(
    sides: Optional[str] = None, vertices: Optional[str] = None
) -> TriangleInput:
    """Read ``--sides "3,4,5"`` or ``--vertices "0,0 1.57,0 1,0.7"``.

    Raises:
        InputError: if both or neither are given, or the text is malformed.
    """
    if (sides is None) == (vertices is None):
        raise InputError("Give exactly one of --sides or --vertices.")
    if sides is not None:
        a, b, c = _numbers(sides, 3, "sides")
        return TriangleInput(sides=(a, b, c))
    assert vertices is not None
    x0, y0, x1, y1, x2, y2 = _numbers(vertices, 6, "vertices")
    return TriangleInput(vertices=((x0, y0), (x1, y1), (x2, y2)))


class _Parser(argparse.ArgumentParser):
    """Argument parser reporting usage errors with exit code 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="Print machine output.")
    p.add_argument("--seed", type=int, default=0, help="Seed of sampled checks.")
    p.add_argument(
        "--tolerance",
        type=float,
        default=None,
        help="Relative solver tolerance; absolute tolerance for reference-table.",
    )
    p.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )
    p.add_argument("-v", "--verbose", action="store_true", help="Log at INFO.")
    return p


def _input_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--sides", help='Side lengths, e.g. "3,4,5".')
    p.add_argument("--vertices", help='Vertices, e.g. "0,0 1.57,0 1,0.7".')
    return p


def _oracle_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--grid", type=int, default=CLI_ORACLE_GRID, help="Oracle grid.")
    p.add_argument("--workers", type=int, default=1, help="Worker threads.")
    return p


def _problem_choices(allow_all: bool) -> List[str]:
    choices = [p.value for p in Problem]
    return ["all", *choices] if allow_all else choices


def build_parser() -> argparse.ArgumentParser:
    common, inputs, oracle = _common_flags(), _input_flags(), _oracle_flags()
    parser = _Parser(
        prog="isotri",
        description="Optimal isosceles containers and embedded triangles.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser(
        "solve", parents=[common, inputs, oracle], help="Solve by candidates."
    )
    p.add_argument("--problem", default="all", choices=_problem_choices(True))
    p.add_argument("--oracle", action="store_true", help="Cross-check the oracle.")
    p.add_argument("--svg", type=Path, help="Write input and winners as SVG.")
    p.add_argument("--svg-all", action="store_true", help="Draw every candidate.")
    p.add_argument("--scale", type=float, default=DEFAULT_SCALE)
    p.set_defaults(handler=cmd_solve)

    p = commands.add_parser(
        "oracle", parents=[common, inputs, oracle], help="Run the oracle alone."
    )
    p.add_argument("--problem", default="all", choices=_problem_choices(True))
    p.set_defaults(handler=cmd_oracle)

    p = commands.add_parser(
        "verify", parents=[common, oracle], help="Run the seeded checks."
    )
    p.add_argument(
        "--lemma",
        action="append",
        default=None,
        choices=["all", *LEMMAS],
        help="Check to run; repeat for several (default all).",
    )
    p.add_argument("--samples", type=int, default=SuiteConfig().samples)
    p.set_defaults(handler=cmd_verify)

    p = commands.add_parser(
        "reference-table",
        aliases=["paper-table"],
        parents=[common],
        help="Recompute published values.",
    )
    p.set_defaults(handler=cmd_reference_table)

    p = commands.add_parser(
        "sweep", parents=[common], help="Winner kinds over the shape simplex."
    )
    p.add_argument("--grid", type=int, default=24, help="Steps per angle.")
    p.add_argument(
        "--problem",
        default=Problem.MIN_PERIM_CONTAINER.value,
        choices=_problem_choices(False),
    )
    p.add_argument("--csv", type=Path, help="Write the table as CSV.")
    p.add_argument("--svg", type=Path, help="Write the phase map as SVG.")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(handler=cmd_sweep)

    p = commands.add_parser(
        "render", parents=[common, inputs], help="Draw a triangle and candidates."
    )
    p.add_argument(
        "--problem",
        default=Problem.MIN_PERIM_CONTAINER.value,
        choices=_problem_choices(False),
    )
    p.add_argument(
        "--kinds",
        default="winners",
        help='"winners", "all" or comma separated kinds, e.g. "cont:ABC\'".',
    )
    p.add_argument("--scale", type=float, default=DEFAULT_SCALE)
    p.add_argument("-o", "--output", type=Path, help="Output file (default stdout).")
    p.set_defaults(handler=cmd_render)
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = "INFO" if args.verbose and args.log_level == "WARNING" else args.log_level
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )


def _problems(name: str) -> List[Problem]:
    return list(Problem) if name == "all" else [Problem(name)]


def _tolerance(args: argparse.Namespace) -> Tolerance:
    if args.tolerance is None:
        return DEFAULT_TOLERANCE
    return Tolerance(eps_rel=args.tolerance)


def _oracle_config(args: argparse.Namespace) -> OracleConfig:
    return OracleConfig(
        grid_gamma=args.grid, grid_theta=args.grid, max_workers=args.workers
    )


def _triangle(args: argparse.Namespace) -> Triangle:
    return parse_triangle_input(args.sides, args.vertices).triangle()


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)


def _print_result(result: SolveResult) -> None:
    winner = result.winner
    print(f"problem: {result.problem.value}")
    print(f"winner: {', '.join(c.kind.value for c in result.winners)}")
    print(f"{result.problem.metric}: {result.optimum:.6g}")
    print(f"shares_side_and_angle: {str(result.shares_side_and_angle).lower()}")
    if winner.triangle is not None:
        coords = " ".join(f"({x:.6g}, {y:.6g})" for x, y in winner.triangle.coords)
        print(f"vertices: {coords}")
    print(format_table(candidate_table(result)))


def _oracle_gap(result: SolveResult, found: OracleResult) -> float:
    return abs(found.value - result.optimum) / abs(result.optimum)


# PUBLIC API


def cmd_solve(args: argparse.Namespace, command: Sequence[str]) -> int:
    """Solve the selected problems and optionally cross-check with the oracle."""
    t = _triangle(args)
    tol = _tolerance(args)
    timing: Dict[str, float] = {}

    start = time.perf_counter()
    results = [solve(t, problem, tol) for problem in _problems(args.problem)]
    timing["solve"] = time.perf_counter() - start

    status = EXIT_OK
    oracle_settings: Optional[Dict[str, Any]] = None
    if args.oracle:
        cfg = _oracle_config(args)
        oracle_settings = cfg.model_dump()
        start = time.perf_counter()
        checked = []
        for result in results:
            found = oracle_solve(t, result.problem, cfg)
            gap = _oracle_gap(result, found)
            if gap > CROSS_CHECK:
                logger.error(
                    "%s: oracle %.12g disagrees with solver %.12g (gap %.3g)",
                    result.problem.value,
                    found.value,
                    result.optimum,
                    gap,
                )
                status = EXIT_FAILED
            checked.append(result.model_copy(update={"oracle_check": found}))
        results = checked
        timing["oracle"] = time.perf_counter() - start

    if args.svg is not None:
        drawn: List[Candidate] = []
        for result in results:
            drawn += result.table if args.svg_all else result.winners
        metric = results[0].problem.metric if len(results) == 1 else "perimeter"
        _write(args.svg, render_svg(t, drawn, metric=metric, scale=args.scale))

    if args.json:
        record = RunRecord(
            command=list(command),
            input=input_record(t),
            results=[result_record(r) for r in results],
            timing=timing,
            oracle=oracle_settings,
        )
        print(record.model_dump_json(indent=2))
    else:
        for i, result in enumerate(results):
            if i:
                print()
            _print_result(result)
            if result.oracle_check is not None:
                found = result.oracle_check
                print(
                    f"oracle: {found.value:.6g} (gap {_oracle_gap(result, found):.3g},"
                    f" converged={str(found.converged).lower()})"
                )
    return status


def cmd_oracle(args: argparse.Namespace, command: Sequence[str]) -> int:
    """Run the brute-force oracle without the candidate solver."""
    t = _triangle(args)
    cfg = _oracle_config(args)
    found = [oracle_solve(t, problem, cfg) for problem in _problems(args.problem)]
    if args.json:
        payload = {
            "version": __version__,
            "command": list(command),
            "input": input_record(t),
            "oracle": cfg.model_dump(),
            "results": [
                {"problem": f.problem.value, **oracle_record(f).model_dump()}
                for f in found
            ],
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    for f in found:
        record = oracle_record(f)
        print(
            f"{f.problem.value}: {f.value:.6g}  gamma={record.gamma_deg:.6g} deg"
            f"  theta={record.theta_deg:.6g} deg  grid={f.grid_value:.6g}"
            f"  evaluations={f.evaluations}"
            f"  converged={str(f.converged).lower()}"
        )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, command: Sequence[str]) -> int:
    """Run the seeded checks and print one row per check."""
    lemmas = args.lemma or ["all"]
    selected = None if "all" in lemmas else lemmas
    cfg = SuiteConfig(
        samples=args.samples,
        seed=args.seed,
        max_workers=args.workers,
        oracle=_oracle_config(args),
    )
    reports = run_all(cfg, selected)
    if args.json:
        print(json.dumps([r.model_dump() for r in reports], indent=2))
    else:
        print(format_table(summary_table(reports)))
        for report in reports:
            for detail in report.details[:5]:
                print(
                    f"{report.lemma_id} sample {detail['index']}: {detail['item']}"
                    f" margin {detail['margin']:.3g}"
                )
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_reference_table(args: argparse.Namespace, command: Sequence[str]) -> int:
    """Recompute the published numbers and diff them."""
    table = reference_table(args.tolerance)
    if args.json:
        print(table.to_json(orient="records", indent=2))
    else:
        print(format_table(table))
    return EXIT_OK if (table["status"] == "PASS").all() else EXIT_FAILED


def cmd_sweep(args: argparse.Namespace, command: Sequence[str]) -> int:
    """Solve one problem over a grid of shapes."""
    table = sweep_table(
        args.grid, Problem(args.problem), _tolerance(args), args.workers
    )
    if args.csv is not None:
        table.to_csv(args.csv, index=False)
        logger.info("wrote %s", args.csv)
    if args.svg is not None:
        _write(args.svg, render_phase_map(table))
    if args.json:
        print(table.to_json(orient="records", indent=2))
    else:
        frequencies = winner_frequencies(table).rename("share").reset_index()
        print(format_table(frequencies))
    return EXIT_OK


def cmd_render(args: argparse.Namespace, command: Sequence[str]) -> int:
    """Draw a triangle with a chosen subset of candidates."""
    t = _triangle(args)
    result = solve(t, Problem(args.problem), _tolerance(args))
    if args.kinds == "winners":
        drawn = result.winners
    elif args.kinds == "all":
        drawn = result.table
    else:
        wanted = {k.strip() for k in args.kinds.split(",") if k.strip()}
        drawn = [c for c in result.table if c.kind.value in wanted]
        missing = wanted - {c.kind.value for c in drawn}
        if missing:
            raise InputError(f"No candidates of kind {sorted(missing)}.")
    svg = render_svg(t, drawn, metric=result.problem.metric, scale=args.scale)
    if args.output is None:
        sys.stdout.write(svg)
    else:
        _write(args.output, svg)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    _configure_logging(args)
    try:
        return int(args.handler(args, ["isotri", *argv]))
    except ValidationError as e:
        print(f"isotri: error: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_INPUT
    except IsotriException as e:
        print(f"isotri: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
