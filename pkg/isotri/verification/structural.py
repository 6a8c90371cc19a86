"""Structural checks of optimal triangles on random scalene inputs.

``check_structural`` looks at oracle witnesses only, so it does not rely on
the candidate catalogs; the two theorem checks look at solver winners.
"""
from typing import List

from isotri.oracle import OracleConfig, oracle_solve
from isotri.problems import Problem
from isotri.solvers import WINNER_KINDS, solve, verify_witness
from isotri.verification.runner import Evaluation, Inputs, Margins, run_check
from isotri.verification.sampling import (
    scalene_triangles,
    triangle_from_inputs,
    triangle_inputs,
)
from isotri.verification.typedefs import CheckReport

# Distances in the witness checks are compared at this multiple of the diameter.
STRUCTURAL_REL = 1e-6
ORACLE_AGREEMENT = 1e-4

# Problems whose winner always shares a side and an angle with the input.
SIDE_AND_ANGLE_PROBLEMS = (
    Problem.MAX_AREA_EMBEDDED,
    Problem.MAX_PERIM_EMBEDDED,
    Problem.MIN_AREA_CONTAINER,
)


def _flag(holds: bool) -> float:
    return 1.0 if holds else -1.0


def _inputs(samples: int, seed: int) -> List[Inputs]:
    return [triangle_inputs(a, t) for a, t in scalene_triangles(samples, seed)]


# PUBLIC API


def structural_margins(x: Inputs, cfg: OracleConfig) -> Margins:
    """Oracle witnesses of all four problems against the structural conditions.

    Besides the incidence conditions, the oracle value has to agree with the
    solver to 1e-4 relative and may not beat it by more than ``value_tol``.
    """
    t = triangle_from_inputs(x)
    margins: Margins = []
    for problem in Problem:
        found = oracle_solve(t, problem, cfg)
        report = verify_witness(t, found.witness, problem, rel=STRUCTURAL_REL)
        label = problem.value
        margins += [
            (f"{label}: contained", _flag(report.contained)),
            (f"{label}: side in side", _flag(report.side_in_side)),
            (f"{label}: vertices on boundary", _flag(report.on_boundary)),
            (f"{label}: shared vertex", _flag(report.shares_vertex)),
        ]
        if report.midpoint_arcs is not None:
            margins.append((f"{label}: midpoint arcs", _flag(report.midpoint_arcs)))

        optimum = solve(t, problem).optimum
        gap = (found.value - optimum) / optimum
        # Positive gap means the oracle is worse, which is the feasible side.
        worse = -gap if problem.maximize else gap
        margins += [
            (f"{label}: oracle agrees", ORACLE_AGREEMENT - abs(gap)),
            (f"{label}: oracle not better", worse + cfg.value_tol),
        ]
    return margins


def check_structural(
    samples: int,
    seed: int,
    cfg: OracleConfig = OracleConfig(),
    max_workers: int = 1,
) -> CheckReport:
    """Run the oracle on random scalene triangles and check its witnesses."""
    return run_check(
        "structural",
        _inputs(samples, seed),
        lambda x: Evaluation(structural_margins(x, cfg)),
        seed,
        max_workers,
    )


def check_theorem1(samples: int, seed: int, max_workers: int = 1) -> CheckReport:
    """Winners share a side and an angle with the input and have known kinds.

    Covers max area and max perimeter embedded and min area container.
    """

    def _evaluate(x: Inputs) -> Evaluation:
        t = triangle_from_inputs(x)
        margins: Margins = []
        for problem in SIDE_AND_ANGLE_PROBLEMS:
            result = solve(t, problem)
            margins += [
                (
                    f"{problem.value}: shares side and angle",
                    _flag(result.shares_side_and_angle),
                ),
                (
                    f"{problem.value}: winner kind",
                    _flag(result.winner.kind in WINNER_KINDS[problem]),
                ),
            ]
        return Evaluation(margins)

    return run_check("theorem1", _inputs(samples, seed), _evaluate, seed, max_workers)


def check_theorem2_types(
    samples: int, seed: int, max_workers: int = 1
) -> CheckReport:
    """Every min perimeter container winner is one of five kinds.

    The report's tally counts how often each kind wins; only membership is
    checked.
    """
    problem = Problem.MIN_PERIM_CONTAINER

    def _evaluate(x: Inputs) -> Evaluation:
        kind = solve(triangle_from_inputs(x), problem).winner.kind
        return Evaluation(
            [("winner kind", _flag(kind in WINNER_KINDS[problem]))], kind.value
        )

    return run_check(
        "theorem2-types", _inputs(samples, seed), _evaluate, seed, max_workers
    )
