"""Tables and machine-readable records of solver runs.

Human output uses pandas tables printed at 6 significant digits; machine
output is a `RunRecord`, dumped with ``model_dump_json`` at 12 significant
digits.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from isotri.candidates import Candidate
from isotri.geometry import DEFAULT_TOLERANCE, Tolerance, Triangle
from isotri.incidence import shares_side_and_angle
from isotri.oracle import OracleResult
from isotri.problems import Problem
from isotri.solvers import SolveResult, solve
from isotri.verification.sampling import triangle_from_angles
from isotri.verification.typedefs import CheckReport
from isotri.version import __version__

HUMAN_DIGITS = 6
MACHINE_DIGITS = 12

CANDIDATE_COLUMNS = [
    "rank",
    "kind",
    "exists",
    "valid",
    "winner",
    "area",
    "perimeter",
    "note",
]
SWEEP_COLUMNS = [
    "i",
    "j",
    "alpha_deg",
    "beta_deg",
    "gamma_deg",
    "winner",
    "optimum",
]


def _sig(value: float) -> float:
    return float(f"{value:.{MACHINE_DIGITS}g}")


def _maybe_sig(value: Optional[float]) -> Optional[float]:
    return None if value is None else _sig(value)


def _vertices(t: Optional[Triangle]) -> Optional[List[List[float]]]:
    if t is None:
        return None
    return [[_sig(x), _sig(y)] for x, y in t.coords]


class CandidateRecord(BaseModel):
    """One row of the candidate list in a result record."""

    model_config = ConfigDict(frozen=True)

    kind: str
    vertices: Optional[List[List[float]]] = None
    area: Optional[float] = None
    perimeter: Optional[float] = None
    exists: bool = True
    valid: bool = False
    shares_side_and_angle: Optional[bool] = None
    """Only set on winners."""


class OracleRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    gamma_deg: float
    theta_deg: float
    converged: bool
    evaluations: int
    method: str


class ResultRecord(BaseModel):
    """Machine-readable result of one problem."""

    model_config = ConfigDict(frozen=True)

    problem: str
    input: Dict[str, List[List[float]]]
    optimum: float
    winners: List[CandidateRecord]
    candidates: List[CandidateRecord]
    oracle: Optional[OracleRecord] = None


class RunRecord(BaseModel):
    """Everything needed to replay and compare one command line run."""

    model_config = ConfigDict(frozen=True)

    version: str = __version__
    command: List[str]
    input: Dict[str, List[List[float]]]
    results: List[ResultRecord] = Field(default_factory=list)
    timing: Dict[str, float] = Field(default_factory=dict)
    """Wall-clock seconds per phase."""
    oracle: Optional[Dict[str, Any]] = None
    """Oracle settings, when the oracle ran."""


# PUBLIC API


def candidate_record(
    candidate: Candidate, shares_side_and_angle: Optional[bool] = None
) -> CandidateRecord:
    return CandidateRecord(
        kind=candidate.kind.value,
        vertices=_vertices(candidate.triangle),
        area=_maybe_sig(candidate.area),
        perimeter=_maybe_sig(candidate.perimeter),
        exists=candidate.exists,
        valid=candidate.valid,
        shares_side_and_angle=shares_side_and_angle,
    )


def oracle_record(found: OracleResult) -> OracleRecord:
    return OracleRecord(
        value=_sig(found.value),
        gamma_deg=_sig(math.degrees(found.pose.gamma)),
        theta_deg=_sig(math.degrees(found.pose.theta)),
        converged=found.converged,
        evaluations=found.evaluations,
        method=found.method,
    )


def input_record(t: Triangle) -> Dict[str, List[List[float]]]:
    return {"vertices": _vertices(t) or []}


def result_record(result: SolveResult) -> ResultRecord:
    """Turn a solver result into its machine-readable form.

    Every winner carries its own shares-side-and-angle flag; other candidates
    leave it unset.
    """
    winners = [
        candidate_record(
            c,
            c.triangle is not None
            and shares_side_and_angle(c.triangle, result.input),
        )
        for c in result.winners
    ]
    return ResultRecord(
        problem=result.problem.value,
        input=input_record(result.input),
        optimum=_sig(result.optimum),
        winners=winners,
        candidates=[candidate_record(c) for c in result.table],
        oracle=(
            None if result.oracle_check is None else oracle_record(result.oracle_check)
        ),
    )


def candidate_table(result: SolveResult) -> pd.DataFrame:
    """Every candidate of a result, valid ones ranked first."""
    winners = {c.kind for c in result.winners}
    rows = []
    rank = 0
    for c in result.table:
        if c.valid:
            rank += 1
        rows.append(
            {
                "rank": rank if c.valid else None,
                "kind": c.kind.value,
                "exists": c.exists,
                "valid": c.valid,
                "winner": c.kind in winners,
                "area": c.area,
                "perimeter": c.perimeter,
                "note": c.note,
            }
        )
    return pd.DataFrame(rows, columns=CANDIDATE_COLUMNS).astype({"rank": "Int64"})


def format_table(table: pd.DataFrame) -> str:
    """Render a table for people, at 6 significant digits."""
    return table.to_string(
        index=False, float_format=lambda v: f"{v:.{HUMAN_DIGITS}g}", na_rep="-"
    )


def sweep_grid(grid: int) -> List[Tuple[int, int, float, float]]:
    """Scalene shapes on a grid of the shape simplex.

    alpha takes ``grid`` half-offset steps in (0, 60) degrees and beta takes
    ``grid`` half-offset steps across (alpha, 90 - alpha / 2), the range that
    keeps alpha < beta < gamma.

    Returns:
        (i, j, alpha, beta) with the angles in radians.
    """
    points = []
    for i in range(grid):
        alpha = (i + 0.5) * (math.pi / 3) / grid
        top = (math.pi - alpha) / 2
        for j in range(grid):
            beta = alpha + (j + 0.5) * (top - alpha) / grid
            points.append((i, j, alpha, beta))
    return points


def sweep_table(
    grid: int,
    problem: Problem = Problem.MIN_PERIM_CONTAINER,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_workers: int = 1,
) -> pd.DataFrame:
    """Winner kind and optimum over the shape grid.

    Shapes are scaled to circumdiameter 1. Rows are in grid order whatever the
    number of workers.
    """
    points = sweep_grid(grid)

    def _row(point: Tuple[int, int, float, float]) -> Dict[str, Any]:
        i, j, alpha, beta = point
        gamma = math.pi - alpha - beta
        result = solve(triangle_from_angles(alpha, beta, gamma), problem, tol)
        return {
            "i": i,
            "j": j,
            "alpha_deg": math.degrees(alpha),
            "beta_deg": math.degrees(beta),
            "gamma_deg": math.degrees(gamma),
            "winner": result.winner.kind.value,
            "optimum": result.optimum,
        }

    if max_workers == 1:
        rows = [_row(p) for p in points]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            rows = list(executor.map(_row, points))
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def winner_frequencies(table: pd.DataFrame) -> pd.Series:
    """Share of grid points won by each kind."""
    return table["winner"].value_counts(normalize=True).sort_index()


def summary_table(reports: Sequence[CheckReport]) -> pd.DataFrame:
    """One row per check report."""
    return pd.DataFrame(
        [
            {
                "check": r.lemma_id,
                "samples": r.samples,
                "failures": r.failures,
                "worst_margin": r.worst_margin,
                "seed": r.seed,
                "status": "PASS" if r.passed else "FAIL",
            }
            for r in reports
        ],
        columns=["check", "samples", "failures", "worst_margin", "seed", "status"],
    )


def result_schema() -> Dict[str, Any]:
    """JSON schema of the records ``--json`` prints."""
    return RunRecord.model_json_schema()

