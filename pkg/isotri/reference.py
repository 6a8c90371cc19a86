"""Published reference numbers and the instances they come from.

Two instances realize non-special minimum perimeter containers:

* v = 0.7: A = (0, 0), B = (1.57, 0), C = (1, 0.7), won by the Ex2 family;
* v = 0.8: A = (0, 0), B = (1.62474, 0), C = (1, 0.8), won by the apex family,
  with B at the printed (rounded) minimizer of f_0.8.
"""
import math
from typing import Callable, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict

from isotri.candidates import (
    CandidateKind,
    ContainerKind,
    NonSpecialKind,
    apex_candidates,
    apex_window,
    closed_form_perimeter,
    f_v,
    gamma_star,
    x_star,
)
from isotri.geometry import Triangle, Vec, normalize, triangle_from_sides
from isotri.problems import Problem

V07_VERTICES: Tuple[Vec, Vec, Vec] = ((0.0, 0.0), (1.57, 0.0), (1.0, 0.7))
V08_VERTICES: Tuple[Vec, Vec, Vec] = ((0.0, 0.0), (1.62474, 0.0), (1.0, 0.8))

X_STAR_TOLERANCE = 1e-5
VALUE_TOLERANCE = 5e-6
ANGLE_TOLERANCE_DEG = 5e-5
GAMMA_STAR_TOLERANCE_DEG = 1e-5

REFERENCE_COLUMNS = ["name", "computed", "expected", "tolerance", "unit", "status"]


class ReferenceValue(BaseModel):
    """A published number, how to recompute it and how closely it must match."""

    model_config = ConfigDict(frozen=True)

    name: str
    expected: float
    tolerance: float
    unit: str = ""
    compute: Callable[[], float]


class ReferenceInstance(BaseModel):
    """A named triangle with its known minimum perimeter container."""

    model_config = ConfigDict(frozen=True)

    name: str
    vertices: Tuple[Vec, Vec, Vec]
    problem: Problem = Problem.MIN_PERIM_CONTAINER
    winner: CandidateKind
    optimum: float
    """Expected optimum, to the printed precision."""

    @property
    def triangle(self) -> Triangle:
        return Triangle.from_points(*self.vertices)


def v07_triangle() -> Triangle:
    return Triangle.from_points(*V07_VERTICES)


def v08_triangle() -> Triangle:
    return Triangle.from_points(*V08_VERTICES)


def _special_perimeter(kind: ContainerKind, t: Triangle) -> float:
    return closed_form_perimeter(kind, normalize(t))


def best_apex_perimeter(t: Triangle) -> float:
    """Smallest perimeter among the valid apex family candidates of t."""
    values = [c.perimeter for c in apex_candidates(t) if c.valid and c.perimeter]
    if not values:
        raise ValueError("No apex family candidate contains the triangle.")
    return min(values)


# PUBLIC API


def reference_values() -> List[ReferenceValue]:
    """The eleven published values, in print order."""
    return [
        ReferenceValue(
            name="gamma*",
            expected=76.345415,
            tolerance=GAMMA_STAR_TOLERANCE_DEG,
            unit="deg",
            compute=lambda: math.degrees(gamma_star()),
        ),
        ReferenceValue(
            name="x*_0.7",
            expected=1.57517,
            tolerance=X_STAR_TOLERANCE,
            compute=lambda: x_star(0.7),
        ),
        ReferenceValue(
            name="f_0.7(x*_0.7)",
            expected=4.056333,
            tolerance=VALUE_TOLERANCE,
            compute=lambda: f_v(0.7, x_star(0.7)),
        ),
        ReferenceValue(
            name="v=0.7 per(AB'C)",
            expected=4.229145,
            tolerance=VALUE_TOLERANCE,
            compute=lambda: _special_perimeter(
                ContainerKind.AB_PRIME_C, v07_triangle()
            ),
        ),
        ReferenceValue(
            name="v=0.7 per(ABC')",
            expected=4.084007,
            tolerance=VALUE_TOLERANCE,
            compute=lambda: _special_perimeter(ContainerKind.ABC_PRIME, v07_triangle()),
        ),
        ReferenceValue(
            name="x*_0.8",
            expected=1.62474,
            tolerance=X_STAR_TOLERANCE,
            compute=lambda: x_star(0.8),
        ),
        ReferenceValue(
            name="f_0.8(x*_0.8)",
            expected=4.264511,
            tolerance=VALUE_TOLERANCE,
            compute=lambda: f_v(0.8, x_star(0.8)),
        ),
        ReferenceValue(
            name="v=0.8 per(ABC')",
            expected=4.3250804,
            tolerance=VALUE_TOLERANCE,
            compute=lambda: _special_perimeter(ContainerKind.ABC_PRIME, v08_triangle()),
        ),
        ReferenceValue(
            name="v=0.8 angle BCbarA",
            expected=75.974334,
            tolerance=ANGLE_TOLERANCE_DEG,
            unit="deg",
            compute=lambda: apex_window(v08_triangle()).low_degrees,
        ),
        ReferenceValue(
            name="v=0.8 angle BCA",
            expected=89.327359,
            tolerance=ANGLE_TOLERANCE_DEG,
            unit="deg",
            compute=lambda: apex_window(v08_triangle()).high_degrees,
        ),
        ReferenceValue(
            name="v=0.8 apex perimeter",
            expected=4.264431,
            tolerance=VALUE_TOLERANCE,
            compute=lambda: best_apex_perimeter(v08_triangle()),
        ),
    ]


def reference_table(tolerance: Optional[float] = None) -> pd.DataFrame:
    """Recompute every reference value and compare it with the printed one.

    Args:
        tolerance: absolute tolerance replacing the per-row defaults.
    """
    rows = []
    for ref in reference_values():
        computed = ref.compute()
        allowed = ref.tolerance if tolerance is None else tolerance
        rows.append(
            {
                "name": ref.name,
                "computed": computed,
                "expected": ref.expected,
                "tolerance": allowed,
                "unit": ref.unit,
                "status": "PASS" if abs(computed - ref.expected) <= allowed else "FAIL",
            }
        )
    return pd.DataFrame(rows, columns=REFERENCE_COLUMNS)


def realizability_instances() -> List[ReferenceInstance]:
    """Instances whose minimum perimeter container has a known kind."""
    return [
        ReferenceInstance(
            name="3-4-5",
            vertices=triangle_from_sides(3, 4, 5).coords,
            winner=ContainerKind.ABC_PRIME,
            optimum=5 * (2 + 2 / math.sqrt(10)),
        ),
        ReferenceInstance(
            name="v=0.7",
            vertices=V07_VERTICES,
            winner=NonSpecialKind.EX2,
            optimum=4.056333,
        ),
        ReferenceInstance(
            name="v=0.8",
            vertices=V08_VERTICES,
            winner=NonSpecialKind.APEX,
            optimum=4.264431,
        ),
    ]
