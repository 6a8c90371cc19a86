"""Type definitions for the brute-force oracle."""
from __future__ import annotations

import math
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from isotri.geometry import Triangle, Vec
from isotri.problems import Problem


class ShapePose(BaseModel):
    """An isosceles shape and an orientation.

    The canonical shape has its apex at the origin, legs of unit length and
    the axis of symmetry along +x; ``theta`` rotates it counter-clockwise.
    Mirror images are not needed since the shape is symmetric.
    """

    model_config = ConfigDict(frozen=True)

    gamma: float = Field(gt=0, lt=math.pi, description="Apex angle in radians.")
    theta: float = Field(ge=0, lt=2 * math.pi, description="Orientation in radians.")

    @field_validator("theta", mode="before")
    @classmethod
    def _wrap_theta(cls, v: float) -> float:
        return float(v) % (2 * math.pi)

    def vertices(self) -> Tuple[Vec, Vec, Vec]:
        """Apex and base vertices of the rotated canonical shape, counter-clockwise."""
        c, s = math.cos(self.theta), math.sin(self.theta)
        half = self.gamma / 2
        lower = (math.cos(half), -math.sin(half))
        upper = (math.cos(half), math.sin(half))

        def _rotate(p: Vec) -> Vec:
            return (c * p[0] - s * p[1], s * p[0] + c * p[1])

        return (0.0, 0.0), _rotate(lower), _rotate(upper)


class OracleConfig(BaseModel):
    """Grid and refinement settings of ``oracle_solve``."""

    model_config = ConfigDict(frozen=True)

    grid_gamma: int = Field(default=720, ge=1, description="Cells on the apex angle.")
    grid_theta: int = Field(default=720, ge=1, description="Cells on the orientation.")
    refine_iters: int = Field(
        default=200, ge=1, description="Iteration budget of each local refinement."
    )
    refine_starts: int = Field(
        default=5, ge=1, description="Number of grid cells refinement starts from."
    )
    param_tol: float = Field(
        default=1e-10, gt=0, description="Convergence threshold on (gamma, theta)."
    )
    value_tol: float = Field(
        default=1e-9, gt=0, description="Relative convergence threshold on the value."
    )
    max_workers: int = Field(
        default=1, ge=1, description="Threads used to evaluate the grid."
    )


class OracleResult(BaseModel):
    """Best isosceles triangle found by the oracle."""

    model_config = ConfigDict(frozen=True)

    problem: Problem
    value: float
    witness: Triangle
    pose: ShapePose
    evaluations: int
    converged: bool
    grid_value: float
    """Best value on the grid, before refinement."""
    method: str = "nelder-mead"
    """Local refinement used after the grid."""
