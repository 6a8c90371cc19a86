"""Brute-force oracle over isosceles shapes and orientations."""
from isotri.oracle.placement import (
    embedded_scale_grid,
    enclosing_scale_grid,
    max_embedded_at_pose,
    min_enclosing_at_pose,
)
from isotri.oracle.search import oracle_solve, pose_values
from isotri.oracle.typedefs import OracleConfig, OracleResult, ShapePose

__all__ = [
    "OracleConfig",
    "OracleResult",
    "ShapePose",
    "embedded_scale_grid",
    "enclosing_scale_grid",
    "max_embedded_at_pose",
    "min_enclosing_at_pose",
    "oracle_solve",
    "pose_values",
]
