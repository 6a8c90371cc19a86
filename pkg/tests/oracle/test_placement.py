import math

import numpy as np
import pytest
from pydantic import ValidationError

from isotri.geometry import (
    Tolerance,
    angle_at,
    area,
    contains_triangle,
    is_isosceles,
    perimeter,
)
from isotri.oracle import (
    ShapePose,
    embedded_scale_grid,
    enclosing_scale_grid,
    max_embedded_at_pose,
    min_enclosing_at_pose,
)
from tests.utils import acute_triangle, obtuse_triangle, triangle_345

LOOSE = Tolerance(eps_rel=1e-7)
POSES = [
    ShapePose(gamma=1.0, theta=0.3),
    ShapePose(gamma=math.radians(100), theta=2.0),
    ShapePose(gamma=0.4, theta=5.5),
]


def test_pose_wraps_theta() -> None:
    assert ShapePose(gamma=1.0, theta=-0.5).theta == pytest.approx(2 * math.pi - 0.5)
    assert ShapePose(gamma=1.0, theta=7.0).theta == pytest.approx(7.0 - 2 * math.pi)
    with pytest.raises(ValidationError):
        ShapePose(gamma=math.pi, theta=0.0)


def test_pose_vertices_form_the_canonical_shape() -> None:
    pose = ShapePose(gamma=1.2, theta=0.7)
    apex, left, right = pose.vertices()
    assert apex == (0.0, 0.0)
    assert math.hypot(*left) == pytest.approx(1)
    assert math.hypot(*right) == pytest.approx(1)
    assert math.dist(left, right) == pytest.approx(2 * math.sin(0.6))


@pytest.mark.parametrize("pose", POSES)
def test_min_enclosing_at_pose(pose: ShapePose) -> None:
    t = obtuse_triangle()
    value, enclosing = min_enclosing_at_pose(t, pose, "perimeter")
    assert value == pytest.approx(perimeter(enclosing))
    assert contains_triangle(enclosing, t, LOOSE)
    assert is_isosceles(enclosing, LOOSE)[0]
    apex_angles = [angle_at(enclosing, i) for i in range(3)]
    assert pose.gamma == pytest.approx(apex_angles[0])
    area_value, same = min_enclosing_at_pose(t, pose, "area")
    assert area_value == pytest.approx(area(same))


@pytest.mark.parametrize("pose", POSES)
def test_max_embedded_at_pose(pose: ShapePose) -> None:
    t = acute_triangle()
    scale, embedded = max_embedded_at_pose(t, pose)
    assert contains_triangle(t, embedded, LOOSE)
    assert is_isosceles(embedded, LOOSE)[0]
    expected = scale * (2 + 2 * math.sin(pose.gamma / 2))
    assert perimeter(embedded) == pytest.approx(expected)


def test_grids_match_single_poses() -> None:
    t = triangle_345()
    gammas = np.array([pose.gamma for pose in POSES])
    thetas = np.array([pose.theta for pose in POSES])
    enclosing = enclosing_scale_grid(t, gammas, thetas)
    embedded = embedded_scale_grid(t, gammas, thetas)
    assert enclosing.shape == embedded.shape == (3, 3)
    for k, pose in enumerate(POSES):
        value, _ = min_enclosing_at_pose(t, pose, "perimeter")
        expected = value / (2 + 2 * math.sin(pose.gamma / 2))
        assert enclosing[k, k] == pytest.approx(expected)
        assert embedded[k, k] == pytest.approx(max_embedded_at_pose(t, pose)[0])
