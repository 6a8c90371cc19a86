import pytest

from isotri.geometry import Triangle
from isotri.incidence import (
    boundary_gap,
    common_sides,
    midpoint_arc_condition,
    shares_side_and_angle,
    shares_vertex,
    side_in_side,
    vertices_on_boundary,
)

UNIT = Triangle.from_points((0, 0), (1, 0), (0, 1))


def test_side_in_side() -> None:
    on_edge = Triangle.from_points((0.2, 0), (0.6, 0), (0.3, 0.3))
    floating = Triangle.from_points((0.1, 0.1), (0.5, 0.1), (0.1, 0.5))
    assert side_in_side(on_edge, UNIT)
    assert not side_in_side(floating, UNIT)


def test_vertices_on_boundary() -> None:
    assert vertices_on_boundary([(0.5, 0), (0, 0.5), (0.5, 0.5)], UNIT)
    assert not vertices_on_boundary([(0.5, 0), (0.2, 0.2)], UNIT)
    assert vertices_on_boundary([(0.2, 0.2)], UNIT, rel=0.5)


def test_shares_vertex() -> None:
    touching = Triangle.from_points((1, 0), (2, 0), (2, 1))
    apart = Triangle.from_points((2, 0), (3, 0), (3, 1))
    assert shares_vertex(touching, UNIT)
    assert not shares_vertex(apart, UNIT)


def test_shares_side_and_angle() -> None:
    base = Triangle.from_points((0, 0), (2, 0), (0, 1))
    same_angle = Triangle.from_points((0, 0), (2, 0), (0, 2))
    other_angles = Triangle.from_points((0, 0), (2, 0), (1, 1))
    assert common_sides(base, same_angle) == [((0.0, 0.0), (2.0, 0.0))]
    assert shares_side_and_angle(base, same_angle)
    assert not shares_side_and_angle(base, other_angles)
    assert not shares_side_and_angle(base, Triangle.from_points((0, 0), (3, 0), (0, 1)))


def test_midpoint_arc_condition() -> None:
    spread = Triangle.from_points((0, 0), (0.9, 0.1), (0, 0.6))
    crowded = Triangle.from_points((0, 0), (0.2, 0), (0, 0.2))
    assert midpoint_arc_condition(spread, UNIT)
    assert not midpoint_arc_condition(crowded, UNIT)


def test_boundary_gap() -> None:
    assert boundary_gap([(0.2, 0.2), (0.5, 0)], UNIT) == pytest.approx(0.2)
    assert boundary_gap([], UNIT) == 0.0
