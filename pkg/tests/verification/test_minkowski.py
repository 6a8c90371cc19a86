import numpy as np
import pytest

from isotri.verification import (
    check_minkowski_perimeter,
    minkowski_mean,
    minkowski_sum,
    polygon_perimeter,
    random_convex_polygon,
)

SQUARE = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]


def test_sum_of_squares_merges_parallel_edges() -> None:
    clockwise = list(reversed(SQUARE))
    assert minkowski_sum(SQUARE, clockwise) == pytest.approx(
        [(0, 0), (2, 0), (2, 2), (0, 2)]
    )


def test_sum_of_square_and_triangle() -> None:
    triangle = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]
    total = minkowski_sum(SQUARE, triangle)
    assert total == pytest.approx([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
    assert polygon_perimeter(total) == pytest.approx(
        polygon_perimeter(SQUARE) + polygon_perimeter(triangle)
    )


def test_mean_of_homothetic_triangles_is_a_triangle() -> None:
    triangle = [(0.0, 0.0), (2.0, 0.0), (0.5, 1.0)]
    scaled = [(3 * x + 1, 3 * y - 2) for x, y in triangle]
    mean = minkowski_mean(triangle, scaled)
    assert len(mean) == 3
    assert polygon_perimeter(mean) == pytest.approx(2 * polygon_perimeter(triangle))


def test_random_convex_polygon_is_convex() -> None:
    rng = np.random.default_rng(0)
    for sides in (3, 4, 7):
        points = np.array(random_convex_polygon(rng, sides))
        edges = np.roll(points, -1, axis=0) - points
        turns = edges[:, 0] * np.roll(edges[:, 1], -1) - edges[:, 1] * np.roll(
            edges[:, 0], -1
        )
        assert len(points) == sides
        assert np.all(turns > 0) or np.all(turns < 0)


def test_check_minkowski_perimeter() -> None:
    report = check_minkowski_perimeter(400, 0)
    assert report.passed, report.details[:3]
    assert report.tally["homothetic"] == 100
    assert sum(report.tally.values()) == 400
