"""Optimal placement of an isosceles shape at a fixed apex angle and orientation.

At a fixed pose both inner problems are solved exactly:

* the minimal enclosing homothet is bounded by the three support lines of the
  input triangle in the outward normal directions of the shape,
* the maximal embedded homothet is the optimum of a linear program in
  (scale, tx, ty) with nine constraints (three shape vertices times three
  half-planes).

Besides the single-pose functions, the module evaluates both problems on a
whole (gamma, theta) grid with numpy.
"""
import itertools
import math
from typing import List, Tuple

import numpy as np

from isotri.exceptions import InvalidPose
from isotri.geometry import Triangle, Vec, diameter
from isotri.oracle.typedefs import ShapePose

# All choices of three active constraints out of nine.
_BASES = np.array(list(itertools.combinations(range(9), 3)), dtype=int)


def _centered(t: Triangle) -> Tuple[np.ndarray, np.ndarray]:
    points = np.array(t.coords, dtype=float)
    centroid = points.mean(axis=0)
    return points - centroid, centroid


def _outward_normals(vertices: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Unit outward normals and lengths of the edges of a counter-clockwise polygon."""
    edges = np.roll(vertices, -1, axis=0) - vertices
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1) / lengths[:, None]
    return normals, lengths


def shape_metric(gamma: np.ndarray, scale: np.ndarray, metric: str) -> np.ndarray:
    """Area or perimeter of the canonical shape scaled by ``scale``."""
    if metric == "area":
        return scale * scale * np.sin(gamma) / 2
    if metric == "perimeter":
        return scale * (2 + 2 * np.sin(gamma / 2))
    raise ValueError(f"Unknown metric {metric!r}")


# PUBLIC API


def min_enclosing_at_pose(
    t: Triangle, pose: ShapePose, metric: str = "perimeter"
) -> Tuple[float, Triangle]:
    """Smallest homothet of the posed shape that contains t.

    Each edge of the result is the support line of t in that edge's outward
    normal direction. Area and perimeter are both monotone in the scale, so one
    construction serves both metrics.

    Returns:
        The metric of the enclosing triangle and the triangle itself.

    Raises:
        InvalidPose: if the support lines do not bound a triangle.
    """
    points, centroid = _centered(t)
    shape = np.array(pose.vertices())
    normals, lengths = _outward_normals(shape)
    support = (normals @ points.T).max(axis=1)
    scale = float(lengths @ support / math.sin(pose.gamma))
    if not (math.isfinite(scale) and scale > 0):
        raise InvalidPose(f"Support lines at {pose} do not bound a triangle.")

    corners: List[Vec] = []
    for i in range(3):
        rows = normals[[i - 1, i]]
        corner = np.linalg.solve(rows, support[[i - 1, i]]) + centroid
        corners.append((float(corner[0]), float(corner[1])))
    value = float(shape_metric(np.array(pose.gamma), np.array(scale), metric))
    return value, Triangle.from_points(*corners)


def max_embedded_at_pose(t: Triangle, pose: ShapePose) -> Tuple[float, Triangle]:
    """Largest homothet of the posed shape inside t.

    Maximizes s subject to s * u_k + tau lying in every half-plane of t, by
    solving all 84 three-constraint bases and keeping the feasible basis with
    the largest s.

    Returns:
        The scale s and the placed triangle.
    """
    points, centroid = _centered(t)
    shape = np.array(pose.vertices())
    outward, _ = _outward_normals(points)
    inward = -outward
    offsets = (inward * points).sum(axis=1)

    # Row (k, j): inward_j . (s u_k + tau) >= inward_j . p_j
    a = np.array(
        [
            [inward[j] @ shape[k], inward[j, 0], inward[j, 1]]
            for k in range(3)
            for j in range(3)
        ]
    )
    b = np.tile(offsets, 3)

    systems = a[_BASES]
    rhs = b[_BASES]
    solvable = np.abs(np.linalg.det(systems)) > 1e-12
    solutions = np.linalg.solve(systems[solvable], rhs[solvable][..., None])[..., 0]
    slack = 1e-9 * diameter(t)
    feasible = np.all(solutions @ a.T >= b - slack, axis=1)
    if not feasible.any():
        raise InvalidPose(f"No feasible basis at {pose}.")
    candidates = solutions[feasible]
    best = candidates[int(np.argmax(candidates[:, 0]))]
    scale = float(best[0])
    assert scale > 0, "an embedded homothet always has positive scale"

    placed = best[0] * shape + best[1:] + centroid
    return scale, Triangle.from_points(*(tuple(p) for p in placed))


def enclosing_scale_grid(
    t: Triangle, gammas: np.ndarray, thetas: np.ndarray
) -> np.ndarray:
    """Scale of the minimal enclosing homothet on the grid gammas x thetas."""
    points, _ = _centered(t)
    g = np.asarray(gammas, dtype=float)[:, None]
    th = np.broadcast_to(
        np.asarray(thetas, dtype=float)[None, :], (g.shape[0], len(thetas))
    )
    half = g / 2

    def _support(phi: np.ndarray) -> np.ndarray:
        directions = np.stack([np.cos(phi), np.sin(phi)], axis=-1)
        return (directions @ points.T).max(axis=-1)

    total = (
        _support(th - np.pi / 2 - half)
        + 2 * np.sin(half) * _support(th)
        + _support(th + np.pi / 2 + half)
    )
    return total / np.sin(g)


def embedded_scale_grid(
    t: Triangle, gammas: np.ndarray, thetas: np.ndarray
) -> np.ndarray:
    """Scale of the maximal embedded homothet on the grid gammas x thetas.

    At the optimum every side of t carries a vertex of the homothet, which
    gives s = 2 area(t) / -sum_j |side_j| * min_k (inward_j . u_k).
    """
    points, _ = _centered(t)
    outward, lengths = _outward_normals(points)
    inward_angles = np.arctan2(-outward[:, 1], -outward[:, 0])
    u, w = points[1] - points[0], points[2] - points[0]
    double_area = float(u[0] * w[1] - u[1] * w[0])
    g = np.asarray(gammas, dtype=float)[:, None, None]
    th = np.asarray(thetas, dtype=float)[None, :, None]
    mu = inward_angles[None, None, :]
    lowest = np.minimum(
        0.0, np.minimum(np.cos(th - g / 2 - mu), np.cos(th + g / 2 - mu))
    )
    return double_area / -(lowest * lengths).sum(axis=-1)
