"""Seeded random shapes and triangles.

Angles are drawn on the open simplex alpha < beta < gamma with a margin to
every boundary, so the sides are strictly ordered a < b < c and far enough
from ties that tolerances never decide a comparison.
"""
import math
from typing import Dict, Iterator, Tuple

import numpy as np

from isotri.geometry import Triangle, TriangleShape, angles_from_sides, similarity

DEFAULT_MARGIN = 1e-3

Angles = Tuple[float, float, float]


def sample_angles(rng: np.random.Generator, margin: float = DEFAULT_MARGIN) -> Angles:
    """Rejection-sample (alpha, beta, gamma) with alpha < beta < gamma."""
    while True:
        alpha, beta = rng.uniform(0, math.pi, size=2)
        gamma = math.pi - alpha - beta
        if alpha > margin and beta - alpha > margin and gamma - beta > margin:
            return float(alpha), float(beta), float(gamma)


def shape_from_angles(alpha: float, beta: float, gamma: float) -> TriangleShape:
    """The shape with circumdiameter 1 and the given angles."""
    a, b, c = math.sin(alpha), math.sin(beta), math.sin(gamma)
    # Recomputing the angles from the sides keeps the shape self-consistent.
    alpha, beta, gamma = angles_from_sides(a, b, c)
    return TriangleShape(
        a=a, b=b, c=c, alpha=alpha, beta=beta, gamma=gamma, vertex_map=(0, 1, 2)
    )


def triangle_from_angles(alpha: float, beta: float, gamma: float) -> Triangle:
    """A at the origin, B on the positive x axis, C above; |BC| = sin(alpha)."""
    b, c = math.sin(beta), math.sin(gamma)
    return Triangle.from_points(
        (0.0, 0.0), (c, 0.0), (b * math.cos(alpha), b * math.sin(alpha))
    )


def random_placement(t: Triangle, rng: np.random.Generator) -> Triangle:
    """Apply a random rotation, reflection, scale and offset to t."""
    return similarity(
        t,
        rotation=float(rng.uniform(0, 2 * math.pi)),
        factor=float(np.exp(rng.uniform(-2, 2))),
        offset=(float(rng.uniform(-10, 10)), float(rng.uniform(-10, 10))),
        mirror=bool(rng.integers(2)),
    )


def scalene_triangles(
    samples: int, seed: int, margin: float = DEFAULT_MARGIN
) -> Iterator[Tuple[Angles, Triangle]]:
    """Random scalene triangles in random placements, with their angles."""
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        angles = sample_angles(rng, margin)
        yield angles, random_placement(triangle_from_angles(*angles), rng)


def triangle_inputs(angles: Angles, t: Triangle) -> Dict[str, float]:
    """Flat record of a sampled triangle, as stored in failure details."""
    record = dict(zip(("alpha", "beta", "gamma"), angles))
    for i, (x, y) in enumerate(t.coords):
        record[f"x{i}"] = x
        record[f"y{i}"] = y
    return record


def triangle_from_inputs(record: Dict[str, float]) -> Triangle:
    return Triangle.from_points(*((record[f"x{i}"], record[f"y{i}"]) for i in range(3)))
