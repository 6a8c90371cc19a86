"""Minkowski sums of convex polygons and the perimeter of their mean.

The sum of two convex polygons is traced by merging their edge sequences in
order of direction, starting from the sum of their lowest vertices. Parallel
edges merge into one, so the mean of two homothetic polygons has as many
edges as either of them.
"""
import math
from typing import Dict, List, Sequence, Tuple

import numpy as np

from isotri.geometry import Vec
from isotri.verification.runner import Evaluation, Inputs, run_check
from isotri.verification.typedefs import CheckReport

PERIMETER_AGREEMENT = 1e-9
# Edge directions closer than this (radians) are merged.
_PARALLEL = 1e-9
# Minimal angular gap between sampled vertices on their ellipse.
_MIN_GAP = 0.05


def _ccw_from_lowest(vertices: Sequence[Vec]) -> np.ndarray:
    points = np.asarray(vertices, dtype=float)
    x, y = points[:, 0], points[:, 1]
    if (x * np.roll(y, -1) - np.roll(x, -1) * y).sum() < 0:
        points = points[::-1]
    start = int(np.lexsort((points[:, 0], points[:, 1]))[0])
    return np.roll(points, -start, axis=0)


def _edges(points: np.ndarray) -> np.ndarray:
    return np.roll(points, -1, axis=0) - points


# PUBLIC API


def polygon_perimeter(vertices: Sequence[Vec]) -> float:
    edges = _edges(np.asarray(vertices, dtype=float))
    return float(np.hypot(edges[:, 0], edges[:, 1]).sum())


def minkowski_sum(p: Sequence[Vec], q: Sequence[Vec]) -> List[Vec]:
    """Vertices of p + q, counter-clockwise from the lowest one.

    Args:
        p: vertices of a convex polygon, in either orientation.
        q: vertices of a convex polygon, in either orientation.
    """
    first, second = _ccw_from_lowest(p), _ccw_from_lowest(q)
    edges = np.concatenate([_edges(first), _edges(second)])
    angles = np.mod(np.arctan2(edges[:, 1], edges[:, 0]), 2 * math.pi)
    order = np.argsort(angles, kind="stable")

    merged: List[np.ndarray] = []
    previous = -math.inf
    for k in order:
        if merged and angles[k] - previous <= _PARALLEL:
            merged[-1] = merged[-1] + edges[k]
        else:
            merged.append(edges[k].copy())
        previous = angles[k]

    start = first[0] + second[0]
    points = start + np.cumsum(merged[:-1], axis=0)
    return [(float(start[0]), float(start[1]))] + [
        (float(x), float(y)) for x, y in points
    ]


def minkowski_mean(p: Sequence[Vec], q: Sequence[Vec]) -> List[Vec]:
    """Vertices of (p + q) / 2."""
    return [(x / 2, y / 2) for x, y in minkowski_sum(p, q)]


def random_convex_polygon(rng: np.random.Generator, sides: int) -> List[Vec]:
    """Vertices on a random ellipse, counter-clockwise, well separated."""
    while True:
        phis = np.sort(rng.uniform(0, 2 * math.pi, size=sides))
        gaps = np.diff(np.append(phis, phis[0] + 2 * math.pi))
        if gaps.min() > _MIN_GAP:
            break
    radii = np.exp(rng.uniform(-1, 1, size=2))
    tilt = rng.uniform(0, 2 * math.pi)
    center = rng.uniform(-5, 5, size=2)
    local = np.stack([radii[0] * np.cos(phis), radii[1] * np.sin(phis)], axis=1)
    c, s = math.cos(tilt), math.sin(tilt)
    placed = local @ np.array([[c, s], [-s, c]]) + center
    return [(float(x), float(y)) for x, y in placed]


def _flatten(prefix: str, vertices: Sequence[Vec]) -> Dict[str, float]:
    out: Dict[str, float] = {}
    for i, (x, y) in enumerate(vertices):
        out[f"{prefix}{i}_x"] = x
        out[f"{prefix}{i}_y"] = y
    return out


def _unflatten(prefix: str, x: Inputs, count: int) -> List[Vec]:
    return [(x[f"{prefix}{i}_x"], x[f"{prefix}{i}_y"]) for i in range(count)]


def _pair(x: Inputs) -> Tuple[List[Vec], List[Vec]]:
    return (
        _unflatten("p", x, int(x["sides_p"])),
        _unflatten("q", x, int(x["sides_q"])),
    )


def _evaluate(x: Inputs) -> Evaluation:
    p, q = _pair(x)
    mean = minkowski_mean(p, q)
    expected = (polygon_perimeter(p) + polygon_perimeter(q)) / 2
    error = abs(polygon_perimeter(mean) - expected) / expected
    margins = [("per(K) = mean perimeter", PERIMETER_AGREEMENT - error)]
    triangles = len(p) == 3 and len(q) == 3
    if triangles and x["homothetic"]:
        margins.append(("homothetic mean is a triangle", 0.5 - abs(len(mean) - 3)))
    elif triangles:
        margins.append(("non-homothetic mean has >= 4 edges", len(mean) - 3.5))
    category = "homothetic" if x["homothetic"] else f"{len(p)}+{len(q)}"
    return Evaluation(margins, category)


def check_minkowski_perimeter(
    samples: int, seed: int, max_workers: int = 1
) -> CheckReport:
    """Perimeter of the Minkowski mean of random convex polygon pairs.

    Every fourth pair is a triangle and a random homothet of it; the others
    are independent triangles or quadrilaterals.
    """
    rng = np.random.default_rng(seed)
    inputs: List[Inputs] = []
    for index in range(samples):
        if index % 4 == 0:
            p = random_convex_polygon(rng, 3)
            factor = float(np.exp(rng.uniform(-2, 2)))
            shift = rng.uniform(-5, 5, size=2)
            q = [
                (factor * px + float(shift[0]), factor * py + float(shift[1]))
                for px, py in p
            ]
        else:
            p = random_convex_polygon(rng, int(rng.integers(3, 5)))
            q = random_convex_polygon(rng, int(rng.integers(3, 5)))
        inputs.append(
            {
                "sides_p": float(len(p)),
                "sides_q": float(len(q)),
                "homothetic": float(index % 4 == 0),
                **_flatten("p", p),
                **_flatten("q", q),
            }
        )
    return run_check("minkowski-perimeter", inputs, _evaluate, seed, max_workers)
