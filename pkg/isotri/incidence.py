"""Incidence predicates between two triangles.

These are the structural properties optimal configurations are known to have:
a side of one triangle lying in a side of the other, vertices on the
boundary, a shared vertex, and a shared side together with the angle at one
of its endpoints. Distances are compared at ``rel * diam`` where diam is the
larger diameter of the triangles involved.
"""
import itertools
from typing import List, Optional, Sequence, Tuple

from isotri.geometry import (
    DEFAULT_TOLERANCE,
    Tolerance,
    Triangle,
    Vec,
    angle_between,
    diameter,
    distance,
    distance_to_segment,
    segment_parameter,
    sub,
)


def _slack(rel: float, *triangles: Triangle) -> float:
    return rel * max(diameter(t) for t in triangles)


def _rel(tol: Tolerance, rel: Optional[float]) -> float:
    return tol.eps_rel if rel is None else rel


def _boundary_distance(p: Vec, t: Triangle) -> float:
    return min(distance_to_segment(p, start, end) for start, end in t.edges())


def _interior_angle(t: Triangle, vertex: Vec) -> float:
    """Interior angle of t at the vertex of t closest to ``vertex``."""
    coords = t.coords
    index = min(range(3), key=lambda i: distance(coords[i], vertex))
    here = coords[index]
    return angle_between(
        sub(coords[(index + 1) % 3], here), sub(coords[(index + 2) % 3], here)
    )


# PUBLIC API


def side_in_side(
    inner: Triangle,
    outer: Triangle,
    tol: Tolerance = DEFAULT_TOLERANCE,
    rel: Optional[float] = None,
) -> bool:
    """Whether some side of inner lies within some side of outer."""
    slack = _slack(_rel(tol, rel), inner, outer)
    for (p, q), (start, end) in itertools.product(inner.edges(), outer.edges()):
        if (
            distance_to_segment(p, start, end) <= slack
            and distance_to_segment(q, start, end) <= slack
        ):
            return True
    return False


def vertices_on_boundary(
    points: Sequence[Vec],
    t: Triangle,
    tol: Tolerance = DEFAULT_TOLERANCE,
    rel: Optional[float] = None,
) -> bool:
    """Whether every point lies on the boundary of t."""
    slack = _rel(tol, rel) * diameter(t)
    return all(_boundary_distance(p, t) <= slack for p in points)


def shares_vertex(
    a: Triangle,
    b: Triangle,
    tol: Tolerance = DEFAULT_TOLERANCE,
    rel: Optional[float] = None,
) -> bool:
    """Whether a vertex of a coincides with a vertex of b."""
    slack = _slack(_rel(tol, rel), a, b)
    return any(
        distance(p, q) <= slack for p, q in itertools.product(a.coords, b.coords)
    )


def common_sides(
    a: Triangle,
    b: Triangle,
    tol: Tolerance = DEFAULT_TOLERANCE,
    rel: Optional[float] = None,
) -> List[Tuple[Vec, Vec]]:
    """Sides of a whose endpoints are both vertices of b."""
    slack = _slack(_rel(tol, rel), a, b)
    sides = []
    for p, q in a.edges():
        if any(distance(p, v) <= slack for v in b.coords) and any(
            distance(q, v) <= slack for v in b.coords
        ):
            sides.append((p, q))
    return sides


def shares_side_and_angle(
    a: Triangle,
    b: Triangle,
    tol: Tolerance = DEFAULT_TOLERANCE,
    angle_tol: float = 1e-7,
) -> bool:
    """Whether a and b have a common side and equal angles at one of its ends.

    The common side has to be a full side of both triangles; equal angles are
    compared at ``angle_tol`` radians.
    """
    for p, q in common_sides(a, b, tol):
        for end in (p, q):
            if abs(_interior_angle(a, end) - _interior_angle(b, end)) <= angle_tol:
                return True
    return False


def midpoint_arc_condition(
    witness: Triangle,
    t: Triangle,
    tol: Tolerance = DEFAULT_TOLERANCE,
    rel: Optional[float] = None,
) -> bool:
    """Whether each boundary arc of t around a vertex holds one witness vertex.

    The boundary of t is cut at the midpoints of its sides into three arcs,
    each containing one vertex of t. Witness vertices are assigned to arcs
    by where they sit on the boundary; arc ends count for both neighbours.
    """
    slack = _rel(tol, rel) * diameter(t)
    coords = t.coords
    lengths = [distance(coords[i], coords[(i + 1) % 3]) for i in range(3)]
    total = sum(lengths)
    starts = [0.0, lengths[0], lengths[0] + lengths[1]]

    def _position(p: Vec) -> float:
        best = min(
            range(3),
            key=lambda i: distance_to_segment(p, coords[i], coords[(i + 1) % 3]),
        )
        end = coords[(best + 1) % 3]
        s = min(1.0, max(0.0, segment_parameter(p, coords[best], end)))
        return starts[best] + s * lengths[best]

    def _in_arc(position: float, vertex: int) -> bool:
        # Arc around vertex i runs from the midpoint of the previous side to the
        # midpoint of the next one.
        before = lengths[(vertex - 1) % 3] / 2 + slack
        after = lengths[vertex] / 2 + slack
        offset = (position - starts[vertex]) % total
        return offset <= after or offset >= total - before

    positions = [_position(p) for p in witness.coords]
    return any(
        all(_in_arc(positions[w], v) for w, v in enumerate(assignment))
        for assignment in itertools.permutations(range(3))
    )


def boundary_gap(points: Sequence[Vec], t: Triangle) -> float:
    """Largest distance from a point to the boundary of t."""
    return max((_boundary_distance(p, t) for p in points), default=0.0)
