"""Special embedded triangles and special isosceles containers.

A special triangle shares a full side with the input triangle ABC and the angle
at one endpoint of that side. With the labeling a = |BC| < b = |AC| < c = |AB|
there are nine of each, built from one defining point:

* first kind: a point at a given distance along a side or a ray,
* second kind: a perpendicular bisector meeting a side or a line,
* third kind: a vertex reflected through the foot of an altitude.

Every construction is done in the coordinates of the input triangle. The
closed forms below are evaluated from the shape alone and serve as an
independent cross-check of the coordinates.
"""
from __future__ import annotations

import logging
import math
from typing import Callable, Dict, List, Optional, Tuple

from isotri.candidates.typedefs import (
    Candidate,
    CandidateFamily,
    ContainerKind,
    EmbeddedKind,
    SpecialKind,
)
from isotri.exceptions import ClosedFormMismatch, DegenerateTriangle, NotScalene
from isotri.geometry import (
    DEFAULT_TOLERANCE,
    Tolerance,
    Triangle,
    TriangleShape,
    Vec,
    contains_triangle,
    foot_of_perpendicular,
    labeled_vertices,
    line_intersection,
    midpoint,
    normalize,
    perp,
    point_along,
    reflect_through,
    segment_parameter,
    sub,
)
from isotri.geometry import area as triangle_area
from isotri.geometry import perimeter as triangle_perimeter

logger = logging.getLogger(__name__)


# Relative disagreement between coordinates and closed forms that is treated
# as a bug rather than rounding.
_MISMATCH = 1e-10
# Absolute floor, in units of the coordinate magnitude, for gaps that rounding
# of the input coordinates alone can produce.
_RESOLUTION = 1e-13

Labeled = Tuple[Vec, Vec, Vec]
# A construction returns the defining point (None if it cannot be built), the
# segment it has to lie on (embedded kinds only) and the triangle's vertices.
Construction = Tuple[Optional[Vec], Optional[Tuple[Vec, Vec]], Optional[Labeled]]


def _bisector_meets(
    p: Vec, q: Vec, start: Vec, end: Vec, eps: float
) -> Optional[Vec]:
    """Where the perpendicular bisector of pq meets the line through start, end."""
    hit = line_intersection(
        midpoint(p, q), perp(sub(q, p)), start, sub(end, start), eps=eps
    )
    return None if hit is None else hit[0]


def _reflect_across_foot(p: Vec, q: Vec, start: Vec, end: Vec) -> Vec:
    """Reflect p through the foot of the perpendicular from q to line(start, end)."""
    return reflect_through(p, foot_of_perpendicular(q, start, end))


def _embedded_construction(
    kind: EmbeddedKind, v: Labeled, shape: TriangleShape, eps: float
) -> Construction:
    A, B, C = v
    a, b = shape.a, shape.b
    point: Optional[Vec]
    if kind is EmbeddedKind.A_PRIME_BC:
        point = point_along(C, A, a)
        return point, (C, A), (point, B, C)
    if kind is EmbeddedKind.AB_PRIME_C:
        point = point_along(A, B, b)
        return point, (A, B), (A, point, C)
    if kind is EmbeddedKind.A_DPRIME_BC:
        point = point_along(B, A, a)
        return point, (B, A), (point, B, C)
    if kind is EmbeddedKind.A1_BC:
        point = _bisector_meets(B, C, A, B, eps)
        return point, (A, B), None if point is None else (point, B, C)
    if kind is EmbeddedKind.AB1_C:
        point = _bisector_meets(A, C, A, B, eps)
        return point, (A, B), None if point is None else (A, point, C)
    if kind is EmbeddedKind.ABC1:
        point = _bisector_meets(A, B, A, C, eps)
        return point, (A, C), None if point is None else (A, B, point)
    if kind is EmbeddedKind.A_BAR_BC:
        point = _reflect_across_foot(B, C, A, B)
        return point, (A, B), (point, B, C)
    if kind is EmbeddedKind.A_BARBAR_BC:
        point = _reflect_across_foot(C, B, A, C)
        return point, (A, C), (point, B, C)
    point = _reflect_across_foot(C, A, B, C)
    return point, (B, C), (A, point, C)


def _container_construction(
    kind: ContainerKind, v: Labeled, shape: TriangleShape, eps: float
) -> Construction:
    A, B, C = v
    b, c = shape.b, shape.c
    point: Optional[Vec]
    if kind is ContainerKind.AB_PRIME_C:
        point = point_along(C, B, b)
        return point, None, (A, point, C)
    if kind is ContainerKind.ABC_PRIME:
        point = point_along(A, C, c)
        return point, None, (A, B, point)
    if kind is ContainerKind.ABC_DPRIME:
        point = point_along(B, C, c)
        return point, None, (A, B, point)
    if kind is ContainerKind.AB1_C:
        point = _reflect_across_foot(A, C, A, B)
        return point, None, (A, point, C)
    if kind is ContainerKind.ABC1:
        point = _reflect_across_foot(A, B, A, C)
        return point, None, (A, B, point)
    if kind is ContainerKind.ABC2:
        point = _reflect_across_foot(B, A, B, C)
        return point, None, (A, B, point)
    if kind is ContainerKind.A_BAR_BC:
        point = _bisector_meets(B, C, A, C, eps)
        return point, None, None if point is None else (point, B, C)
    if kind is ContainerKind.AB_BAR_C:
        point = _bisector_meets(A, C, B, C, eps)
        return point, None, None if point is None else (A, point, C)
    point = _bisector_meets(A, B, B, C, eps)
    return point, None, None if point is None else (A, B, point)


# Closed forms. Each kind maps to (leg, apex angle) of the isosceles triangle.
# Cosines come from the law of cosines rather than from the rounded angles.

ShapeFn = Callable[[TriangleShape], float]


def _half_angle_legs(side: float, cosine: float) -> float:
    return side / (2 * cosine) if cosine else math.inf


def _tangent(angle: float, cosine: float) -> float:
    return math.sin(angle) / cosine if cosine else math.inf


def _sin_double(angle: float, cosine: float) -> float:
    return 2 * math.sin(angle) * cosine


_EMBEDDED_AREA: Dict[EmbeddedKind, ShapeFn] = {
    EmbeddedKind.A_PRIME_BC: lambda s: s.a**2 * math.sin(s.gamma) / 2,
    EmbeddedKind.AB_PRIME_C: lambda s: s.b**2 * math.sin(s.alpha) / 2,
    EmbeddedKind.A_DPRIME_BC: lambda s: s.a**2 * math.sin(s.beta) / 2,
    EmbeddedKind.A1_BC: lambda s: s.a**2 * _tangent(s.beta, s.cos_beta) / 4,
    EmbeddedKind.AB1_C: lambda s: s.b**2 * _tangent(s.alpha, s.cos_alpha) / 4,
    EmbeddedKind.ABC1: lambda s: s.c**2 * _tangent(s.alpha, s.cos_alpha) / 4,
    EmbeddedKind.A_BAR_BC: lambda s: s.a**2 * _sin_double(s.beta, s.cos_beta) / 2,
    EmbeddedKind.A_BARBAR_BC: lambda s: s.a**2 * _sin_double(s.gamma, s.cos_gamma) / 2,
    EmbeddedKind.AB_BAR_C: lambda s: s.b**2 * _sin_double(s.gamma, s.cos_gamma) / 2,
}

_CONTAINER_AREA: Dict[ContainerKind, ShapeFn] = {
    ContainerKind.AB_PRIME_C: lambda s: s.b**2 * math.sin(s.gamma) / 2,
    ContainerKind.ABC_PRIME: lambda s: s.c**2 * math.sin(s.alpha) / 2,
    ContainerKind.ABC_DPRIME: lambda s: s.c**2 * math.sin(s.beta) / 2,
    ContainerKind.AB1_C: lambda s: s.b**2 * _sin_double(s.alpha, s.cos_alpha) / 2,
    ContainerKind.ABC1: lambda s: s.c**2 * _sin_double(s.alpha, s.cos_alpha) / 2,
    ContainerKind.ABC2: lambda s: s.c**2 * _sin_double(s.beta, s.cos_beta) / 2,
    ContainerKind.A_BAR_BC: lambda s: s.a**2 * _tangent(s.gamma, s.cos_gamma) / 4,
    ContainerKind.AB_BAR_C: lambda s: s.b**2 * _tangent(s.gamma, s.cos_gamma) / 4,
    ContainerKind.ABC_BAR: lambda s: s.c**2 * _tangent(s.beta, s.cos_beta) / 4,
}

_LEG_AND_APEX: Dict[SpecialKind, Callable[[TriangleShape], Tuple[float, float]]] = {
    EmbeddedKind.A_PRIME_BC: lambda s: (s.a, s.gamma),
    EmbeddedKind.AB_PRIME_C: lambda s: (s.b, s.alpha),
    EmbeddedKind.A_DPRIME_BC: lambda s: (s.a, s.beta),
    EmbeddedKind.A1_BC: lambda s: (
        _half_angle_legs(s.a, s.cos_beta),
        math.pi - 2 * s.beta,
    ),
    EmbeddedKind.AB1_C: lambda s: (
        _half_angle_legs(s.b, s.cos_alpha),
        math.pi - 2 * s.alpha,
    ),
    EmbeddedKind.ABC1: lambda s: (
        _half_angle_legs(s.c, s.cos_alpha),
        math.pi - 2 * s.alpha,
    ),
    EmbeddedKind.A_BAR_BC: lambda s: (s.a, math.pi - 2 * s.beta),
    EmbeddedKind.A_BARBAR_BC: lambda s: (s.a, math.pi - 2 * s.gamma),
    EmbeddedKind.AB_BAR_C: lambda s: (s.b, math.pi - 2 * s.gamma),
    ContainerKind.AB_PRIME_C: lambda s: (s.b, s.gamma),
    ContainerKind.ABC_PRIME: lambda s: (s.c, s.alpha),
    ContainerKind.ABC_DPRIME: lambda s: (s.c, s.beta),
    ContainerKind.AB1_C: lambda s: (s.b, math.pi - 2 * s.alpha),
    ContainerKind.ABC1: lambda s: (s.c, math.pi - 2 * s.alpha),
    ContainerKind.ABC2: lambda s: (s.c, math.pi - 2 * s.beta),
    ContainerKind.A_BAR_BC: lambda s: (
        _half_angle_legs(s.a, s.cos_gamma),
        math.pi - 2 * s.gamma,
    ),
    ContainerKind.AB_BAR_C: lambda s: (
        _half_angle_legs(s.b, s.cos_gamma),
        math.pi - 2 * s.gamma,
    ),
    ContainerKind.ABC_BAR: lambda s: (
        _half_angle_legs(s.c, s.cos_beta),
        math.pi - 2 * s.beta,
    ),
}


def _disagree(x: float, y: float, floor: float) -> bool:
    return abs(x - y) > _MISMATCH * max(abs(x), abs(y)) + floor


def _check_closed_forms(
    candidate: Candidate, shape: TriangleShape, scale: float
) -> None:
    assert candidate.area is not None and candidate.perimeter is not None
    kind = candidate.kind
    assert isinstance(kind, (EmbeddedKind, ContainerKind))
    expected_area = closed_form_area(kind, shape)
    expected_perimeter = closed_form_perimeter(kind, shape)
    floor = _RESOLUTION * scale
    if _disagree(candidate.area, expected_area, floor * shape.c) or _disagree(
        candidate.perimeter, expected_perimeter, floor
    ):
        raise ClosedFormMismatch(
            f"{kind.value}: coordinates give area {candidate.area!r}, perimeter "
            f"{candidate.perimeter!r}; closed forms give {expected_area!r}, "
            f"{expected_perimeter!r}."
        )


def _require_scalene(shape: TriangleShape) -> None:
    if shape.isosceles:
        raise NotScalene(
            f"Sides {shape.a}, {shape.b}, {shape.c} are not pairwise distinct; "
            "an isosceles triangle is its own optimum."
        )


def _build(
    kind: SpecialKind,
    construction: Construction,
    t: Triangle,
    shape: TriangleShape,
    tol: Tolerance,
) -> Candidate:
    point, segment, vertices = construction
    if point is None or vertices is None:
        return Candidate(kind=kind, exists=False, note="defining lines are parallel")
    if segment is not None:
        s = segment_parameter(point, *segment)
        if not -tol.eps_rel <= s <= 1 + tol.eps_rel:
            return Candidate(
                kind=kind,
                exists=False,
                note=f"defining point falls off its side (parameter {s:.6g})",
            )
    try:
        triangle = Triangle.from_points(*vertices)
    except DegenerateTriangle:
        return Candidate(kind=kind, exists=False, note="construction is degenerate")

    if isinstance(kind, EmbeddedKind):
        valid = contains_triangle(t, triangle, tol)
    else:
        valid = contains_triangle(triangle, t, tol)
    if not valid:
        logger.debug("%s exists but fails the containment test", kind.value)
    candidate = Candidate(
        kind=kind,
        triangle=triangle,
        area=triangle_area(triangle),
        perimeter=triangle_perimeter(triangle),
        exists=True,
        valid=valid,
        note="" if valid else "fails the containment test",
    )
    if valid:
        scale = max(shape.c, *(abs(x) for p in t.coords for x in p))
        _check_closed_forms(candidate, shape, scale)
    return candidate


# PUBLIC API


def closed_form_area(kind: SpecialKind, shape: TriangleShape) -> float:
    """Area of a special triangle evaluated from side lengths and angles."""
    if isinstance(kind, EmbeddedKind):
        return _EMBEDDED_AREA[kind](shape)
    return _CONTAINER_AREA[kind](shape)


def closed_form_perimeter(
    kind: SpecialKind, shape: TriangleShape
) -> float:
    """Perimeter of a special triangle from its legs and apex angle.

    Every special triangle has legs of length ``leg`` enclosing the apex angle,
    so the perimeter is 2 * leg * (1 + sin(apex / 2)).
    """
    leg, apex = _LEG_AND_APEX[kind](shape)
    return 2 * leg * (1 + math.sin(apex / 2))


def leg_and_apex(
    kind: SpecialKind, shape: TriangleShape
) -> Tuple[float, float]:
    """Leg length and apex angle of a special triangle."""
    return _LEG_AND_APEX[kind](shape)


def embedded_specials(
    shape: TriangleShape, t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE
) -> List[Candidate]:
    """Build the nine special embedded triangles of t.

    Args:
        shape: the labeling of t, as returned by ``normalize``.
        t: the input triangle.
        tol: tolerances for existence and containment.

    Returns:
        One candidate per EmbeddedKind, in declaration order.

    Raises:
        NotScalene: if two sides of t are equal at tolerance.
    """
    _require_scalene(shape)
    vertices = labeled_vertices(t, shape)
    return [
        _build(
            kind,
            _embedded_construction(kind, vertices, shape, tol.eps_degenerate),
            t,
            shape,
            tol,
        )
        for kind in EmbeddedKind
    ]


def container_specials(
    shape: TriangleShape, t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE
) -> List[Candidate]:
    """Build the nine special isosceles containers of t.

    Third kind containers of a non-acute triangle either cannot be built (right
    angle) or do not contain t; they come back with exists or valid set to False.

    Raises:
        NotScalene: if two sides of t are equal at tolerance.
    """
    _require_scalene(shape)
    vertices = labeled_vertices(t, shape)
    return [
        _build(
            kind,
            _container_construction(kind, vertices, shape, tol.eps_degenerate),
            t,
            shape,
            tol,
        )
        for kind in ContainerKind
    ]


class SpecialEmbedded(CandidateFamily):
    """The nine special embedded triangles."""

    def candidates(
        self, t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE
    ) -> List[Candidate]:
        """Normalize t and build its special embedded triangles."""
        return embedded_specials(normalize(t, tol), t, tol)


class SpecialContainers(CandidateFamily):
    """The nine special isosceles containers."""

    def candidates(
        self, t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE
    ) -> List[Candidate]:
        """Normalize t and build its special containers."""
        return container_specials(normalize(t, tol), t, tol)
