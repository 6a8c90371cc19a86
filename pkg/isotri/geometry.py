"""Planar primitives, triangle metrics and the a < b < c labeling.

Every optimal configuration studied by this package has vertices lying exactly
on edges of the other triangle, so membership tests are relaxed by a tolerance
proportional to the diameter of the outer triangle. Degeneracy is measured on
the signed area normalized by the squared diameter, which keeps every test
scale invariant.

Values are immutable pydantic models. Internally, arithmetic is done on plain
``(x, y)`` tuples.
"""
from __future__ import annotations

import math
from typing import Any, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from isotri.exceptions import DegenerateTriangle

Vec = Tuple[float, float]

_VERTEX_FIELDS = ("p0", "p1", "p2")
_ANGLE_SUM_SLACK = 1e-9
_SINE_LAW_SLACK = 1e-9


def _cosine_opposite(x: float, y: float, z: float) -> float:
    return (y * y + z * z - x * x) / (2 * y * z)


class Tolerance(BaseModel):
    """Numerical tolerances shared by every predicate."""

    model_config = ConfigDict(frozen=True)

    eps_rel: float = Field(
        default=1e-9,
        gt=0,
        description="Relative tolerance; distances are compared at eps_rel * diam.",
    )
    eps_degenerate: float = Field(
        default=1e-12,
        gt=0,
        description="A triangle is degenerate if |signed area| <= eps * diam^2.",
    )


DEFAULT_TOLERANCE = Tolerance()


class Point(BaseModel):
    """A point of the plane."""

    model_config = ConfigDict(frozen=True)

    x: float
    y: float

    @field_validator("x", "y")
    @classmethod
    def _must_be_finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("coordinates must be finite")
        return v

    @property
    def xy(self) -> Vec:
        """The coordinates as a tuple."""
        return (self.x, self.y)


PointLike = Union[Point, Vec, Sequence[float], Mapping[str, float]]


def as_point(value: PointLike) -> Point:
    """Coerce a point, a mapping with x/y or a pair of numbers to a Point."""
    if isinstance(value, Point):
        return value
    if isinstance(value, Mapping):
        return Point(x=value["x"], y=value["y"])
    x, y = value
    return Point(x=float(x), y=float(y))


# Vector helpers on tuples.


def sub(p: Vec, q: Vec) -> Vec:
    return (p[0] - q[0], p[1] - q[1])


def add(p: Vec, q: Vec) -> Vec:
    return (p[0] + q[0], p[1] + q[1])


def scale(p: Vec, s: float) -> Vec:
    return (p[0] * s, p[1] * s)


def dot(p: Vec, q: Vec) -> float:
    return p[0] * q[0] + p[1] * q[1]


def cross(p: Vec, q: Vec) -> float:
    return p[0] * q[1] - p[1] * q[0]


def norm(p: Vec) -> float:
    return math.hypot(p[0], p[1])


def distance(p: Vec, q: Vec) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def unit(p: Vec) -> Vec:
    length = norm(p)
    return (p[0] / length, p[1] / length)


def perp(p: Vec) -> Vec:
    """Rotate by +90 degrees."""
    return (-p[1], p[0])


def midpoint(p: Vec, q: Vec) -> Vec:
    return ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)


def point_along(origin: Vec, toward: Vec, length: float) -> Vec:
    """The point on the ray from origin through toward at the given distance."""
    return add(origin, scale(unit(sub(toward, origin)), length))


def foot_of_perpendicular(p: Vec, a: Vec, b: Vec) -> Vec:
    """Orthogonal projection of p onto the line ab."""
    d = sub(b, a)
    t = dot(sub(p, a), d) / dot(d, d)
    return add(a, scale(d, t))


def reflect_through(p: Vec, center: Vec) -> Vec:
    """Point reflection of p through center."""
    return (2 * center[0] - p[0], 2 * center[1] - p[1])


def line_intersection(
    p: Vec, d: Vec, q: Vec, e: Vec, *, eps: float = 1e-12
) -> Optional[Tuple[Vec, float, float]]:
    """Intersect the lines p + s*d and q + t*e.

    Returns:
        The intersection point and the parameters (s, t), or None if the lines
        are parallel (|sin| of the angle between them below eps).
    """
    denominator = cross(d, e)
    if abs(denominator) <= eps * norm(d) * norm(e):
        return None
    w = sub(q, p)
    s = cross(w, e) / denominator
    t = cross(w, d) / denominator
    return add(p, scale(d, s)), s, t


def segment_parameter(p: Vec, a: Vec, b: Vec) -> float:
    """Parameter of the projection of p on the segment ab (0 at a, 1 at b)."""
    d = sub(b, a)
    return dot(sub(p, a), d) / dot(d, d)


def distance_to_segment(p: Vec, a: Vec, b: Vec) -> float:
    t = min(1.0, max(0.0, segment_parameter(p, a, b)))
    return distance(p, add(a, scale(sub(b, a), t)))


def angle_between(u: Vec, v: Vec) -> float:
    """Unsigned angle between two vectors in [0, pi]."""
    return math.atan2(abs(cross(u, v)), dot(u, v))


def _signed_area(p0: Vec, p1: Vec, p2: Vec) -> float:
    return cross(sub(p1, p0), sub(p2, p0)) / 2


def _diameter(points: Sequence[Vec]) -> float:
    return max(
        distance(points[0], points[1]),
        distance(points[1], points[2]),
        distance(points[2], points[0]),
    )


class Triangle(BaseModel):
    """A nondegenerate triangle stored counter-clockwise.

    The constructor accepts Points, (x, y) pairs or mappings for the vertices.
    If the input is clockwise, p1 and p2 are swapped.
    """

    model_config = ConfigDict(frozen=True)

    p0: Point
    p1: Point
    p2: Point

    @model_validator(mode="before")
    @classmethod
    def _canonicalize(cls, data: Any) -> Any:
        """Coerce the vertices, reject degenerate input and orient counter-clockwise."""
        if not isinstance(data, Mapping):
            return data
        points = [as_point(data[key]) for key in _VERTEX_FIELDS]
        coords = [point.xy for point in points]
        signed = _signed_area(*coords)
        diam = _diameter(coords)
        if abs(signed) <= DEFAULT_TOLERANCE.eps_degenerate * diam * diam:
            raise DegenerateTriangle(
                f"Points {coords} are collinear within tolerance "
                f"(signed area {signed:.3e}, diameter {diam:.3e})."
            )
        if signed < 0:
            points[1], points[2] = points[2], points[1]
        return dict(zip(_VERTEX_FIELDS, points))

    @classmethod
    def from_points(cls, p0: PointLike, p1: PointLike, p2: PointLike) -> Triangle:
        """Build a triangle from three point-like values."""
        return cls(p0=p0, p1=p1, p2=p2)  # type: ignore[arg-type]

    @property
    def vertices(self) -> Tuple[Point, Point, Point]:
        return (self.p0, self.p1, self.p2)

    @property
    def coords(self) -> Tuple[Vec, Vec, Vec]:
        return (self.p0.xy, self.p1.xy, self.p2.xy)

    def edges(self) -> List[Tuple[Vec, Vec]]:
        """The directed edges (p0p1, p1p2, p2p0)."""
        c = self.coords
        return [(c[0], c[1]), (c[1], c[2]), (c[2], c[0])]


class TriangleShape(BaseModel):
    """Side lengths and angles labeled so that a <= b <= c.

    ``vertex_map[k]`` is the index (into the triangle's stored vertices) of the
    vertex that became A, B, C for k = 0, 1, 2. Side a = |BC| is opposite A.
    """

    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float
    vertex_map: Tuple[int, int, int]
    isosceles: bool = False

    @model_validator(mode="after")
    def _check_labeling(self) -> TriangleShape:
        if not (self.a <= self.b <= self.c):
            raise ValueError("sides must satisfy a <= b <= c")
        if not self.a + self.b > self.c:
            raise ValueError("sides violate the triangle inequality")
        if sorted(self.vertex_map) != [0, 1, 2]:
            raise ValueError("vertex_map must be a permutation of (0, 1, 2)")
        if min(self.alpha, self.beta, self.gamma) <= 0:
            raise ValueError("angles must be positive")
        if abs(self.alpha + self.beta + self.gamma - math.pi) > _ANGLE_SUM_SLACK:
            raise ValueError("angles must sum to pi")
        # sin(gamma) as sin(alpha + beta) keeps relative accuracy near gamma = pi
        ratios = (
            self.a / math.sin(self.alpha),
            self.b / math.sin(self.beta),
            self.c / math.sin(self.alpha + self.beta),
        )
        if max(ratios) - min(ratios) > _SINE_LAW_SLACK * max(ratios):
            raise ValueError("sides and angles disagree with the law of sines")
        return self

    @property
    def cos_alpha(self) -> float:
        return _cosine_opposite(self.a, self.b, self.c)

    @property
    def cos_beta(self) -> float:
        return _cosine_opposite(self.b, self.a, self.c)

    @property
    def cos_gamma(self) -> float:
        return _cosine_opposite(self.c, self.a, self.b)

    def is_acute(self, guard: float = 0.0) -> bool:
        """True when gamma falls short of a right angle by more than ``guard``."""
        return self.gamma < math.pi / 2 - guard

    def is_obtuse(self, guard: float = 0.0) -> bool:
        return self.gamma > math.pi / 2 + guard


# PUBLIC API


def signed_area(t: Triangle) -> float:
    """Signed area; positive for the stored (counter-clockwise) order."""
    return _signed_area(*t.coords)


def area(t: Triangle) -> float:
    """Shoelace area."""
    return abs(signed_area(t))


def side_lengths(t: Triangle) -> Tuple[float, float, float]:
    """Lengths of the sides opposite p0, p1 and p2."""
    p0, p1, p2 = t.coords
    return (distance(p1, p2), distance(p2, p0), distance(p0, p1))


def perimeter(t: Triangle) -> float:
    return sum(side_lengths(t))


def diameter(t: Triangle) -> float:
    return max(side_lengths(t))


def angle_at(t: Triangle, index: int) -> float:
    """Interior angle at the vertex with the given index."""
    c = t.coords
    here = c[index]
    return angle_between(sub(c[(index + 1) % 3], here), sub(c[(index + 2) % 3], here))


def heron_area(a: float, b: float, c: float) -> float:
    """Area from side lengths, in the cancellation-free ordering of Heron's formula."""
    x, y, z = sorted((a, b, c), reverse=True)
    product = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))
    return 0.25 * math.sqrt(max(product, 0.0))


def angles_from_sides(a: float, b: float, c: float) -> Tuple[float, float, float]:
    """Angles opposite a, b, c.

    Each angle is ``atan2(4K, y^2 + z^2 - x^2)`` with K the stable Heron area,
    which stays accurate for needle triangles where ``acos`` does not.
    """
    four_k = 4 * heron_area(a, b, c)

    def _opposite(x: float, y: float, z: float) -> float:
        return math.atan2(four_k, y * y + z * z - x * x)

    return _opposite(a, b, c), _opposite(b, c, a), _opposite(c, a, b)


def normalize(t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE) -> TriangleShape:
    """Label the triangle so that a <= b <= c and compute its angles.

    Ties within ``tol.eps_rel * diam`` are flagged through ``isosceles``.

    Raises:
        DegenerateTriangle: if the sides violate the strict triangle inequality.
    """
    sides = side_lengths(t)
    order = sorted(range(3), key=lambda i: sides[i])
    a, b, c = (sides[i] for i in order)
    if not a + b > c * (1 + tol.eps_degenerate):
        raise DegenerateTriangle(f"Sides {a}, {b}, {c} describe a degenerate triangle.")
    alpha, beta, gamma = angles_from_sides(a, b, c)
    isosceles = (b - a) <= tol.eps_rel * c or (c - b) <= tol.eps_rel * c
    return TriangleShape(
        a=a,
        b=b,
        c=c,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        vertex_map=(order[0], order[1], order[2]),
        isosceles=isosceles,
    )


def labeled_vertices(t: Triangle, shape: TriangleShape) -> Tuple[Vec, Vec, Vec]:
    """The coordinates of A, B, C under the labeling of ``shape``."""
    c = t.coords
    i, j, k = shape.vertex_map
    return c[i], c[j], c[k]


def contains(outer: Triangle, p: PointLike, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Whether p is inside outer or within eps_rel * diam(outer) of its boundary."""
    xy: Vec = (p[0], p[1]) if isinstance(p, tuple) else as_point(p).xy
    slack = tol.eps_rel * diameter(outer)
    for start, end in outer.edges():
        edge = sub(end, start)
        if cross(edge, sub(xy, start)) / norm(edge) < -slack:
            return False
    return True


def contains_triangle(
    outer: Triangle, inner: Triangle, tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Whether every vertex of inner passes ``contains`` for outer."""
    return all(contains(outer, p, tol) for p in inner.coords)


def is_isosceles(
    t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE
) -> Tuple[bool, List[Tuple[int, int]]]:
    """Compare side lengths pairwise at eps_rel * diam.

    Sides are identified by the index of the opposite vertex.

    Returns:
        Whether any two sides are equal, and every equal pair (i, j) with i < j.
    """
    sides = side_lengths(t)
    slack = tol.eps_rel * max(sides)
    pairs = [
        (i, j)
        for i in range(3)
        for j in range(i + 1, 3)
        if abs(sides[i] - sides[j]) <= slack
    ]
    return bool(pairs), pairs


def similarity(
    t: Triangle,
    *,
    rotation: float = 0.0,
    factor: float = 1.0,
    offset: Vec = (0.0, 0.0),
    mirror: bool = False,
) -> Triangle:
    """Apply x -> offset + factor * R(rotation) * M x, M mirroring the y axis."""
    cos_r, sin_r = math.cos(rotation), math.sin(rotation)

    def _map(p: Vec) -> Vec:
        x, y = p[0], -p[1] if mirror else p[1]
        return (
            offset[0] + factor * (cos_r * x - sin_r * y),
            offset[1] + factor * (sin_r * x + cos_r * y),
        )

    return Triangle.from_points(*(_map(p) for p in t.coords))


def triangle_from_sides(a: float, b: float, c: float) -> Triangle:
    """Place a triangle with the given side lengths canonically.

    The longest side runs along the x axis from the origin and the third
    vertex lies in the upper half-plane.

    Raises:
        DegenerateTriangle: if the sides violate the strict triangle inequality.
    """
    x, y, z = sorted((a, b, c))
    if not (x > 0 and x + y > z):
        raise DegenerateTriangle(f"Sides {a}, {b}, {c} do not form a triangle.")
    # Third vertex at distance y from the origin and x from (z, 0).
    u = (z * z + y * y - x * x) / (2 * z)
    v = math.sqrt(max(0.0, y * y - u * u))
    return Triangle.from_points((0.0, 0.0), (z, 0.0), (u, v))
