"""Minimum perimeter containers that share no side and angle with the input.

Two families are generated:

* Apex: one vertex P of the input is a base vertex of the container, the other
  two input vertices lie on the line carrying the apex R and the second base
  vertex S. At distance m between P and that line the perimeter is
  m * (2 / sin(g) + 1 / cos(g / 2)) for apex angle g, minimized at ``gamma_star``.
* Ex2: in a frame with P at the origin, one input vertex on the positive x
  axis at x_b and the third at (1, v), the container PRS with S = (x, 0) and
  the third vertex on RS has perimeter f_v(x) = x * (1 + sqrt(1 + v^2 / (1 - x)^2)).
"""
from __future__ import annotations

import itertools
import logging
import math
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import optimize

from isotri.candidates.typedefs import Candidate, CandidateFamily, NonSpecialKind
from isotri.exceptions import ClosedFormMismatch, DegenerateTriangle, NoInteriorMinimum
from isotri.geometry import (
    DEFAULT_TOLERANCE,
    Point,
    Tolerance,
    Triangle,
    Vec,
    add,
    contains_triangle,
    cross,
    distance,
    dot,
    foot_of_perpendicular,
    norm,
    normalize,
    scale,
    sub,
    unit,
)
from isotri.geometry import area as triangle_area

logger = logging.getLogger(__name__)

# The closed form for the minimizer of f_v is certified on this window of v.
CLOSED_FORM_WINDOW = (0.56, math.sqrt(3.0))
CLOSED_FORM_AGREEMENT = 1e-8

_MAX_BRACKET_EXPANSIONS = 60
_SCAN_POINTS = 256


# PUBLIC API


def gamma_star() -> float:
    """The apex angle minimizing 2 / sin(g) + 1 / cos(g / 2) on (0, pi)."""
    root = (1 + math.sqrt(5) - math.sqrt(2 * (1 + math.sqrt(5)))) / 2
    return 4 * math.atan(root)


def apex_perimeter(m: float, gamma: float) -> float:
    """Perimeter of the apex family at distance m and apex angle gamma."""
    return m * (2 / math.sin(gamma) + 1 / math.cos(gamma / 2))


class ApexFamily(BaseModel):
    """Isosceles triangles PRS with base vertex P and R, S on a fixed line.

    The line passes through ``foot`` (the foot of the perpendicular from P)
    with unit direction ``direction``.
    """

    model_config = ConfigDict(frozen=True)

    vertex: Point
    foot: Point
    direction: Tuple[float, float]
    m: float = Field(gt=0)
    gamma: float = Field(gt=0, lt=math.pi)

    def points(self, orientation: int) -> Tuple[Vec, Vec, Vec]:
        """The vertices P, R, S; orientation (+1 or -1) picks the side of R."""
        e = self.direction
        sign = 1 if orientation >= 0 else -1
        apex = add(self.foot.xy, scale(e, -sign * self.m / math.tan(self.gamma)))
        base = add(apex, scale(e, sign * self.m / math.sin(self.gamma)))
        return self.vertex.xy, apex, base

    def triangle(self, orientation: int) -> Triangle:
        return Triangle.from_points(*self.points(orientation))

    @property
    def perimeter(self) -> float:
        return apex_perimeter(self.m, self.gamma)


def apex_candidates(t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE) -> List[Candidate]:
    """Six apex family candidates at apex angle ``gamma_star``.

    For every vertex P of t the base line runs through the other two vertices;
    both sides of the apex along that line are tried. Candidates that do not
    contain t are returned with valid=False.
    """
    g = gamma_star()
    coords = t.coords
    candidates: List[Candidate] = []
    for index in range(3):
        p = coords[index]
        q1, q2 = coords[(index + 1) % 3], coords[(index + 2) % 3]
        foot = foot_of_perpendicular(p, q1, q2)
        family = ApexFamily(
            vertex=Point(x=p[0], y=p[1]),
            foot=Point(x=foot[0], y=foot[1]),
            direction=unit(sub(q2, q1)),
            m=distance(p, foot),
            gamma=g,
        )
        for orientation in (1, -1):
            triangle = family.triangle(orientation)
            valid = contains_triangle(triangle, t, tol)
            candidates.append(
                Candidate(
                    kind=NonSpecialKind.APEX,
                    triangle=triangle,
                    area=triangle_area(triangle),
                    perimeter=family.perimeter,
                    exists=True,
                    valid=valid,
                    note=f"P=p{index}, orientation {orientation:+d}",
                    params={
                        "vertex": float(index),
                        "orientation": float(orientation),
                        "m": family.m,
                        "gamma": g,
                    },
                )
            )
    return candidates


def f_v(v: float, x: float) -> float:
    """Perimeter x * (1 + sqrt(1 + v^2 / (1 - x)^2)) of the normalized family."""
    if x == 1:
        raise ValueError("f_v is undefined at x = 1")
    return x * (1 + math.sqrt(1 + v * v / (1 - x) ** 2))


def f_v_derivative(v: float, x: float) -> float:
    """d f_v / dx for x > 1."""
    q = math.sqrt(1 + v * v / (x - 1) ** 2)
    return 1 + q - x * v * v / (q * (x - 1) ** 3)


def stationarity_residual(v: float, x: float) -> float:
    """(x - 1)^3 (x + 1) - v^2, which vanishes exactly at the minimizer of f_v."""
    return (x - 1) ** 3 * (x + 1) - v * v


def delta_v(v: float) -> float:
    """sqrt(48 v^6 + 81 v^4) - 9 v^2, rationalized to avoid cancellation."""
    if v <= 0:
        raise ValueError("v must be positive")
    v2 = v * v
    return 48 * v2**3 / (math.sqrt(48 * v2**3 + 81 * v2 * v2) + 9 * v2)


def x_star_closed_form(v: float) -> float:
    """Radical expression for the minimizer of f_v.

    The root in (1, inf) of (x - 1)^3 (x + 1) = v^2 is
    (1 - sqrt(P) + sqrt(3 - P + 2 / sqrt(P))) / 2 with
    P = 1 + cbrt(2 delta / 9) - cbrt(32 v^6 / (3 delta)).
    """
    delta = delta_v(v)
    p = 1 + np.cbrt(2 * delta / 9) - np.cbrt(32 * v**6 / (3 * delta))
    root_p = math.sqrt(p)
    return float((1 - root_p + math.sqrt(3 - p + 2 / root_p)) / 2)


class XStar(BaseModel):
    """Minimizer of f_v and how it was obtained."""

    model_config = ConfigDict(frozen=True)

    v: float
    value: float
    golden: float
    """The golden-section estimate before polishing."""
    closed_form: Optional[float] = None
    branch: str
    """'numeric' or 'numeric+closed-form'."""


def _scan_bracket(v: float) -> Tuple[float, float, float]:
    """Find x_lo < x_mid < x_hi with f_v(x_mid) below both ends."""
    lowest = min(1e-6, 0.1 * (v * v / 2) ** (1 / 3))
    span = 4.0
    for _ in range(_MAX_BRACKET_EXPANSIONS):
        xs = 1 + np.geomspace(lowest, span, _SCAN_POINTS)
        values = xs * (1 + np.sqrt(1 + v * v / (xs - 1) ** 2))
        k = int(np.argmin(values))
        if 0 < k < len(xs) - 1:
            return float(xs[k - 1]), float(xs[k]), float(xs[k + 1])
        if k == 0:
            lowest /= 1e3
        else:
            span *= 4
    raise NoInteriorMinimum(f"f_v is monotone on every scanned bracket for v={v}")


def solve_x_star(v: float) -> XStar:
    """Minimize f_v on (1, inf).

    A geometric scan brackets the minimum, golden-section search narrows it and
    the root of ``stationarity_residual`` inside the bracket polishes it. For v
    in [0.56, sqrt(3)) the radical closed form is evaluated as well and has to
    agree to 1e-8.

    Raises:
        NoInteriorMinimum: if no interior bracket is found.
        ClosedFormMismatch: if the closed form disagrees with the numeric value.
    """
    if not v > 0:
        raise ValueError("v must be positive")
    lo, mid, hi = _scan_bracket(v)
    golden = optimize.minimize_scalar(
        lambda x: f_v(v, x),
        bracket=(lo, mid, hi),
        method="golden",
        options={"xtol": 1e-12},
    )
    value = float(golden.x)
    if stationarity_residual(v, lo) < 0 < stationarity_residual(v, hi):
        value = float(
            optimize.brentq(
                lambda x: stationarity_residual(v, x), lo, hi, xtol=1e-15
            )
        )

    low, high = CLOSED_FORM_WINDOW
    if not low <= v < high:
        logger.debug("x_star(%s) = %s via the numeric branch", v, value)
        return XStar(v=v, value=value, golden=float(golden.x), branch="numeric")
    closed = x_star_closed_form(v)
    if abs(closed - value) > CLOSED_FORM_AGREEMENT:
        raise ClosedFormMismatch(
            f"x_star({v}): numeric {value!r} and closed form {closed!r} differ."
        )
    return XStar(
        v=v,
        value=value,
        golden=float(golden.x),
        closed_form=closed,
        branch="numeric+closed-form",
    )


def x_star(v: float) -> float:
    """The minimizer of f_v on (1, inf)."""
    return solve_x_star(v).value


class NormalizedFrame(BaseModel):
    """Similarity placing P at the origin, the base vertex on +x and the
    third vertex at abscissa 1 (in the upper half-plane)."""

    model_config = ConfigDict(frozen=True)

    origin: Point
    rotation: float
    mirrored: bool
    factor: float = Field(gt=0)

    def to_frame(self, p: Vec) -> Vec:
        x, y = sub(p, self.origin.xy)
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        fx, fy = c * x + s * y, -s * x + c * y
        if self.mirrored:
            fy = -fy
        return (fx * self.factor, fy * self.factor)

    def from_frame(self, p: Vec) -> Vec:
        fx, fy = p[0] / self.factor, p[1] / self.factor
        if self.mirrored:
            fy = -fy
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return add(self.origin.xy, (c * fx - s * fy, s * fx + c * fy))


class Ex2Family(BaseModel):
    """The f_v container family of one vertex assignment."""

    model_config = ConfigDict(frozen=True)

    v: float = Field(gt=0)
    x_b: float
    frame: NormalizedFrame

    @classmethod
    def from_assignment(
        cls, shared: Vec, base: Vec, third: Vec
    ) -> Optional[Ex2Family]:
        """Normalize an assignment; None if the third vertex has abscissa <= 0."""
        d = sub(base, shared)
        rotation = math.atan2(d[1], d[0])
        local = sub(third, shared)
        along = dot(local, d) / norm(d)
        height = cross(d, local) / norm(d)
        if along <= 0:
            return None
        frame = NormalizedFrame(
            origin=Point(x=shared[0], y=shared[1]),
            rotation=rotation,
            mirrored=height < 0,
            factor=1 / along,
        )
        return cls(v=abs(height) / along, x_b=norm(d) / along, frame=frame)

    def frame_points(self, x: float) -> Tuple[Vec, Vec, Vec]:
        """P, R, S in frame coordinates for S = (x, 0), x > 1."""
        s = (x, 0.0)
        u = unit(sub((1.0, self.v), s))
        t = -dot(s, s) / (2 * dot(s, u))
        return (0.0, 0.0), add(s, scale(u, t)), s

    def triangle(self, x: float) -> Triangle:
        return Triangle.from_points(
            *(self.frame.from_frame(p) for p in self.frame_points(x))
        )

    def perimeter(self, x: float) -> float:
        return f_v(self.v, x) / self.frame.factor


def ex2_candidates(t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE) -> List[Candidate]:
    """Ex2 candidates for the six (shared, base, third) vertex assignments.

    The family is minimized over x >= x_b so that every candidate contains its
    base vertex; at x = x_b the candidate is a special container.
    """
    coords = t.coords
    candidates: List[Candidate] = []
    for i, j, k in itertools.permutations(range(3)):
        note = f"P=p{i}, base p{j}, third p{k}"
        family = Ex2Family.from_assignment(coords[i], coords[j], coords[k])
        if family is None:
            logger.debug("skipping Ex2 assignment %s: third vertex behind P", note)
            continue
        try:
            minimizer = solve_x_star(family.v)
        except NoInteriorMinimum as error:
            candidates.append(
                Candidate(kind=NonSpecialKind.EX2, exists=False, note=str(error))
            )
            continue
        x_eff = max(minimizer.value, family.x_b)
        params: Dict[str, float] = {
            "v": family.v,
            "x_b": family.x_b,
            "x_star": minimizer.value,
            "x_eff": x_eff,
            "scale": 1 / family.frame.factor,
        }
        try:
            triangle = family.triangle(x_eff)
        except DegenerateTriangle:
            candidates.append(
                Candidate(
                    kind=NonSpecialKind.EX2,
                    exists=False,
                    note=f"{note}: degenerate",
                    params=params,
                )
            )
            continue
        clamped = x_eff > minimizer.value
        candidates.append(
            Candidate(
                kind=NonSpecialKind.EX2,
                triangle=triangle,
                area=triangle_area(triangle),
                perimeter=family.perimeter(x_eff),
                exists=True,
                valid=contains_triangle(triangle, t, tol),
                note=f"{note}{', clamped to x_b' if clamped else ''}",
                params=params,
            )
        )
    return candidates


class ApexWindow(BaseModel):
    """Apex angles between the special containers ABCbar and AB'C.

    An apex family candidate at ``gamma_star`` can only beat both when
    gamma_star lies strictly between ``low`` and ``high``.
    """

    model_config = ConfigDict(frozen=True)

    low: float
    high: float
    contains_gamma_star: bool

    @property
    def low_degrees(self) -> float:
        return math.degrees(self.low)

    @property
    def high_degrees(self) -> float:
        return math.degrees(self.high)


def apex_window(t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE) -> ApexWindow:
    """The window (pi - 2 beta, gamma) around the apex angle gamma_star."""
    shape = normalize(t, tol)
    low, high = math.pi - 2 * shape.beta, shape.gamma
    g = gamma_star()
    return ApexWindow(low=low, high=high, contains_gamma_star=low < g < high)


class ApexCandidates(CandidateFamily):
    """Candidates of the apex family."""

    def candidates(
        self, t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE
    ) -> List[Candidate]:
        return apex_candidates(t, tol)


class Ex2Candidates(CandidateFamily):
    """Candidates of the f_v family."""

    def candidates(
        self, t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE
    ) -> List[Candidate]:
        return ex2_candidates(t, tol)
