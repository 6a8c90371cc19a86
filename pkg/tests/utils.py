"""Triangles and helpers shared by the tests."""
import math
from typing import Dict, Sequence, Tuple

import numpy as np
from hypothesis import strategies as st

from isotri.candidates import Candidate, CandidateKind
from isotri.geometry import Triangle, triangle_from_sides
from isotri.problems import Problem
from isotri.verification.sampling import random_placement, triangle_from_angles

# Hand-derived optima of the 3-4-5 triangle.
OPTIMA_345: Dict[Problem, float] = {
    Problem.MAX_AREA_EMBEDDED: 4.8,
    Problem.MAX_PERIM_EMBEDDED: 11.25,
    Problem.MIN_AREA_CONTAINER: 7.5,
    Problem.MIN_PERIM_CONTAINER: 5 * (2 + 2 / math.sqrt(10)),
}


def triangle_345() -> Triangle:
    return triangle_from_sides(3, 4, 5)


def acute_triangle() -> Triangle:
    """Scalene, acute, with angles 50, 60 and 70 degrees."""
    return triangle_from_angles(*(math.radians(d) for d in (50, 60, 70)))


def obtuse_triangle() -> Triangle:
    """Scalene, obtuse, with angles 20, 45 and 115 degrees."""
    return triangle_from_angles(*(math.radians(d) for d in (20, 45, 115)))


def by_kind(candidates: Sequence[Candidate]) -> Dict[CandidateKind, Candidate]:
    """Index candidates by kind; kinds must be unique."""
    index = {c.kind: c for c in candidates}
    assert len(index) == len(candidates)
    return index


@st.composite
def scalene_angles(
    draw: st.DrawFn, margin: float = 0.02
) -> Tuple[float, float, float]:
    """Angles alpha < beta < gamma in radians, pairwise at least margin apart."""
    alpha = draw(st.floats(min_value=margin, max_value=math.pi / 3 - 2 * margin))
    top = (math.pi - alpha) / 2
    beta = draw(st.floats(min_value=alpha + margin, max_value=top - margin))
    return alpha, beta, math.pi - alpha - beta


@st.composite
def placed_triangles(draw: st.DrawFn) -> Triangle:
    """Scalene triangles in an arbitrary similarity placement."""
    angles = draw(scalene_angles())
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_placement(triangle_from_angles(*angles), np.random.default_rng(seed))
