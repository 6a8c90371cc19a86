"""Optimal isosceles containers and embedded triangles by candidate enumeration.

Every problem is solved by building all candidates that can be optimal, keeping
the valid ones and ranking them by the problem's metric:

* max area / max perimeter embedded: the nine special embedded triangles,
* min area container: the nine special containers,
* min perimeter container: the special containers plus the apex and Ex2
  families.

An isosceles input is returned as its own optimum.
"""
from __future__ import annotations

import logging
from typing import Dict, FrozenSet, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from isotri.candidates import (
    ApexCandidates,
    Candidate,
    CandidateFamily,
    ContainerKind,
    EmbeddedKind,
    Ex2Candidates,
    NonSpecialKind,
    SpecialContainers,
    SpecialEmbedded,
)
from isotri.candidates.typedefs import CandidateKind
from isotri.geometry import (
    DEFAULT_TOLERANCE,
    Tolerance,
    Triangle,
    area,
    contains_triangle,
    normalize,
    perimeter,
)
from isotri.incidence import (
    midpoint_arc_condition,
    shares_side_and_angle,
    shares_vertex,
    side_in_side,
    vertices_on_boundary,
)
from isotri.oracle.typedefs import OracleResult
from isotri.problems import Problem

logger = logging.getLogger(__name__)

FAMILIES: Dict[Problem, Sequence[CandidateFamily]] = {
    Problem.MAX_AREA_EMBEDDED: (SpecialEmbedded(),),
    Problem.MAX_PERIM_EMBEDDED: (SpecialEmbedded(),),
    Problem.MIN_AREA_CONTAINER: (SpecialContainers(),),
    Problem.MIN_PERIM_CONTAINER: (
        SpecialContainers(),
        ApexCandidates(),
        Ex2Candidates(),
    ),
}

# Winner kinds that can occur for a scalene input.
WINNER_KINDS: Dict[Problem, FrozenSet[CandidateKind]] = {
    Problem.MAX_AREA_EMBEDDED: frozenset(
        {EmbeddedKind.A_PRIME_BC, EmbeddedKind.AB_PRIME_C, EmbeddedKind.ABC1}
    ),
    # A'BC beats ABC1 on some near-equilateral acute inputs.
    Problem.MAX_PERIM_EMBEDDED: frozenset(
        {
            EmbeddedKind.A_PRIME_BC,
            EmbeddedKind.AB_PRIME_C,
            EmbeddedKind.A1_BC,
            EmbeddedKind.ABC1,
        }
    ),
    Problem.MIN_AREA_CONTAINER: frozenset(
        {ContainerKind.AB_PRIME_C, ContainerKind.ABC_PRIME, ContainerKind.AB1_C}
    ),
    Problem.MIN_PERIM_CONTAINER: frozenset(
        {
            ContainerKind.AB_PRIME_C,
            ContainerKind.ABC_PRIME,
            ContainerKind.ABC_BAR,
            NonSpecialKind.APEX,
            NonSpecialKind.EX2,
        }
    ),
}


class SolveResult(BaseModel):
    """Optimum of one problem for one triangle.

    ``table`` lists every candidate: valid ones ranked best first, then the
    invalid and non-existent ones in generation order.
    """

    model_config = ConfigDict(frozen=True)

    problem: Problem
    input: Triangle
    optimum: float
    winners: List[Candidate]
    table: List[Candidate]
    shares_side_and_angle: bool
    oracle_check: Optional[OracleResult] = None

    @property
    def winner(self) -> Candidate:
        return self.winners[0]


class WitnessReport(BaseModel):
    """Structural conditions satisfied by an optimal triangle."""

    model_config = ConfigDict(frozen=True)

    contained: bool
    """The smaller triangle lies inside the larger one."""
    side_in_side: bool
    """A side of the smaller triangle lies in a side of the larger one."""
    on_boundary: bool
    """Vertices of the smaller triangle lie on the boundary of the larger one."""
    shares_vertex: bool
    midpoint_arcs: Optional[bool] = None
    """Only evaluated for the max area embedded problem."""

    @property
    def ok(self) -> bool:
        return (
            self.contained
            and self.side_in_side
            and self.on_boundary
            and self.shares_vertex
            and self.midpoint_arcs is not False
        )


def _specials_first(kind: CandidateKind) -> int:
    return 1 if isinstance(kind, NonSpecialKind) else 0


def _rank(candidates: List[Candidate], problem: Problem) -> List[Candidate]:
    valid = [c for c in candidates if c.valid]
    rest = [c for c in candidates if not c.valid]
    sign = -1.0 if problem.maximize else 1.0
    ranked = sorted(
        valid,
        key=lambda c: (
            sign * (c.metric(problem.metric) or 0.0),
            _specials_first(c.kind),
        ),
    )
    return ranked + rest


def _winners(
    ranked: List[Candidate], problem: Problem, tol: Tolerance
) -> List[Candidate]:
    best = ranked[0].metric(problem.metric)
    assert best is not None
    ties = [
        c
        for c in ranked
        if c.valid
        and abs((c.metric(problem.metric) or 0.0) - best) <= tol.eps_rel * abs(best)
    ]
    return sorted(ties, key=lambda c: _specials_first(c.kind))


# PUBLIC API


def candidates_for(
    t: Triangle, problem: Problem, tol: Tolerance = DEFAULT_TOLERANCE
) -> List[Candidate]:
    """All candidates the solver considers for the problem, in generation order."""
    return [c for family in FAMILIES[problem] for c in family.candidates(t, tol)]


def solve(
    t: Triangle, problem: Problem, tol: Tolerance = DEFAULT_TOLERANCE
) -> SolveResult:
    """Solve one of the four problems for t.

    Args:
        t: the input triangle.
        problem: which optimum to compute.
        tol: tolerances for existence, containment and ties.

    Returns:
        The optimum, the winners (every valid candidate within eps_rel of the
        optimum, special kinds first) and the full candidate table.
    """
    shape = normalize(t, tol)
    if shape.isosceles:
        itself = Candidate(
            kind=NonSpecialKind.INPUT,
            triangle=t,
            area=area(t),
            perimeter=perimeter(t),
            exists=True,
            valid=True,
            note="the input is isosceles",
        )
        optimum = itself.metric(problem.metric)
        assert optimum is not None
        return SolveResult(
            problem=problem,
            input=t,
            optimum=optimum,
            winners=[itself],
            table=[itself],
            shares_side_and_angle=True,
        )

    ranked = _rank(candidates_for(t, problem, tol), problem)
    if not ranked or not ranked[0].valid:
        raise AssertionError(f"No valid candidate for {problem.value}; this is a bug.")
    winners = _winners(ranked, problem, tol)
    winner = winners[0]
    assert winner.triangle is not None
    optimum = winner.metric(problem.metric)
    assert optimum is not None
    logger.debug(
        "%s: %s wins with %.12g (%d tied)",
        problem.value,
        winner.kind.value,
        optimum,
        len(winners),
    )
    return SolveResult(
        problem=problem,
        input=t,
        optimum=optimum,
        winners=winners,
        table=ranked,
        shares_side_and_angle=shares_side_and_angle(winner.triangle, t, tol),
    )


def verify_witness(
    t: Triangle,
    witness: Triangle,
    problem: Problem,
    tol: Tolerance = DEFAULT_TOLERANCE,
    rel: Optional[float] = None,
) -> WitnessReport:
    """Check the structural conditions an optimal triangle satisfies.

    For embedded problems a side of the witness lies in a side of t and every
    witness vertex is on the boundary of t. For containers a side of the
    witness contains a side of t and every vertex of t is on the witness
    boundary. In both cases the two triangles share a vertex.

    Args:
        t: the input triangle.
        witness: the optimal triangle.
        problem: the problem the witness solves.
        tol: tolerances; ``rel`` overrides ``tol.eps_rel`` for distances.
    """
    if problem.container:
        inner, outer = t, witness
    else:
        inner, outer = witness, t
    containment = tol if rel is None else Tolerance(eps_rel=rel)
    contained = contains_triangle(outer, inner, containment)
    if not contained:
        logger.warning("%s witness violates containment", problem.value)
    return WitnessReport(
        contained=contained,
        side_in_side=side_in_side(inner, outer, tol, rel),
        on_boundary=vertices_on_boundary(inner.coords, outer, tol, rel),
        shares_vertex=shares_vertex(inner, outer, tol, rel),
        midpoint_arcs=(
            midpoint_arc_condition(witness, t, tol, rel)
            if problem is Problem.MAX_AREA_EMBEDDED
            else None
        ),
    )
