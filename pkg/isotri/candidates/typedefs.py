"""Type definitions for candidate triangles.

A candidate is an isosceles triangle built from the input triangle by one of
the named constructions. Embedded and container constructions reuse letters
(B', C1, ...), so their tags live in separate namespaces.
"""
from __future__ import annotations

import abc
import enum
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from isotri.geometry import DEFAULT_TOLERANCE, Tolerance, Triangle


class EmbeddedKind(str, enum.Enum):
    """Special embedded triangles, grouped by the kind of their defining point."""

    # First kind: a point on a side at a distance equal to another side.
    A_PRIME_BC = "emb:A'BC"
    AB_PRIME_C = "emb:AB'C"
    A_DPRIME_BC = "emb:A''BC"
    # Second kind: a perpendicular bisector meets a side.
    A1_BC = "emb:A1BC"
    AB1_C = "emb:AB1C"
    ABC1 = "emb:ABC1"
    # Third kind: a vertex reflected through the foot of an altitude.
    A_BAR_BC = "emb:AbarBC"
    A_BARBAR_BC = "emb:AbarbarBC"
    AB_BAR_C = "emb:ABbarC"


class ContainerKind(str, enum.Enum):
    """Special isosceles containers."""

    AB_PRIME_C = "cont:AB'C"
    ABC_PRIME = "cont:ABC'"
    ABC_DPRIME = "cont:ABC''"
    AB1_C = "cont:AB1C"
    ABC1 = "cont:ABC1"
    ABC2 = "cont:ABC2"
    A_BAR_BC = "cont:AbarBC"
    AB_BAR_C = "cont:ABbarC"
    ABC_BAR = "cont:ABCbar"


class NonSpecialKind(str, enum.Enum):
    """The two families of minimum perimeter containers that are not special."""

    APEX = "nonspecial:Apex"
    EX2 = "nonspecial:Ex2"
    # An isosceles input is its own optimum.
    INPUT = "input"


SpecialKind = Union[EmbeddedKind, ContainerKind]
CandidateKind = Union[EmbeddedKind, ContainerKind, NonSpecialKind]


class Candidate(BaseModel):
    """A tagged candidate triangle with its metrics and status.

    ``exists`` is False when the defining point cannot be constructed (or
    misses the segment it must lie on); ``triangle`` and the metrics are then
    None. ``valid`` is True when the candidate exists and satisfies the
    embedding or containment relation with the input at tolerance.
    """

    model_config = ConfigDict(frozen=True)

    kind: CandidateKind
    triangle: Optional[Triangle] = None
    area: Optional[float] = None
    perimeter: Optional[float] = None
    exists: bool = True
    valid: bool = False
    note: str = ""
    params: Dict[str, float] = Field(default_factory=dict)
    """Family parameters (apex angle, frame values, ...)."""

    def metric(self, name: str) -> Optional[float]:
        """Look up "area" or "perimeter"."""
        if name == "area":
            return self.area
        if name == "perimeter":
            return self.perimeter
        raise ValueError(f"Unknown metric {name!r}")


class CandidateFamily(abc.ABC):
    """Abstract interface for a generator of candidates.

    Implementations turn an input triangle into a list of candidates, one per
    construction they know about. They never raise for configurations that
    fail geometrically; such candidates are flagged instead.
    """

    @abc.abstractmethod
    def candidates(
        self, t: Triangle, tol: Tolerance = DEFAULT_TOLERANCE
    ) -> List[Candidate]:
        """Build every candidate of this family for the triangle."""
