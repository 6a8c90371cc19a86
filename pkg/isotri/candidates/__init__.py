"""Declare public interface for candidate constructions.

Every generator follows the `CandidateFamily` interface.
"""
from isotri.candidates.nonspecial import (
    ApexCandidates,
    ApexFamily,
    ApexWindow,
    Ex2Candidates,
    Ex2Family,
    NormalizedFrame,
    XStar,
    apex_candidates,
    apex_perimeter,
    apex_window,
    delta_v,
    ex2_candidates,
    f_v,
    gamma_star,
    solve_x_star,
    stationarity_residual,
    x_star,
    x_star_closed_form,
)
from isotri.candidates.special import (
    SpecialContainers,
    SpecialEmbedded,
    closed_form_area,
    closed_form_perimeter,
    container_specials,
    embedded_specials,
    leg_and_apex,
)
from isotri.candidates.typedefs import (
    Candidate,
    CandidateFamily,
    CandidateKind,
    ContainerKind,
    EmbeddedKind,
    NonSpecialKind,
    SpecialKind,
)

__all__ = [
    "ApexCandidates",
    "ApexFamily",
    "ApexWindow",
    "Candidate",
    "CandidateFamily",
    "CandidateKind",
    "ContainerKind",
    "EmbeddedKind",
    "Ex2Candidates",
    "Ex2Family",
    "NonSpecialKind",
    "NormalizedFrame",
    "SpecialContainers",
    "SpecialEmbedded",
    "SpecialKind",
    "XStar",
    "apex_candidates",
    "apex_perimeter",
    "apex_window",
    "closed_form_area",
    "closed_form_perimeter",
    "container_specials",
    "delta_v",
    "embedded_specials",
    "ex2_candidates",
    "f_v",
    "gamma_star",
    "leg_and_apex",
    "solve_x_star",
    "stationarity_residual",
    "x_star",
    "x_star_closed_form",
]
