"""Seeded verification of the inequalities and structural facts the solvers rely on.

Every check draws its samples from ``numpy.random.default_rng(seed)`` and
returns a `CheckReport`; a check passes when no sample fails.
"""
import logging
from typing import Callable, Dict, List, Optional, Sequence

from isotri.verification.inequalities import (
    check_container_inequalities,
    check_embedded_inequalities,
    check_hinge,
    check_leg_configuration,
    check_x_star_closed_form,
    container_margins,
    embedded_margins,
    hinge_margin,
    leg_configuration,
    x_star_margins,
)
from isotri.verification.minkowski import (
    check_minkowski_perimeter,
    minkowski_mean,
    minkowski_sum,
    polygon_perimeter,
    random_convex_polygon,
)
from isotri.verification.runner import Evaluation, run_check
from isotri.verification.sampling import (
    random_placement,
    sample_angles,
    scalene_triangles,
    shape_from_angles,
    triangle_from_angles,
)
from isotri.verification.structural import (
    check_structural,
    check_theorem1,
    check_theorem2_types,
    structural_margins,
)
from isotri.verification.typedefs import CheckReport, FailureDetail, SuiteConfig

logger = logging.getLogger(__name__)

Check = Callable[[SuiteConfig], CheckReport]

# Checks by id, in the order ``run_all`` runs them.
LEMMAS: Dict[str, Check] = {
    "embedded-inequalities": lambda c: check_embedded_inequalities(
        c.samples, c.seed, c.max_workers
    ),
    "container-inequalities": lambda c: check_container_inequalities(
        c.samples, c.seed, c.max_workers
    ),
    "minkowski-perimeter": lambda c: check_minkowski_perimeter(
        c.samples, c.seed, c.max_workers
    ),
    "hinge": lambda c: check_hinge(c.samples, c.seed, c.max_workers),
    "leg-configuration": lambda c: check_leg_configuration(
        c.samples, c.seed, c.max_workers
    ),
    "x-star-closed-form": lambda c: check_x_star_closed_form(seed=c.seed),
    "theorem1": lambda c: check_theorem1(c.samples, c.seed, c.max_workers),
    "theorem2-types": lambda c: check_theorem2_types(
        c.samples, c.seed, c.max_workers
    ),
    "structural": lambda c: check_structural(
        c.samples, c.seed, c.oracle, c.max_workers
    ),
}


def run_all(
    cfg: SuiteConfig = SuiteConfig(), lemmas: Optional[Sequence[str]] = None
) -> List[CheckReport]:
    """Run the selected checks (all by default) in registry order.

    Raises:
        KeyError: for an unknown check id.
    """
    selected = list(LEMMAS) if lemmas is None else list(lemmas)
    unknown = [name for name in selected if name not in LEMMAS]
    if unknown:
        raise KeyError(f"Unknown checks {unknown}; expected some of {list(LEMMAS)}")
    reports = []
    for name in LEMMAS:
        if name in selected:
            logger.info("running %s", name)
            reports.append(LEMMAS[name](cfg))
    return reports


__all__ = [
    "CheckReport",
    "Evaluation",
    "FailureDetail",
    "LEMMAS",
    "SuiteConfig",
    "check_container_inequalities",
    "check_embedded_inequalities",
    "check_hinge",
    "check_leg_configuration",
    "check_minkowski_perimeter",
    "check_structural",
    "check_theorem1",
    "check_theorem2_types",
    "check_x_star_closed_form",
    "container_margins",
    "embedded_margins",
    "hinge_margin",
    "leg_configuration",
    "minkowski_mean",
    "minkowski_sum",
    "polygon_perimeter",
    "random_convex_polygon",
    "random_placement",
    "run_all",
    "run_check",
    "sample_angles",
    "scalene_triangles",
    "shape_from_angles",
    "structural_margins",
    "triangle_from_angles",
    "x_star_margins",
]
