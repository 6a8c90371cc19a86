"""Seeded checks of the inequalities between candidate areas and perimeters.

Every item is evaluated as the relative margin (rhs - lhs) / rhs of a strict
inequality lhs < rhs, so a positive margin means the item holds.
"""
import math
from typing import Callable, List, Tuple

import numpy as np
from scipy import optimize

from isotri.candidates import (
    ContainerKind,
    EmbeddedKind,
    SpecialKind,
    closed_form_area,
    closed_form_perimeter,
    solve_x_star,
    stationarity_residual,
    x_star_closed_form,
)
from isotri.candidates.nonspecial import CLOSED_FORM_AGREEMENT, CLOSED_FORM_WINDOW
from isotri.exceptions import ClosedFormMismatch
from isotri.geometry import TriangleShape
from isotri.verification.runner import Evaluation, Inputs, Margins, run_check
from isotri.verification.sampling import sample_angles, shape_from_angles
from isotri.verification.typedefs import CheckReport

# Items restricted to acute or obtuse shapes skip shapes this close to right.
RIGHT_ANGLE_GUARD = 1e-6
GOLDEN_AGREEMENT = 1e-6

Item = Tuple[str, SpecialKind, SpecialKind]

_EMBEDDED_ITEMS: List[Item] = [
    ("i: A''BC < A'BC", EmbeddedKind.A_DPRIME_BC, EmbeddedKind.A_PRIME_BC),
    ("ii: A1BC < AB'C", EmbeddedKind.A1_BC, EmbeddedKind.AB_PRIME_C),
    ("ii: AB1C < ABC1", EmbeddedKind.AB1_C, EmbeddedKind.ABC1),
    ("iii: AbarBC < ABC1", EmbeddedKind.A_BAR_BC, EmbeddedKind.ABC1),
]
_EMBEDDED_ACUTE_ITEMS: List[Item] = [
    ("iii: AbarbarBC < ABbarC", EmbeddedKind.A_BARBAR_BC, EmbeddedKind.AB_BAR_C),
    ("iii: ABbarC < AB'C", EmbeddedKind.AB_BAR_C, EmbeddedKind.AB_PRIME_C),
]
_EMBEDDED_OBTUSE_ITEMS: List[Item] = [
    ("iv: A'BC < ABC1", EmbeddedKind.A_PRIME_BC, EmbeddedKind.ABC1),
]

_CONTAINER_ITEMS: List[Item] = [
    ("i: ABC' < ABC''", ContainerKind.ABC_PRIME, ContainerKind.ABC_DPRIME),
    ("i: AB'C < AB1C", ContainerKind.AB_PRIME_C, ContainerKind.AB1_C),
    ("ii: ABC' < ABC2", ContainerKind.ABC_PRIME, ContainerKind.ABC2),
    ("ii: ABC2 < ABC1", ContainerKind.ABC2, ContainerKind.ABC1),
]
_CONTAINER_ACUTE_ITEMS: List[Item] = [
    ("iii: ABC' < AbarBC", ContainerKind.ABC_PRIME, ContainerKind.A_BAR_BC),
    ("iii: AbarBC < ABbarC", ContainerKind.A_BAR_BC, ContainerKind.AB_BAR_C),
]


def _margin(lhs: float, rhs: float) -> float:
    return (rhs - lhs) / abs(rhs)


def _items(
    items: List[Item],
    metric: Callable[[SpecialKind, TriangleShape], float],
    shape: TriangleShape,
) -> Margins:
    return [
        (label, _margin(metric(smaller, shape), metric(larger, shape)))
        for label, smaller, larger in items
    ]


def _angle_inputs(samples: int, seed: int) -> List[Inputs]:
    rng = np.random.default_rng(seed)
    inputs = []
    for _ in range(samples):
        alpha, beta, gamma = sample_angles(rng)
        inputs.append({"alpha": alpha, "beta": beta, "gamma": gamma})
    return inputs


def _shape(x: Inputs) -> TriangleShape:
    return shape_from_angles(x["alpha"], x["beta"], x["gamma"])


# PUBLIC API


def embedded_margins(shape: TriangleShape) -> Margins:
    """Margins of the area inequalities between special embedded triangles.

    Third-kind comparisons are only made on acute shapes, where those
    triangles exist, and item iv only on obtuse ones.
    """
    margins = _items(_EMBEDDED_ITEMS, closed_form_area, shape)
    if shape.is_acute(RIGHT_ANGLE_GUARD):
        margins += _items(_EMBEDDED_ACUTE_ITEMS, closed_form_area, shape)
    if shape.is_obtuse(RIGHT_ANGLE_GUARD):
        margins += _items(_EMBEDDED_OBTUSE_ITEMS, closed_form_area, shape)
    return margins


def container_margins(shape: TriangleShape) -> Margins:
    """Margins of the perimeter inequalities between special containers.

    Also checks that the best special container is shorter than twice the
    perimeter of the input.
    """
    margins = _items(_CONTAINER_ITEMS, closed_form_perimeter, shape)
    if shape.is_acute(RIGHT_ANGLE_GUARD):
        margins += _items(_CONTAINER_ACUTE_ITEMS, closed_form_perimeter, shape)
    best = min(
        closed_form_perimeter(kind, shape)
        for kind in (
            ContainerKind.AB_PRIME_C,
            ContainerKind.ABC_PRIME,
            ContainerKind.AB1_C,
        )
    )
    margins.append(
        (
            "bound: best special < 2 per(ABC)",
            _margin(best, 2 * (shape.a + shape.b + shape.c)),
        )
    )
    return margins


def hinge_margin(leg1: float, leg2: float, angle1: float, angle2: float) -> float:
    """Relative perimeter gain of opening the angle between two fixed legs."""

    def per(angle: float) -> float:
        half = math.sin(angle / 2)
        third = math.hypot(leg1 - leg2, 2 * half * math.sqrt(leg1 * leg2))
        return leg1 + leg2 + third

    return _margin(per(angle1), per(angle2))


def leg_configuration(h: float, y: float) -> float:
    """(1 + h y) * (1 + sqrt((1 - y / sqrt(1 + y^2)) / 2)).

    Perimeter, up to scale, of a container with one input vertex inside a leg
    and one on the base; increasing in y for y > 1 / h.
    """
    return (1 + h * y) * (1 + math.sqrt((1 - y / math.sqrt(1 + y * y)) / 2))


def check_embedded_inequalities(
    samples: int, seed: int, max_workers: int = 1
) -> CheckReport:
    """Area inequalities between special embedded triangles of random shapes."""
    return run_check(
        "embedded-inequalities",
        _angle_inputs(samples, seed),
        lambda x: Evaluation(embedded_margins(_shape(x))),
        seed,
        max_workers,
    )


def check_container_inequalities(
    samples: int, seed: int, max_workers: int = 1
) -> CheckReport:
    """Perimeter inequalities between special containers of random shapes."""
    return run_check(
        "container-inequalities",
        _angle_inputs(samples, seed),
        lambda x: Evaluation(container_margins(_shape(x))),
        seed,
        max_workers,
    )


def check_hinge(samples: int, seed: int, max_workers: int = 1) -> CheckReport:
    """Two fixed legs: the perimeter grows with the included angle."""
    rng = np.random.default_rng(seed)
    inputs = []
    while len(inputs) < samples:
        leg1, leg2 = np.exp(rng.uniform(-2, 2, size=2))
        angle1, angle2 = sorted(rng.uniform(0, math.pi, size=2))
        if angle2 - angle1 > 1e-6:
            inputs.append(
                {
                    "leg1": float(leg1),
                    "leg2": float(leg2),
                    "angle1": float(angle1),
                    "angle2": float(angle2),
                }
            )

    def _evaluate(x: Inputs) -> Evaluation:
        margin = hinge_margin(x["leg1"], x["leg2"], x["angle1"], x["angle2"])
        return Evaluation([("per grows with the angle", margin)])

    return run_check("hinge", inputs, _evaluate, seed, max_workers)


def check_leg_configuration(
    samples: int, seed: int, max_workers: int = 1
) -> CheckReport:
    """``leg_configuration(h, .)`` is increasing to the right of 1 / h."""
    rng = np.random.default_rng(seed)
    inputs = []
    for _ in range(samples):
        h = float(np.exp(rng.uniform(-3, 3)))
        y1 = 1 / h + float(np.exp(rng.uniform(-4, 3)))
        y2 = y1 * (1 + float(np.exp(rng.uniform(-7, 0))))
        inputs.append({"h": h, "y1": y1, "y2": y2})

    def _evaluate(x: Inputs) -> Evaluation:
        margin = _margin(
            leg_configuration(x["h"], x["y1"]), leg_configuration(x["h"], x["y2"])
        )
        return Evaluation([("increasing", margin)])

    return run_check("leg-configuration", inputs, _evaluate, seed, max_workers)


def x_star_margins(v: float) -> Margins:
    """Agreement of the radical closed form with the numeric minimizer of f_v."""
    closed = x_star_closed_form(v)
    try:
        solved = solve_x_star(v)
    except ClosedFormMismatch:
        # (x - 1)^3 (x + 1) - v^2 changes sign on [1, 1 + max(1, v)].
        root = optimize.brentq(
            lambda x: stationarity_residual(v, x), 1.0, 1.0 + max(1.0, v), xtol=1e-15
        )
        margin = CLOSED_FORM_AGREEMENT - abs(closed - root)
        return [("closed form = stationary point", margin)]
    return [
        (
            "closed form = stationary point",
            CLOSED_FORM_AGREEMENT - abs(closed - solved.value),
        ),
        (
            "closed form = golden section",
            GOLDEN_AGREEMENT - abs(closed - solved.golden),
        ),
    ]


def check_x_star_closed_form(samples: int = 50, seed: int = 0) -> CheckReport:
    """Closed form against the numeric minimizer on an even grid of v.

    The grid spans the window where the closed form holds, stopping 1e-3
    short of its upper end. ``seed`` is only recorded.
    """
    low, high = CLOSED_FORM_WINDOW
    vs = np.linspace(low, high - 1e-3, samples)
    return run_check(
        "x-star-closed-form",
        [{"v": float(v)} for v in vs],
        lambda x: Evaluation(x_star_margins(x["v"])),
        seed,
    )
