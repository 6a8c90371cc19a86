import pytest

from isotri.oracle import OracleConfig
from isotri.problems import Problem
from isotri.solvers import WINNER_KINDS
from isotri.verification import (
    LEMMAS,
    SuiteConfig,
    check_theorem1,
    check_theorem2_types,
    run_all,
    structural_margins,
)
from isotri.verification.sampling import triangle_inputs
from tests.utils import acute_triangle

SMALL = OracleConfig(grid_gamma=90, grid_theta=180)


def test_theorem1_on_a_small_sample() -> None:
    report = check_theorem1(100, 0)
    assert report.passed, report.details[:3]
    assert report.worst_margin == 1.0


def test_theorem2_types_tally_winner_kinds() -> None:
    report = check_theorem2_types(200, 0)
    assert report.passed, report.details[:3]
    assert sum(report.tally.values()) == 200
    allowed = {kind.value for kind in WINNER_KINDS[Problem.MIN_PERIM_CONTAINER]}
    assert set(report.tally) <= allowed


def test_structural_margins_cover_every_problem() -> None:
    x = triangle_inputs((0.0, 0.0, 0.0), acute_triangle())
    margins = dict(structural_margins(x, SMALL))
    for problem in Problem:
        for item in (
            "contained",
            "side in side",
            "vertices on boundary",
            "shared vertex",
            "oracle agrees",
            "oracle not better",
        ):
            assert f"{problem.value}: {item}" in margins
        # The oracle never beats the exact optimum.
        assert margins[f"{problem.value}: oracle not better"] > 0
    assert f"{Problem.MAX_AREA_EMBEDDED.value}: midpoint arcs" in margins
    assert f"{Problem.MIN_AREA_CONTAINER.value}: midpoint arcs" not in margins


def test_registry_order() -> None:
    assert list(LEMMAS) == [
        "embedded-inequalities",
        "container-inequalities",
        "minkowski-perimeter",
        "hinge",
        "leg-configuration",
        "x-star-closed-form",
        "theorem1",
        "theorem2-types",
        "structural",
    ]


def test_run_all_selects_checks_in_registry_order() -> None:
    cfg = SuiteConfig(samples=50, seed=1)
    reports = run_all(cfg, ["hinge", "embedded-inequalities"])
    assert [r.lemma_id for r in reports] == ["embedded-inequalities", "hinge"]
    assert all(r.passed and r.seed == 1 for r in reports)


def test_run_all_rejects_unknown_checks() -> None:
    with pytest.raises(KeyError):
        run_all(SuiteConfig(samples=1), ["no-such-check"])
