import math
from typing import Dict

import pytest
from pydantic import ValidationError

from isotri.verification import CheckReport, Evaluation, run_check
from isotri.verification.runner import MAX_DETAILS

INPUTS = [{"x": float(i)} for i in range(10)]


def _odd_fails(x: Dict[str, float]) -> Evaluation:
    parity = "odd" if int(x["x"]) % 2 else "even"
    return Evaluation(
        [("always", 1.0 + x["x"]), ("even only", -1.0 if parity == "odd" else 0.5)],
        parity,
    )


def test_run_check_counts_failing_samples() -> None:
    report = run_check("parity", INPUTS, _odd_fails, seed=7)
    assert report.lemma_id == "parity"
    assert report.samples == 10
    assert report.failures == 5
    assert report.worst_margin == -1.0
    assert report.seed == 7
    assert report.tally == {"even": 5, "odd": 5}
    assert [d["index"] for d in report.details] == [1, 3, 5, 7, 9]
    assert report.details[0] == {
        "index": 1,
        "item": "even only",
        "margin": -1.0,
        "inputs": {"x": 1.0},
    }
    assert not report.passed


def test_run_check_passes_with_positive_margins() -> None:
    report = run_check("ok", INPUTS, lambda x: Evaluation([("m", 1 + x["x"])]), 0)
    assert report.passed
    assert report.details == []
    assert report.worst_margin == 1.0
    assert report.tally == {}


@pytest.mark.parametrize("margin", [0.0, math.nan])
def test_zero_and_nan_margins_fail(margin: float) -> None:
    report = run_check("edge", INPUTS[:1], lambda x: Evaluation([("m", margin)]), 0)
    assert report.failures == 1
    assert report.worst_margin == (0.0 if margin == 0 else -math.inf)


def test_details_are_capped_but_failures_are_not() -> None:
    inputs = [{"x": float(i)} for i in range(MAX_DETAILS + 20)]
    report = run_check("cap", inputs, lambda x: Evaluation([("m", -1.0)]), 0)
    assert report.failures == MAX_DETAILS + 20
    assert len(report.details) == MAX_DETAILS


def test_report_is_independent_of_worker_count() -> None:
    single = run_check("parity", INPUTS, _odd_fails, 0)
    threaded = run_check("parity", INPUTS, _odd_fails, 0, max_workers=3)
    assert single == threaded


def test_failures_must_match_details() -> None:
    with pytest.raises(ValidationError):
        CheckReport(lemma_id="x", samples=1, failures=1, worst_margin=-1, seed=0)
