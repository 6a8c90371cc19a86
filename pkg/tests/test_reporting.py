import math

import pandas as pd
import pytest

from isotri.candidates import ContainerKind
from isotri.problems import Problem
from isotri.reference import v07_triangle
from isotri.reporting import (
    CANDIDATE_COLUMNS,
    SWEEP_COLUMNS,
    RunRecord,
    candidate_table,
    format_table,
    input_record,
    result_record,
    result_schema,
    summary_table,
    sweep_grid,
    sweep_table,
    winner_frequencies,
)
from isotri.solvers import solve
from isotri.verification import CheckReport
from tests.utils import OPTIMA_345, triangle_345


def test_candidate_table_ranks_valid_candidates() -> None:
    result = solve(triangle_345(), Problem.MIN_AREA_CONTAINER)
    table = candidate_table(result)
    assert list(table.columns) == CANDIDATE_COLUMNS
    assert len(table) == len(result.table)
    assert str(table["rank"].dtype) == "Int64"

    first = table.iloc[0]
    assert first["rank"] == 1
    assert first["kind"] == "cont:ABC'"
    assert first["winner"]
    assert first["area"] == pytest.approx(7.5)

    valid = table[table["valid"]]
    assert list(valid["rank"]) == list(range(1, len(valid) + 1))
    assert table.loc[~table["valid"], "rank"].isna().all()


def test_format_table_uses_six_digits() -> None:
    table = pd.DataFrame({"kind": ["x"], "value": [math.pi]})
    text = format_table(table)
    assert "3.14159" in text
    assert "3.141592" not in text


def test_result_record_of_345() -> None:
    result = solve(triangle_345(), Problem.MIN_PERIM_CONTAINER)
    record = result_record(result)
    assert record.problem == "min-perim-container"
    assert record.optimum == pytest.approx(OPTIMA_345[Problem.MIN_PERIM_CONTAINER])
    assert record.winners[0].kind == "cont:ABC'"
    assert record.winners[0].shares_side_and_angle is result.shares_side_and_angle
    assert len(record.candidates) == len(result.table)
    assert record.oracle is None
    assert len(record.input["vertices"]) == 3


def test_every_winner_carries_its_own_flag() -> None:
    result = solve(v07_triangle(), Problem.MIN_PERIM_CONTAINER)
    special = next(
        c for c in result.table if c.valid and isinstance(c.kind, ContainerKind)
    )
    tied = result.model_copy(update={"winners": [result.winner, special]})
    record = result_record(tied)
    assert [w.shares_side_and_angle for w in record.winners] == [False, True]
    assert all(c.shares_side_and_angle is None for c in record.candidates)


def test_run_record_replays_from_json() -> None:
    t = triangle_345()
    record = RunRecord(
        command=["isotri", "solve", "--sides", "3,4,5", "--json"],
        input=input_record(t),
        results=[result_record(solve(t, p)) for p in Problem],
        timing={"solve": 0.01},
    )
    assert RunRecord.model_validate_json(record.model_dump_json()) == record


def test_result_schema_describes_run_records() -> None:
    schema = result_schema()
    assert {"command", "input", "results"} <= set(schema["properties"])


def test_sweep_grid_stays_in_the_scalene_simplex() -> None:
    points = sweep_grid(4)
    assert len(points) == 16
    for _, _, alpha, beta in points:
        assert 0 < alpha < beta < math.pi - alpha - beta


def test_sweep_table_is_ordered_whatever_the_workers() -> None:
    table = sweep_table(3)
    assert list(table.columns) == SWEEP_COLUMNS
    expected = [(i, j) for i in range(3) for j in range(3)]
    assert list(zip(table["i"], table["j"])) == expected
    parallel = sweep_table(3, max_workers=3)
    pd.testing.assert_frame_equal(table, parallel)


def test_winner_frequencies_sum_to_one() -> None:
    table = sweep_table(3, Problem.MAX_AREA_EMBEDDED)
    shares = winner_frequencies(table)
    assert shares.sum() == pytest.approx(1.0)
    assert set(shares.index) == set(table["winner"])


def test_summary_table() -> None:
    reports = [
        CheckReport(lemma_id="hinge", samples=10, failures=0, worst_margin=0.5, seed=3),
        CheckReport(
            lemma_id="theorem1",
            samples=10,
            failures=1,
            worst_margin=-0.1,
            seed=3,
            details=[{"index": 4, "item": "x", "margin": -0.1, "inputs": {}}],
        ),
    ]
    table = summary_table(reports)
    assert list(table["check"]) == ["hinge", "theorem1"]
    assert list(table["status"]) == ["PASS", "FAIL"]
