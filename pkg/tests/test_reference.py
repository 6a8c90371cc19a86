import pytest

from isotri.candidates import NonSpecialKind
from isotri.problems import Problem
from isotri.reference import (
    REFERENCE_COLUMNS,
    best_apex_perimeter,
    reference_table,
    v08_triangle,
)
from isotri.solvers import solve


def test_reference_values_all_pass() -> None:
    table = reference_table()
    assert list(table.columns) == REFERENCE_COLUMNS
    assert len(table) == 11
    assert table["name"].iloc[0] == "gamma*"
    failing = table[table["status"] != "PASS"]
    assert failing.empty, failing.to_string()


def test_tight_tolerance_reports_rounding() -> None:
    table = reference_table(tolerance=1e-9)
    assert (table["status"] == "FAIL").any()
    assert (table["tolerance"] == 1e-9).all()


def test_apex_beats_every_special_container_at_v08() -> None:
    result = solve(v08_triangle(), Problem.MIN_PERIM_CONTAINER)
    assert result.winner.kind == NonSpecialKind.APEX
    assert result.optimum == pytest.approx(best_apex_perimeter(v08_triangle()))

