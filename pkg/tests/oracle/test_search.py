import numpy as np
import pytest

from isotri.oracle import OracleConfig, oracle_solve, pose_values
from isotri.problems import Problem
from isotri.solvers import solve
from tests.utils import OPTIMA_345, acute_triangle, triangle_345

SMALL = OracleConfig(grid_gamma=180, grid_theta=360)


@pytest.mark.parametrize("problem", list(Problem))
def test_oracle_agrees_with_solver_on_345(problem: Problem) -> None:
    found = oracle_solve(triangle_345(), problem, SMALL)
    optimum = OPTIMA_345[problem]
    assert found.problem == problem
    assert found.value == pytest.approx(optimum, rel=1e-3)
    # The oracle optimizes over a subset of what the closed forms cover.
    if problem.maximize:
        assert found.value <= optimum * (1 + 1e-9)
    else:
        assert found.value >= optimum * (1 - 1e-9)
    assert found.evaluations > 180 * 360
    assert found.method == "nelder-mead"


def test_refinement_improves_on_the_grid() -> None:
    t = acute_triangle()
    problem = Problem.MIN_PERIM_CONTAINER
    found = oracle_solve(t, problem, SMALL)
    assert found.value <= found.grid_value * (1 + 1e-12)
    assert found.value == pytest.approx(solve(t, problem).optimum, rel=1e-3)


def test_oracle_is_independent_of_worker_count() -> None:
    t = acute_triangle()
    cfg = OracleConfig(grid_gamma=60, grid_theta=120)
    threaded = cfg.model_copy(update={"max_workers": 3})
    for problem in (Problem.MAX_AREA_EMBEDDED, Problem.MIN_AREA_CONTAINER):
        assert oracle_solve(t, problem, cfg) == oracle_solve(t, problem, threaded)


def test_pose_values_shape() -> None:
    values = pose_values(
        triangle_345(),
        Problem.MAX_PERIM_EMBEDDED,
        np.linspace(0.1, 3.0, 7),
        np.linspace(0.0, 6.0, 5),
    )
    assert values.shape == (7, 5)
    assert np.all(values > 0)
    assert np.all(values <= OPTIMA_345[Problem.MAX_PERIM_EMBEDDED] * (1 + 1e-9))
