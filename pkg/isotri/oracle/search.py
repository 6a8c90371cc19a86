"""Grid search with local refinement over (apex angle, orientation).

The oracle knows nothing about special triangles: it evaluates the exact
per-pose placement on a grid, refines the best cells with Nelder-Mead and
reports the best pose found.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Tuple

import numpy as np
from scipy import optimize

from isotri.geometry import Triangle
from isotri.oracle.placement import (
    embedded_scale_grid,
    enclosing_scale_grid,
    max_embedded_at_pose,
    min_enclosing_at_pose,
    shape_metric,
)
from isotri.oracle.typedefs import OracleConfig, OracleResult, ShapePose
from isotri.problems import Problem

logger = logging.getLogger(__name__)

# Objective value for poses outside (0, pi) x R.
_PENALTY = 1e300
# Grid cells within this many steps of a chosen start are not used as starts.
_START_SEPARATION = 2
# Nelder-Mead runs per start.
_RESTARTS = 4

GridFn = Callable[[Triangle, np.ndarray, np.ndarray], np.ndarray]


def grid_gammas(cfg: OracleConfig) -> np.ndarray:
    """Apex angles at half-cell offsets, so 0 and pi are excluded."""
    return (np.arange(cfg.grid_gamma) + 0.5) * np.pi / cfg.grid_gamma


def grid_thetas(cfg: OracleConfig) -> np.ndarray:
    return np.arange(cfg.grid_theta) * 2 * np.pi / cfg.grid_theta


def pose_values(
    t: Triangle, problem: Problem, gammas: np.ndarray, thetas: np.ndarray
) -> np.ndarray:
    """Metric of the optimal placement for every (gamma, theta) pair."""
    scale_fn: GridFn = (
        enclosing_scale_grid if problem.container else embedded_scale_grid
    )
    scales = scale_fn(t, gammas, thetas)
    g = np.asarray(gammas, dtype=float)[:, None]
    return shape_metric(g, scales, problem.metric)


def _grid(
    t: Triangle, problem: Problem, cfg: OracleConfig
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    gammas, thetas = grid_gammas(cfg), grid_thetas(cfg)
    if cfg.max_workers == 1:
        return gammas, thetas, pose_values(t, problem, gammas, thetas)

    blocks = np.array_split(gammas, cfg.max_workers)
    with ThreadPoolExecutor(max_workers=cfg.max_workers) as executor:
        # map keeps block order, so the reduction below is schedule independent.
        rows = list(
            executor.map(lambda block: pose_values(t, problem, block, thetas), blocks)
        )
    return gammas, thetas, np.concatenate(rows, axis=0)


def _starts(values: np.ndarray, problem: Problem, count: int) -> List[Tuple[int, int]]:
    """Best cells, lexicographic on (gamma, theta) among ties, kept apart."""
    signed = -values if problem.maximize else values
    order = np.argsort(signed, axis=None, kind="stable")
    n_gamma, n_theta = values.shape
    chosen: List[Tuple[int, int]] = []
    for flat in order:
        i, j = divmod(int(flat), n_theta)
        if all(
            abs(i - ci) > _START_SEPARATION
            or min(abs(j - cj), n_theta - abs(j - cj)) > _START_SEPARATION
            for ci, cj in chosen
        ):
            chosen.append((i, j))
            if len(chosen) == count:
                break
    return chosen


def _objective(t: Triangle, problem: Problem) -> Callable[[np.ndarray], float]:
    sign = -1.0 if problem.maximize else 1.0

    def _evaluate(x: np.ndarray) -> float:
        gamma, theta = float(x[0]), float(x[1])
        if not 0 < gamma < math.pi:
            return _PENALTY
        value = pose_values(t, problem, np.array([gamma]), np.array([theta]))
        return sign * float(value[0, 0])

    return _evaluate


def _refine(
    objective: Callable[[np.ndarray], float],
    x0: np.ndarray,
    steps: np.ndarray,
    cfg: OracleConfig,
    fatol: float,
) -> Tuple[np.ndarray, float, int, bool]:
    """Nelder-Mead from x0, restarted with smaller simplices while it improves.

    Restarts alternate between axis-aligned and diagonal simplices.
    """
    x, f = x0, objective(x0)
    nfev, success = 1, False
    for restart in range(_RESTARTS):
        size = steps / 10**restart
        if restart % 2 == 0:
            simplex = np.array([x, x + [size[0], 0.0], x + [0.0, size[1]]])
        else:
            simplex = np.array([x, x + size, x + [size[0], -size[1]]])
        result = optimize.minimize(
            objective,
            x,
            method="Nelder-Mead",
            options={
                "initial_simplex": simplex,
                "maxiter": cfg.refine_iters,
                "xatol": cfg.param_tol,
                "fatol": fatol,
            },
        )
        nfev += int(result.nfev)
        success = success or bool(result.success)
        improvement = f - float(result.fun)
        if improvement > 0:
            x, f = np.asarray(result.x, dtype=float), float(result.fun)
        if improvement <= fatol:
            break
    return x, f, nfev, success


# PUBLIC API


def oracle_solve(
    t: Triangle, problem: Problem, cfg: OracleConfig = OracleConfig()
) -> OracleResult:
    """Optimize the problem directly over all isosceles shapes and poses.

    Args:
        t: the input triangle.
        problem: which optimum to compute.
        cfg: grid size, refinement budget and tolerances.

    Returns:
        The best value found together with its witness and pose.
    """
    gammas, thetas, values = _grid(t, problem, cfg)
    starts = _starts(values, problem, cfg.refine_starts)
    grid_best = float(values[starts[0]])
    logger.info(
        "%s: grid %dx%d best %.12g at gamma=%.6f theta=%.6f",
        problem.value,
        cfg.grid_gamma,
        cfg.grid_theta,
        grid_best,
        gammas[starts[0][0]],
        thetas[starts[0][1]],
    )

    objective = _objective(t, problem)
    step_gamma = np.pi / cfg.grid_gamma
    step_theta = 2 * np.pi / cfg.grid_theta
    best_x = np.array([gammas[starts[0][0]], thetas[starts[0][1]]])
    best_f = objective(best_x)
    evaluations = values.size
    converged = False
    fatol = cfg.value_tol * abs(grid_best)
    for i, j in starts:
        x, f, nfev, success = _refine(
            objective,
            np.array([gammas[i], thetas[j]]),
            np.array([step_gamma, step_theta]) / 2,
            cfg,
            fatol,
        )
        evaluations += nfev
        converged = converged or success
        if f < best_f or (f == best_f and tuple(x) < tuple(best_x)):
            best_x, best_f = x, f

    pose = ShapePose(gamma=float(best_x[0]), theta=float(best_x[1]))
    if problem.container:
        value, witness = min_enclosing_at_pose(t, pose, problem.metric)
    else:
        scale, witness = max_embedded_at_pose(t, pose)
        value = float(
            shape_metric(np.array(pose.gamma), np.array(scale), problem.metric)
        )
    logger.info(
        "%s: refined to %.12g (converged=%s, %d evaluations)",
        problem.value,
        value,
        converged,
        evaluations,
    )
    return OracleResult(
        problem=problem,
        value=value,
        witness=witness,
        pose=pose,
        evaluations=evaluations,
        converged=converged,
        grid_value=grid_best,
    )
