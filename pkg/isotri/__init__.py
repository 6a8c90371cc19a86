from .candidates import (
    Candidate,
    ContainerKind,
    EmbeddedKind,
    NonSpecialKind,
    apex_window,
    f_v,
    gamma_star,
    x_star,
)
from .exceptions import (
    ClosedFormMismatch,
    DegenerateTriangle,
    InputError,
    InvalidPose,
    IsotriException,
    NoInteriorMinimum,
    NotScalene,
)
from .geometry import (
    Point,
    Tolerance,
    Triangle,
    TriangleShape,
    normalize,
    triangle_from_sides,
)
from .oracle import OracleConfig, OracleResult, ShapePose, oracle_solve
from .problems import Problem
from .reference import realizability_instances, reference_table
from .rendering import render_phase_map, render_svg
from .reporting import RunRecord, candidate_table, sweep_table
from .solvers import SolveResult, WitnessReport, solve, verify_witness
from .verification import CheckReport, SuiteConfig, run_all
from .version import __version__

__all__ = (
    "apex_window",
    "Candidate",
    "candidate_table",
    "CheckReport",
    "ClosedFormMismatch",
    "ContainerKind",
    "DegenerateTriangle",
    "EmbeddedKind",
    "f_v",
    "gamma_star",
    "InputError",
    "InvalidPose",
    "IsotriException",
    "NoInteriorMinimum",
    "NonSpecialKind",
    "normalize",
    "NotScalene",
    "oracle_solve",
    "OracleConfig",
    "OracleResult",
    "Point",
    "Problem",
    "realizability_instances",
    "reference_table",
    "render_phase_map",
    "render_svg",
    "run_all",
    "RunRecord",
    "ShapePose",
    "solve",
    "SolveResult",
    "SuiteConfig",
    "sweep_table",
    "Tolerance",
    "Triangle",
    "triangle_from_sides",
    "TriangleShape",
    "verify_witness",
    "WitnessReport",
    "x_star",
    "__version__",
)
