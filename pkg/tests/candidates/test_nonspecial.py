import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import optimize

from isotri.candidates import (
    ApexCandidates,
    ApexFamily,
    ContainerKind,
    Ex2Candidates,
    Ex2Family,
    NonSpecialKind,
    apex_candidates,
    apex_perimeter,
    apex_window,
    container_specials,
    delta_v,
    f_v,
    gamma_star,
    solve_x_star,
    stationarity_residual,
    x_star,
    x_star_closed_form,
)
from isotri.candidates.nonspecial import f_v_derivative
from isotri.geometry import (
    Point,
    Triangle,
    contains_triangle,
    distance,
    foot_of_perpendicular,
    is_isosceles,
    normalize,
    perimeter,
    sub,
    unit,
)
from isotri.reference import v07_triangle, v08_triangle


def test_gamma_star() -> None:
    g = gamma_star()
    assert math.degrees(g) == pytest.approx(76.345415, abs=1e-5)
    assert apex_perimeter(1, g) == pytest.approx(3.33019, abs=1e-5)
    for step in (1e-3, -1e-3, 0.1, -0.1):
        assert apex_perimeter(1, g) < apex_perimeter(1, g + step)


@pytest.mark.parametrize(
    "v,expected_x,expected_f",
    [(0.7, 1.57517, 4.056333), (0.8, 1.62474, 4.264511)],
)
def test_x_star_reference_values(
    v: float, expected_x: float, expected_f: float
) -> None:
    x = x_star(v)
    assert x == pytest.approx(expected_x, abs=1e-5)
    assert f_v(v, x) == pytest.approx(expected_f, abs=5e-6)
    assert stationarity_residual(v, x) == pytest.approx(0, abs=1e-12)
    assert f_v_derivative(v, x) == pytest.approx(0, abs=1e-8)


@pytest.mark.parametrize("v", [0.56, 0.7, 1.0, 1.5, math.sqrt(3) - 1e-3])
def test_closed_form_agrees_with_numeric_minimizer(v: float) -> None:
    solved = solve_x_star(v)
    assert solved.branch == "numeric+closed-form"
    assert solved.closed_form is not None
    assert abs(solved.closed_form - solved.value) <= 1e-8
    assert x_star_closed_form(v) == pytest.approx(solved.value, abs=1e-8)


@pytest.mark.parametrize("v", [0.05, 0.3, 2.0, 10.0])
def test_numeric_branch_outside_closed_form_window(v: float) -> None:
    solved = solve_x_star(v)
    assert solved.branch == "numeric"
    assert solved.closed_form is None
    assert solved.value > 1
    assert stationarity_residual(v, solved.value) == pytest.approx(
        0, abs=1e-9 * max(1.0, v * v)
    )


def test_delta_v_matches_its_definition() -> None:
    v = 0.9
    assert delta_v(v) == pytest.approx(
        math.sqrt(48 * v**6 + 81 * v**4) - 9 * v**2, rel=1e-12
    )
    with pytest.raises(ValueError):
        delta_v(0)


def test_f_v_rejects_pole_and_bad_v() -> None:
    with pytest.raises(ValueError):
        f_v(0.7, 1.0)
    with pytest.raises(ValueError):
        solve_x_star(-1)


def test_ex2_family_perimeter_matches_triangle() -> None:
    t = v07_triangle()
    a, b, c = t.coords
    family = Ex2Family.from_assignment(a, b, c)
    assert family is not None
    assert family.v == pytest.approx(0.7)
    assert family.x_b == pytest.approx(1.57)
    x = x_star(family.v)
    triangle = family.triangle(x)
    assert perimeter(triangle) == pytest.approx(family.perimeter(x))
    assert is_isosceles(triangle)[0]


def test_ex2_candidate_of_v07_instance() -> None:
    t = v07_triangle()
    valid = [c for c in Ex2Candidates().candidates(t) if c.valid]
    assert valid
    best = min(valid, key=lambda c: c.perimeter or math.inf)
    assert best.kind == NonSpecialKind.EX2
    assert best.perimeter == pytest.approx(4.056333, abs=5e-6)
    assert best.triangle is not None
    assert contains_triangle(best.triangle, t)
    assert best.params["x_star"] == pytest.approx(1.57517, abs=1e-5)


def test_apex_candidates_of_v08_instance() -> None:
    t = v08_triangle()
    candidates = ApexCandidates().candidates(t)
    assert len(candidates) == 6
    valid = [c for c in candidates if c.valid]
    assert min(c.perimeter or math.inf for c in valid) == pytest.approx(
        4.264431, abs=5e-6
    )
    for c in candidates:
        assert c.params["gamma"] == gamma_star()


def test_apex_window_of_v08_instance() -> None:
    window = apex_window(v08_triangle())
    assert window.low_degrees == pytest.approx(75.974334, abs=5e-5)
    assert window.high_degrees == pytest.approx(89.327359, abs=5e-5)
    assert window.contains_gamma_star


def test_gamma_star_matches_a_bounded_minimization() -> None:
    found = optimize.minimize_scalar(
        lambda g: apex_perimeter(1, g),
        bounds=(1.0, 1.5),
        method="bounded",
        options={"xatol": 1e-12},
    )
    assert gamma_star() == pytest.approx(found.x, abs=1e-7)


@settings(max_examples=1000, deadline=None)
@given(
    st.floats(min_value=1e-2, max_value=1e2),
    st.floats(min_value=0.05, max_value=math.pi - 0.05),
    st.floats(min_value=0, max_value=2 * math.pi),
    st.tuples(
        st.floats(min_value=-10, max_value=10), st.floats(min_value=-10, max_value=10)
    ),
    st.sampled_from([1, -1]),
)
def test_apex_family_coordinates_match_closed_form(
    m: float, gamma: float, heading: float, foot: tuple, orientation: int
) -> None:
    direction = (math.cos(heading), math.sin(heading))
    vertex = (foot[0] - m * direction[1], foot[1] + m * direction[0])
    family = ApexFamily(
        vertex=Point(x=vertex[0], y=vertex[1]),
        foot=Point(x=foot[0], y=foot[1]),
        direction=direction,
        m=m,
        gamma=gamma,
    )
    triangle = family.triangle(orientation)
    assert perimeter(triangle) == pytest.approx(apex_perimeter(m, gamma), rel=1e-10)
    assert is_isosceles(triangle)[0]


def _rebuilt(t: Triangle, index: int, gamma: float) -> ApexFamily:
    coords = t.coords
    p = coords[index]
    q1, q2 = coords[(index + 1) % 3], coords[(index + 2) % 3]
    foot = foot_of_perpendicular(p, q1, q2)
    return ApexFamily(
        vertex=Point(x=p[0], y=p[1]),
        foot=Point(x=foot[0], y=foot[1]),
        direction=unit(sub(q2, q1)),
        m=distance(p, foot),
        gamma=gamma,
    )


@pytest.mark.parametrize("t", [v07_triangle(), v08_triangle()])
def test_gamma_star_is_a_local_minimum_of_rebuilt_candidates(t: Triangle) -> None:
    g = gamma_star()
    valid = [c for c in apex_candidates(t) if c.valid]
    assert valid
    for c in valid:
        index, orientation = int(c.params["vertex"]), int(c.params["orientation"])
        at_star = perimeter(_rebuilt(t, index, g).triangle(orientation))
        assert at_star == pytest.approx(c.perimeter, rel=1e-12)
        for step in (1e-3, -1e-3):
            moved = _rebuilt(t, index, g + step).triangle(orientation)
            assert perimeter(moved) > at_star


@pytest.mark.parametrize("v", [0.56, 0.7, 1.0, 1.5, math.sqrt(3) - 1e-3])
def test_f_v_is_convex_around_its_minimizer(v: float) -> None:
    x = x_star(v)
    for delta in (1e-4, 1e-3, 1e-2, 0.1):
        assert x - delta > 1
        assert f_v(v, x - delta) + f_v(v, x + delta) > 2 * f_v(v, x)


def test_ex2_clamped_to_x_b_is_a_special_container() -> None:
    # P = (0, 0), base vertex at x_b = 1.8 beyond x*(0.5), third vertex (1, 0.5).
    t = Triangle.from_points((0.0, 0.0), (1.8, 0.0), (1.0, 0.5))
    clamped = [
        c
        for c in Ex2Candidates().candidates(t)
        if c.valid and c.params["x_eff"] == c.params["x_b"]
    ]
    assert clamped
    matched = set()
    specials = [
        c for c in container_specials(normalize(t), t) if c.triangle is not None
    ]
    for c in clamped:
        assert c.triangle is not None
        match = [
            s
            for s in specials
            if all(
                min(distance(p, q) for q in s.triangle.coords) <= 1e-8  # type: ignore
                for p in c.triangle.coords
            )
        ]
        assert match, c.note
        matched |= {s.kind for s in match}
        assert c.perimeter == pytest.approx(match[0].perimeter, rel=1e-9)
    assert ContainerKind.ABC_BAR in matched
