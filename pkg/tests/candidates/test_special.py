import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from isotri.candidates import (
    ContainerKind,
    EmbeddedKind,
    SpecialContainers,
    SpecialEmbedded,
    closed_form_area,
    closed_form_perimeter,
    container_specials,
    embedded_specials,
    leg_and_apex,
)
from isotri.exceptions import NotScalene
from isotri.geometry import (
    Tolerance,
    Triangle,
    contains_triangle,
    is_isosceles,
    normalize,
    similarity,
    triangle_from_sides,
)
from isotri.verification import triangle_from_angles
from tests.utils import (
    acute_triangle,
    by_kind,
    obtuse_triangle,
    placed_triangles,
    scalene_angles,
    triangle_345,
)


@pytest.mark.parametrize(
    "kind,area,perimeter",
    [
        (EmbeddedKind.A_PRIME_BC, 4.5, 6 + 3 * math.sqrt(2)),
        (EmbeddedKind.AB_PRIME_C, 4.8, 8 + 8 / math.sqrt(10)),
        (EmbeddedKind.A1_BC, 3.0, 8.0),
        (EmbeddedKind.AB1_C, 3.0, 9.0),
        (EmbeddedKind.ABC1, 4.6875, 11.25),
        (EmbeddedKind.A_BAR_BC, 4.32, 9.6),
        (ContainerKind.ABC_PRIME, 7.5, 10 + 10 / math.sqrt(10)),
        (ContainerKind.AB_PRIME_C, 8.0, 8 + 4 * math.sqrt(2)),
        (ContainerKind.AB1_C, 7.68, 14.4),
        (ContainerKind.ABC2, 12.0, 16.0),
    ],
)
def test_closed_forms_of_345(kind: object, area: float, perimeter: float) -> None:
    shape = normalize(triangle_345())
    assert closed_form_area(kind, shape) == pytest.approx(area)  # type: ignore
    assert closed_form_perimeter(kind, shape) == pytest.approx(  # type: ignore
        perimeter
    )


def test_embedded_specials_of_345() -> None:
    t = triangle_345()
    found = by_kind(embedded_specials(normalize(t), t))
    assert len(found) == 9
    assert found[EmbeddedKind.AB_PRIME_C].valid
    assert found[EmbeddedKind.AB_PRIME_C].area == pytest.approx(4.8)
    assert found[EmbeddedKind.ABC1].perimeter == pytest.approx(11.25)
    # Reflections through the foot of the altitude from the right angle
    # collapse onto the hypotenuse.
    assert not found[EmbeddedKind.A_BARBAR_BC].valid
    assert not found[EmbeddedKind.AB_BAR_C].valid


def test_right_angle_has_no_bisector_containers_at_c() -> None:
    t = triangle_345()
    found = by_kind(container_specials(normalize(t), t))
    for kind in (ContainerKind.A_BAR_BC, ContainerKind.AB_BAR_C):
        assert not found[kind].exists
        assert found[kind].triangle is None
        assert found[kind].note
    assert found[ContainerKind.ABC_PRIME].area == pytest.approx(7.5)


@pytest.mark.parametrize("t", [acute_triangle(), obtuse_triangle(), triangle_345()])
def test_valid_specials_match_their_relation(t: Triangle) -> None:
    for c in SpecialEmbedded().candidates(t):
        if c.valid:
            assert c.triangle is not None
            assert contains_triangle(t, c.triangle)
    for c in SpecialContainers().candidates(t):
        if c.valid:
            assert c.triangle is not None
            assert contains_triangle(c.triangle, t)


def test_acute_triangle_has_every_third_kind_container() -> None:
    t = acute_triangle()
    found = by_kind(container_specials(normalize(t), t))
    for kind in (ContainerKind.A_BAR_BC, ContainerKind.AB_BAR_C, ContainerKind.ABC_BAR):
        assert found[kind].exists


def test_specials_reject_isosceles_input() -> None:
    t = triangle_from_sides(3, 3, 4)
    with pytest.raises(NotScalene):
        embedded_specials(normalize(t), t)
    with pytest.raises(NotScalene):
        container_specials(normalize(t), t)


@settings(max_examples=50, deadline=None)
@given(placed_triangles())
def test_special_triangles_are_isosceles(t: Triangle) -> None:
    shape = normalize(t)
    for c in embedded_specials(shape, t) + container_specials(shape, t):
        if not c.valid:
            continue
        assert c.triangle is not None
        assert is_isosceles(c.triangle, Tolerance(eps_rel=1e-7))[0]
        leg, apex = leg_and_apex(c.kind, shape)  # type: ignore[arg-type]
        assert c.perimeter == pytest.approx(2 * leg * (1 + math.sin(apex / 2)))


@settings(max_examples=200, deadline=None)
@given(scalene_angles(), st.floats(min_value=0, max_value=2 * math.pi))
def test_coordinates_agree_with_closed_forms(angles: tuple, rotation: float) -> None:
    assume(abs(angles[2] - math.pi / 2) > 1e-4)
    t = similarity(triangle_from_angles(*angles), rotation=rotation)
    shape = normalize(t)
    for c in embedded_specials(shape, t) + container_specials(shape, t):
        if not c.valid:
            continue
        kind = c.kind
        assert isinstance(kind, (EmbeddedKind, ContainerKind))
        assert c.area == pytest.approx(closed_form_area(kind, shape), rel=1e-10)
        assert c.perimeter == pytest.approx(
            closed_form_perimeter(kind, shape), rel=1e-10
        )
