import xml.etree.ElementTree as ET
from typing import List

from isotri.candidates import Candidate, ContainerKind
from isotri.problems import Problem
from isotri.rendering import render_phase_map, render_svg
from isotri.reporting import sweep_table
from isotri.solvers import solve
from tests.utils import triangle_345

SVG = "{http://www.w3.org/2000/svg}"


def _polygons(svg: str) -> List[ET.Element]:
    return list(ET.fromstring(svg.split("\n", 1)[1]).iter(f"{SVG}polygon"))


def test_render_input_only() -> None:
    svg = render_svg(triangle_345())
    assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    root = ET.fromstring(svg.split("\n", 1)[1])
    assert root.get("version") == "1.1"
    polygons = _polygons(svg)
    assert len(polygons) == 1
    assert polygons[0].get("data-kind") == "input"
    assert float(polygons[0].get("data-metric", "nan")) == 12.0
    labels = [text.text for text in root.iter(f"{SVG}text")]
    assert labels[:3] == ["A", "B", "C"]


def test_render_candidates_with_legend() -> None:
    result = solve(triangle_345(), Problem.MIN_AREA_CONTAINER)
    missing = Candidate(kind=ContainerKind.ABC_BAR, exists=False)
    svg = render_svg(
        triangle_345(),
        [*result.winners, missing],
        metric="area",
        scale=50,
        title="min area",
    )
    polygons = _polygons(svg)
    assert [p.get("data-kind") for p in polygons] == ["input", "cont:ABC'"]
    assert float(polygons[1].get("data-metric", "nan")) == 7.5
    root = ET.fromstring(svg.split("\n", 1)[1])
    texts = [text.text or "" for text in root.iter(f"{SVG}text")]
    assert "min area" in texts
    assert any(t.startswith("cont:ABC'  area 7.5") for t in texts)


def test_flip_transform_keeps_y_up() -> None:
    svg = render_svg(triangle_345(), scale=100)
    root = ET.fromstring(svg.split("\n", 1)[1])
    group = next(root.iter(f"{SVG}g"))
    assert group.get("transform", "").startswith("matrix(100 0 0 -100 ")


def test_render_phase_map() -> None:
    table = sweep_table(3)
    svg = render_phase_map(table, cell=10)
    root = ET.fromstring(svg.split("\n", 1)[1])
    cells = list(root.iter(f"{SVG}rect"))
    assert len(cells) == 9
    assert {c.get("data-kind") for c in cells} == set(table["winner"])
