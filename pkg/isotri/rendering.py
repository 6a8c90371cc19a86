"""Standalone SVG 1.1 figures of a triangle and its candidates.

Coordinates stay in the y-up convention inside a group whose transform flips
and scales them; labels and the legend are placed in screen coordinates so
their text is not mirrored.
"""
import html
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import pandas as pd

from isotri.candidates import Candidate
from isotri.geometry import Triangle, Vec, area, perimeter

AttributeValue = Union[str, int, float]

DEFAULT_SCALE = 100.0
MARGIN = 24.0
LEGEND_LINE = 16.0
FONT_SIZE = 12

PHASE_AXES = "x: alpha in (0, 60) deg, y: beta in (alpha, 90 - alpha / 2)"
INPUT_COLOR = "#000000"
PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def _format(value: AttributeValue) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _machine(value: float) -> str:
    return f"{value:.12g}"


def _write_attributes(attributes: Mapping[str, AttributeValue]) -> str:
    return "".join(
        f' {key}="{html.escape(_format(value), quote=True)}"'
        for key, value in attributes.items()
    )


def _write_tag(
    tag_name: str,
    attributes: Mapping[str, AttributeValue],
    content: Optional[str] = None,
) -> str:
    """Write a tag, self-closing when there is no content."""
    if content is None:
        return f"<{tag_name}{_write_attributes(attributes)}/>"
    return f"<{tag_name}{_write_attributes(attributes)}>{content}</{tag_name}>"


def _write_text(x: float, y: float, text: str, **attributes: AttributeValue) -> str:
    return _write_tag(
        "text",
        {
            "x": x,
            "y": y,
            "font-size": FONT_SIZE,
            "font-family": "sans-serif",
            **attributes,
        },
        html.escape(text),
    )


def _write_document(width: float, height: float, body: Sequence[str]) -> str:
    header = _write_attributes(
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "width": width,
            "height": height,
            "viewBox": f"0 0 {_format(width)} {_format(height)}",
        }
    )
    lines = ['<?xml version="1.0" encoding="UTF-8"?>', f"<svg{header}>"]
    lines += [f"  {element}" for element in body]
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


class _Viewport:
    """Maps y-up world coordinates to the y-down SVG canvas."""

    def __init__(self, points: Sequence[Vec], scale: float) -> None:
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.scale = scale
        self.min_x, self.max_y = min(xs), max(ys)
        self.width = (max(xs) - self.min_x) * scale + 2 * MARGIN
        self.height = (self.max_y - min(ys)) * scale + 2 * MARGIN

    @property
    def transform(self) -> str:
        s = self.scale
        tx = MARGIN - s * self.min_x
        ty = MARGIN + s * self.max_y
        return f"matrix({s:.6g} 0 0 {-s:.6g} {tx:.6g} {ty:.6g})"

    def screen(self, p: Vec) -> Tuple[float, float]:
        return (
            MARGIN + self.scale * (p[0] - self.min_x),
            MARGIN + self.scale * (self.max_y - p[1]),
        )


def _polygon(
    t: Triangle, color: str, stroke: float, data: Dict[str, AttributeValue]
) -> str:
    points = " ".join(f"{x:.9g},{y:.9g}" for x, y in t.coords)
    return _write_tag(
        "polygon",
        {
            "points": points,
            "fill": color,
            "fill-opacity": 0.08,
            "stroke": color,
            "stroke-width": stroke,
            **data,
        },
    )


# PUBLIC API


def render_svg(
    t: Triangle,
    candidates: Sequence[Candidate] = (),
    *,
    metric: str = "perimeter",
    scale: float = DEFAULT_SCALE,
    title: Optional[str] = None,
) -> str:
    """Render t and the given candidates as a standalone SVG document.

    Candidates that do not exist are skipped. Every triangle becomes one
    polygon carrying ``data-kind`` and ``data-metric`` attributes; a legend
    below the figure names each of them.

    Args:
        t: the input triangle, drawn in black.
        candidates: candidates to overlay, in legend order.
        metric: "area" or "perimeter", reported in ``data-metric``.
        scale: pixels per unit length.
        title: optional caption above the legend.
    """
    drawn = [c for c in candidates if c.triangle is not None]
    points: List[Vec] = list(t.coords)
    for c in drawn:
        assert c.triangle is not None
        points.extend(c.triangle.coords)
    view = _Viewport(points, scale)
    stroke = 1.5 / scale
    metric_of = area if metric == "area" else perimeter

    shapes = [
        _polygon(
            t,
            INPUT_COLOR,
            stroke,
            {"data-kind": "input", "data-metric": _machine(metric_of(t))},
        )
    ]
    legend = [("input", INPUT_COLOR)]
    for i, c in enumerate(drawn):
        assert c.triangle is not None
        color = PALETTE[i % len(PALETTE)]
        value = c.metric(metric) or 0.0
        shapes.append(
            _polygon(
                c.triangle,
                color,
                stroke,
                {"data-kind": c.kind.value, "data-metric": _machine(value)},
            )
        )
        legend.append((f"{c.kind.value}  {metric} {value:.6g}", color))

    body = [_write_tag("g", {"transform": view.transform}, "".join(shapes))]
    for name, (x, y) in zip("ABC", t.coords):
        sx, sy = view.screen((x, y))
        body.append(_write_text(sx + 4, sy - 4, name, fill=INPUT_COLOR))

    top = view.height
    if title is not None:
        body.append(_write_text(MARGIN, top, title, **{"font-weight": "bold"}))
        top += LEGEND_LINE
    for label, color in legend:
        body.append(_write_text(MARGIN, top, label, fill=color))
        top += LEGEND_LINE
    return _write_document(view.width, top + MARGIN / 2, body)


def render_phase_map(table: pd.DataFrame, *, cell: float = 8.0) -> str:
    """Color the (alpha, beta) sweep grid by winner kind.

    Args:
        table: a sweep table with grid indices ``i``, ``j`` and ``winner`` and
            ``optimum`` columns, as built by ``isotri.reporting.sweep_table``.
        cell: side of one grid cell in pixels.
    """
    columns = int(table["i"].max()) + 1
    rows = int(table["j"].max()) + 1
    kinds = sorted(table["winner"].unique())
    colors = {kind: PALETTE[i % len(PALETTE)] for i, kind in enumerate(kinds)}
    height = rows * cell

    body = []
    for record in table.itertuples(index=False):
        body.append(
            _write_tag(
                "rect",
                {
                    "x": MARGIN + int(record.i) * cell,
                    "y": MARGIN + height - (int(record.j) + 1) * cell,
                    "width": cell,
                    "height": cell,
                    "fill": colors[record.winner],
                    "data-kind": record.winner,
                    "data-metric": _machine(float(record.optimum)),
                },
            )
        )
    top = MARGIN + height + LEGEND_LINE
    body.append(_write_text(MARGIN, top, PHASE_AXES))
    for kind in kinds:
        top += LEGEND_LINE
        body.append(_write_text(MARGIN, top, kind, fill=colors[kind]))
    return _write_document(2 * MARGIN + columns * cell, top + MARGIN, body)
