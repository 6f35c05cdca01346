"""Static SVG figures: a scatter of cell means and fitted-curve polylines.

Figures are built with ElementTree so the output is well-formed XML by
construction; there is no scripting, and provenance is embedded in a
`desc` element.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Sequence

from ..polyfit import DataPoint, PolyModel, predict
from .csvio import RunMetadata

__all__ = ["write_scatter_svg"]

_SVG_NS = "http://www.w3.org/2000/svg"
_CURVE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")
_CURVE_SAMPLES = 200

_WIDTH, _HEIGHT = 640.0, 440.0
_M_LEFT, _M_RIGHT, _M_TOP, _M_BOTTOM = 86.0, 26.0, 42.0, 58.0


def _curve_points(model: PolyModel, x_lo: float, x_hi: float) -> list[tuple[float, float]]:
    step = (x_hi - x_lo) / (_CURVE_SAMPLES - 1)
    xs = [x_lo + i * step for i in range(_CURVE_SAMPLES)]
    return [(x, float(predict(model, x))) for x in xs]


def write_scatter_svg(
    path: str | Path,
    points: Sequence[DataPoint],
    models: Sequence[tuple[str, PolyModel]],
    *,
    metadata: RunMetadata | None = None,
    title: str | None = None,
    include_points: bool = True,
    x_label: str = "p",
    y_label: str = "mean c",
) -> None:
    """Write one figure: optionally the scatter, plus one polyline per model.

    `models` pairs a legend label with each fitted polynomial; curves
    are sampled across the x-range of `points`, which must be nonempty
    (it fixes the axes even when the scatter itself is hidden).
    """
    if not points:
        raise ValueError("points must be nonempty; they fix the axis ranges")

    x_lo = min(pt.x for pt in points)
    x_hi = max(pt.x for pt in points)
    if x_hi == x_lo:
        x_lo -= 0.5
        x_hi += 0.5
    curves = [(label, _curve_points(model, x_lo, x_hi)) for label, model in models]

    ys = [pt.y for pt in points] + [y for _, pts in curves for _, y in pts]
    y_lo, y_hi = min(ys), max(ys)
    if y_hi == y_lo:
        y_lo -= 0.5
        y_hi += 0.5
    y_pad = 0.05 * (y_hi - y_lo)
    y_lo -= y_pad
    y_hi += y_pad
    x_pad = 0.03 * (x_hi - x_lo)
    x_lo -= x_pad
    x_hi += x_pad

    plot_w = _WIDTH - _M_LEFT - _M_RIGHT
    plot_h = _HEIGHT - _M_TOP - _M_BOTTOM

    def sx(x: float) -> float:
        return _M_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return _HEIGHT - _M_BOTTOM - (y - y_lo) / (y_hi - y_lo) * plot_h

    root = ET.Element(
        "svg",
        {
            "xmlns": _SVG_NS,
            "width": f"{_WIDTH:.0f}",
            "height": f"{_HEIGHT:.0f}",
            "viewBox": f"0 0 {_WIDTH:.0f} {_HEIGHT:.0f}",
        },
    )
    if metadata is not None:
        desc = ET.SubElement(root, "desc")
        desc.text = "; ".join(
            line.lstrip("# ") for line in metadata.comment_lines()
        )
    ET.SubElement(
        root,
        "rect",
        {"x": "0", "y": "0", "width": f"{_WIDTH:.0f}", "height": f"{_HEIGHT:.0f}", "fill": "white"},
    )
    if title:
        t = ET.SubElement(
            root,
            "text",
            {
                "x": f"{_WIDTH / 2:.1f}",
                "y": "24",
                "text-anchor": "middle",
                "font-family": "sans-serif",
                "font-size": "15",
            },
        )
        t.text = title

    axis_style = {"stroke": "#333333", "stroke-width": "1"}
    ET.SubElement(
        root,
        "line",
        {
            "x1": f"{_M_LEFT:.1f}",
            "y1": f"{_HEIGHT - _M_BOTTOM:.1f}",
            "x2": f"{_WIDTH - _M_RIGHT:.1f}",
            "y2": f"{_HEIGHT - _M_BOTTOM:.1f}",
            **axis_style,
        },
    )
    ET.SubElement(
        root,
        "line",
        {
            "x1": f"{_M_LEFT:.1f}",
            "y1": f"{_M_TOP:.1f}",
            "x2": f"{_M_LEFT:.1f}",
            "y2": f"{_HEIGHT - _M_BOTTOM:.1f}",
            **axis_style,
        },
    )

    tick_font = {"font-family": "sans-serif", "font-size": "11", "fill": "#333333"}
    for i in range(5):
        xv = x_lo + i * (x_hi - x_lo) / 4
        px = sx(xv)
        ET.SubElement(
            root,
            "line",
            {
                "x1": f"{px:.1f}",
                "y1": f"{_HEIGHT - _M_BOTTOM:.1f}",
                "x2": f"{px:.1f}",
                "y2": f"{_HEIGHT - _M_BOTTOM + 5:.1f}",
                **axis_style,
            },
        )
        label = ET.SubElement(
            root,
            "text",
            {"x": f"{px:.1f}", "y": f"{_HEIGHT - _M_BOTTOM + 18:.1f}", "text-anchor": "middle", **tick_font},
        )
        label.text = f"{xv:.4g}"

        yv = y_lo + i * (y_hi - y_lo) / 4
        py = sy(yv)
        ET.SubElement(
            root,
            "line",
            {
                "x1": f"{_M_LEFT - 5:.1f}",
                "y1": f"{py:.1f}",
                "x2": f"{_M_LEFT:.1f}",
                "y2": f"{py:.1f}",
                **axis_style,
            },
        )
        label = ET.SubElement(
            root,
            "text",
            {"x": f"{_M_LEFT - 8:.1f}", "y": f"{py + 4:.1f}", "text-anchor": "end", **tick_font},
        )
        label.text = f"{yv:.6g}"

    xl = ET.SubElement(
        root,
        "text",
        {
            "x": f"{_M_LEFT + plot_w / 2:.1f}",
            "y": f"{_HEIGHT - 14:.1f}",
            "text-anchor": "middle",
            "font-family": "sans-serif",
            "font-size": "13",
        },
    )
    xl.text = x_label
    yl = ET.SubElement(
        root,
        "text",
        {
            "x": "20",
            "y": f"{_M_TOP + plot_h / 2:.1f}",
            "text-anchor": "middle",
            "font-family": "sans-serif",
            "font-size": "13",
            "transform": f"rotate(-90 20 {_M_TOP + plot_h / 2:.1f})",
        },
    )
    yl.text = y_label

    for idx, (label_text, pts) in enumerate(curves):
        color = _CURVE_COLORS[idx % len(_CURVE_COLORS)]
        ET.SubElement(
            root,
            "polyline",
            {
                "fill": "none",
                "stroke": color,
                "stroke-width": "1.8",
                "points": " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts),
            },
        )
        legend = ET.SubElement(
            root,
            "text",
            {
                "x": f"{_WIDTH - _M_RIGHT - 6:.1f}",
                "y": f"{_M_TOP + 16 + 16 * idx:.1f}",
                "text-anchor": "end",
                "font-family": "sans-serif",
                "font-size": "12",
                "fill": color,
            },
        )
        legend.text = label_text

    if include_points:
        for pt in points:
            ET.SubElement(
                root,
                "circle",
                {"cx": f"{sx(pt.x):.2f}", "cy": f"{sy(pt.y):.2f}", "r": "3.2", "fill": "#111111"},
            )

    text = ET.tostring(root, encoding="unicode")
    Path(path).write_text('<?xml version="1.0" encoding="UTF-8"?>\n' + text + "\n", encoding="utf-8")
