"""Polygon emission: exact-rational TSV, deterministic SVG, matplotlib PNG."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .polygons import LowerPolygon
from .report import format_rational

_COLORS = {"hp": "#1f77b4", "np": "#d62728"}
_FALLBACK_COLOR = "#2ca02c"

_SCALE = 80  # pixels per lattice unit
_MARGIN = 40


def polygon_tsv(polygons: Sequence[tuple[str, LowerPolygon]]) -> str:
    """One vertex per line as "x<TAB>y" with exact rationals.

    A single polygon is emitted bare; several are separated by "# <name>"
    header lines so the blocks stay parseable.
    """
    blocks = []
    for name, poly in polygons:
        lines = [f"{format_rational(x)}\t{format_rational(y)}" for x, y in poly.vertices]
        body = "\n".join(lines) + "\n"
        blocks.append(body if len(polygons) == 1 else f"# {name}\n{body}")
    return "".join(blocks)


def _fmt_px(value: float) -> str:
    return f"{value:.2f}"


def polygon_svg(polygons: Sequence[tuple[str, LowerPolygon]]) -> str:
    """Hand-built SVG of the polygons over an integer grid.

    No library involvement and no timestamps, so the output bytes depend
    only on the input polygons.
    """
    xmax = max(1, max(int(math.ceil(poly.end[0])) for _, poly in polygons))
    ymax = max(max(y for _, y in poly.vertices) for _, poly in polygons)
    ymax_i = max(1, int(math.ceil(ymax)))
    width = 2 * _MARGIN + xmax * _SCALE
    height = 2 * _MARGIN + ymax_i * _SCALE

    def px(x) -> float:
        return _MARGIN + float(x) * _SCALE

    def py(y) -> float:
        return height - _MARGIN - float(y) * _SCALE

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}"'
        f' viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for gx in range(xmax + 1):
        parts.append(
            f'<line x1="{_fmt_px(px(gx))}" y1="{_fmt_px(py(0))}"'
            f' x2="{_fmt_px(px(gx))}" y2="{_fmt_px(py(ymax_i))}"'
            ' stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt_px(px(gx))}" y="{_fmt_px(py(0) + 16)}" font-size="11"'
            f' text-anchor="middle" fill="#444444">{gx}</text>'
        )
    for gy in range(ymax_i + 1):
        parts.append(
            f'<line x1="{_fmt_px(px(0))}" y1="{_fmt_px(py(gy))}"'
            f' x2="{_fmt_px(px(xmax))}" y2="{_fmt_px(py(gy))}"'
            ' stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt_px(px(0) - 8)}" y="{_fmt_px(py(gy))}" font-size="11"'
            f' text-anchor="end" fill="#444444">{gy}</text>'
        )
    for idx, (name, poly) in enumerate(polygons):
        color = _COLORS.get(name, _FALLBACK_COLOR)
        points = " ".join(f"{_fmt_px(px(x))},{_fmt_px(py(y))}" for x, y in poly.vertices)
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        for x, y in poly.vertices:
            parts.append(
                f'<circle cx="{_fmt_px(px(x))}" cy="{_fmt_px(py(y))}" r="3" fill="{color}"/>'
            )
        parts.append(
            f'<text x="{_fmt_px(width - _MARGIN)}" y="{_fmt_px(_MARGIN / 2 + 14 * idx)}"'
            f' font-size="12" text-anchor="end" fill="{color}">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def polygon_png(polygons: Sequence[tuple[str, LowerPolygon]], path: str) -> None:
    """Render the polygons with matplotlib (Agg) to a PNG file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4.5))
    for name, poly in polygons:
        xs = [float(x) for x, _ in poly.vertices]
        ys = [float(y) for _, y in poly.vertices]
        color = _COLORS.get(name, _FALLBACK_COLOR)
        ax.plot(xs, ys, marker="o", color=color, label=name)
    ax.set_xlabel("degree")
    ax.set_ylabel("valuation")
    ax.grid(True, linestyle=":", linewidth=0.6)
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def scan_png(rows: Sequence[dict], path: str) -> None:
    """Bar chart of the polygon gap per prime, stable primes highlighted."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ps = [row["p"] for row in rows]
    gaps = [float(Fraction(row["max_gap"])) for row in rows]
    colors = ["#2ca02c" if row["stable"] else "#d62728" for row in rows]

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar([str(p) for p in ps], gaps, color=colors)
    ax.set_xlabel("prime")
    ax.set_ylabel("max gap between polygons")
    ax.grid(True, axis="y", linestyle=":", linewidth=0.6)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
