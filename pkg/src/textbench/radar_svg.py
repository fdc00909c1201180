"""Standalone SVG 1.1 radar charts for easiness series.

Fifteen equally spaced axes, one closed polygon per series, a legend naming
each series. Output is deterministic for identical input (fixed float
formatting, no timestamps).
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

# fixed 12-color palette, cycled by series/chain index for reproducible output
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
)

AXIS_LABELS = {
    "word_count": "word count",
    "content_word_frequency": "word frequency",
    "grammar_frequency": "grammar frequency",
    "specificity": "specificity",
    "ambiguity": "ambiguity",
    "concept_density": "concept density",
    "topic_density": "topic density",
    "pct_nouns": "% nouns",
    "pct_verbs": "% verbs",
    "pct_adjectives": "% adjectives",
    "pct_adverbs": "% adverbs",
    "chain_count": "chains",
    "chain_length": "chain length",
    "chain_span": "chain span",
    "cross_chains": "cross chains",
}


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_radar_svg(series_list, axis_labels=None, size: int = 560) -> str:
    """Render one polygon per series on a shared radar grid."""
    if not series_list:
        raise ValueError("at least one series is required")
    axes = series_list[0].axes
    n_axes = len(axes)
    for s in series_list:
        if s.axes != axes:
            raise ValueError("all series must share the same axis order")
    labels = [axis_labels.get(a, a) if axis_labels else AXIS_LABELS.get(a, a) for a in axes]

    cx = cy = size / 2.0
    radius = size / 2.0 - 70
    legend_h = 22 * len(series_list) + 10
    height = size + legend_h

    def point(axis_idx: int, value: float) -> tuple[float, float]:
        angle = -math.pi / 2 + 2 * math.pi * axis_idx / n_axes
        return (cx + radius * value * math.cos(angle),
                cy + radius * value * math.sin(angle))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{height}" viewBox="0 0 {size} {height}">',
        f'<rect width="{size}" height="{height}" fill="white"/>',
    ]
    # rings
    for frac in (0.25, 0.5, 0.75, 1.0):
        ring = " ".join(
            f"{_fmt(x)},{_fmt(y)}" for x, y in (point(i, frac) for i in range(n_axes))
        )
        out.append(f'<polygon points="{ring}" fill="none" stroke="#dddddd" stroke-width="1"/>')
    # spokes and labels
    for i, label in enumerate(labels):
        x, y = point(i, 1.0)
        out.append(
            f'<line x1="{_fmt(cx)}" y1="{_fmt(cy)}" x2="{_fmt(x)}" y2="{_fmt(y)}" '
            f'stroke="#bbbbbb" stroke-width="1"/>'
        )
        lx, ly = point(i, 1.12)
        anchor = "middle"
        if lx > cx + 4:
            anchor = "start"
        elif lx < cx - 4:
            anchor = "end"
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="11" '
            f'font-family="sans-serif" text-anchor="{anchor}">{escape(label)}</text>'
        )
    # series polygons
    for idx, series in enumerate(series_list):
        color = PALETTE[idx % len(PALETTE)]
        pts = " ".join(
            f"{_fmt(x)},{_fmt(y)}"
            for x, y in (point(i, max(0.0, min(1.0, v))) for i, v in enumerate(series.values))
        )
        out.append(
            f'<polygon points="{pts}" fill="{color}" fill-opacity="0.15" '
            f'stroke="{color}" stroke-width="2"/>'
        )
    # legend
    for idx, series in enumerate(series_list):
        color = PALETTE[idx % len(PALETTE)]
        y = size + 14 + idx * 22
        out.append(f'<rect x="20" y="{y}" width="14" height="14" fill="{color}"/>')
        out.append(
            f'<text x="40" y="{y + 12}" font-size="13" '
            f'font-family="sans-serif">{escape(series.name)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
