"""Warmth/competence scatter plots: a static SVG and an interactive plotly figure."""

from __future__ import annotations

from pathlib import Path

import matplotlib
from matplotlib.figure import Figure
import plotly.graph_objects as go

from core.polar import Quadrant

SVG_SIZE_PX = 800
_SVG_RC = {
    "svg.hashsalt": "scm-scatter",
    "svg.fonttype": "none",
    "font.family": "DejaVu Sans",
}

# (quadrant, x sign, y sign); x = warmth, y = competence
QUADRANT_CORNERS = (
    (Quadrant.HC_HW, 1, 1),
    (Quadrant.HC_LW, -1, 1),
    (Quadrant.LC_LW, -1, -1),
    (Quadrant.LC_HW, 1, -1),
)

QUADRANT_COLORS = {
    Quadrant.HC_HW: "#16a34a",
    Quadrant.LC_HW: "#2563eb",
    Quadrant.LC_LW: "#dc2626",
    Quadrant.HC_LW: "#d97706",
}


def _limit(points) -> float:
    extent = max((max(abs(w), abs(c)) for _, w, c in points), default=0.0)
    return round(extent * 1.25, 6) or 1.0


def _quadrant_of(w: float, c: float) -> Quadrant:
    return Quadrant.from_signs(w > 0, c > 0)


def scatter_svg(points: list[tuple[str, float, float]], path: str | Path, title: str = "") -> Path:
    """Write a labeled scatter of (label, warmth, competence) points.

    The canvas is 800x800 with the axes crossing at the origin. The output
    only changes with the data and the matplotlib version.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    points = sorted(points, key=lambda p: p[0])
    lim = _limit(points)

    with matplotlib.rc_context(_SVG_RC):
        fig = Figure(figsize=(SVG_SIZE_PX / 72, SVG_SIZE_PX / 72), dpi=72)
        ax = fig.add_subplot(1, 1, 1)
        ax.set_xlim(-lim, lim)
        ax.set_ylim(-lim, lim)
        for side in ("left", "bottom"):
            ax.spines[side].set_position(("data", 0))
        for side in ("right", "top"):
            ax.spines[side].set_visible(False)

        for quadrant, sx, sy in QUADRANT_CORNERS:
            ax.text(
                sx * lim * 0.92, sy * lim * 0.92, quadrant.value,
                ha="right" if sx > 0 else "left",
                va="top" if sy > 0 else "bottom",
                fontsize=14, color="#64748b", fontweight="bold",
            )
        for label, w, c in points:
            color = QUADRANT_COLORS[_quadrant_of(w, c)]
            ax.scatter([w], [c], s=36, color=color, zorder=3)
            ax.annotate(label, xy=(w, c), xytext=(4, 4), textcoords="offset points", fontsize=10)

        ax.set_xlabel("warmth", loc="right")
        ax.set_ylabel("competence", loc="top")
        if title:
            ax.set_title(title)
        fig.savefig(path, format="svg", metadata={"Date": None})
    return path


def scatter_figure(points: list[tuple[str, float, float]], title: str = "") -> go.Figure:
    points = sorted(points, key=lambda p: p[0])
    lim = _limit(points)
    fig = go.Figure()
    for quadrant in Quadrant:
        members = [p for p in points if _quadrant_of(p[1], p[2]) is quadrant]
        if not members:
            continue
        fig.add_trace(
            go.Scatter(
                x=[p[1] for p in members],
                y=[p[2] for p in members],
                mode="markers+text",
                text=[p[0] for p in members],
                textposition="top center",
                name=quadrant.value,
                marker=dict(size=10, color=QUADRANT_COLORS[quadrant], line=dict(width=1, color="#ffffff")),
                hovertemplate="%{text}<br>warmth %{x:.3f}<br>competence %{y:.3f}<extra></extra>",
            )
        )
    for quadrant, sx, sy in QUADRANT_CORNERS:
        fig.add_annotation(
            x=sx * lim * 0.9, y=sy * lim * 0.9, text=quadrant.value,
            showarrow=False, font=dict(size=14, color="#64748b"),
        )
    fig.add_hline(y=0, line_color="#94a3b8")
    fig.add_vline(x=0, line_color="#94a3b8")
    fig.update_layout(
        title=title or None,
        margin=dict(l=20, r=20, t=40 if title else 24, b=20),
        paper_bgcolor="rgba(0,0,0,0)",
        plot_bgcolor="#ffffff",
        font=dict(family="Inter, -apple-system, sans-serif", color="#0f172a"),
        xaxis=dict(title="Warmth", range=[-lim, lim], gridcolor="#e2e8f0", zeroline=False),
        yaxis=dict(title="Competence", range=[-lim, lim], gridcolor="#e2e8f0", zeroline=False),
        hovermode="closest",
        legend=dict(orientation="h", yanchor="bottom", y=1.02, x=0, title=""),
        height=560,
    )
    return fig
