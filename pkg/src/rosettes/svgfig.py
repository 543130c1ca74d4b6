"""Deterministic SVG rendering of rosettes and their fronts.

Scenes are lists of layers, each one front sampled as a polyline.  Base
curves draw dashed, derived sets solid, matching the usual figure
convention.  The y axis is flipped on output so the mathematically positive
(counterclockwise) orientation renders counterclockwise on screen.  Output
bytes depend only on the scene: numbers use one fixed format and layers
render in order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._series import support_points
from .cusps import find_cusps
from .fronts import FrontSupport, front_series, sample_front

__all__ = ["SceneLayer", "SceneSpec", "render_svg"]

_PALETTE = ("#1f6fb4", "#c0392b", "#1e8449", "#8e44ad", "#b7791f", "#16808a")


@dataclass(frozen=True)
class SceneLayer:
    """One front to draw; base layers render dashed."""

    label: str
    front: FrontSupport
    is_base: bool = False
    mark_cusps: bool = False


@dataclass(frozen=True)
class SceneSpec:
    layers: tuple[SceneLayer, ...]
    samples: int = 4096
    stroke_width: float = 0.01  # relative to the scene diameter

    def __post_init__(self):
        if not self.layers:
            raise ValueError("a scene needs at least one layer")


def _fmt(x: float) -> str:
    out = f"{x:.6f}"
    return "0.000000" if out == "-0.000000" else out


def render_svg(scene: SceneSpec) -> str:
    """Render a scene to an SVG 1.1 document string.

    The viewBox fits all layers with a 5% margin; point-degenerate layers
    render as a marked point; cusp marking draws a small circle at each
    cusp of the layer's front.
    """
    polylines = []
    markers: list[tuple[float, float, str]] = []
    lo = np.array([np.inf, np.inf])
    hi = np.array([-np.inf, -np.inf])
    for i, layer in enumerate(scene.layers):
        color = _PALETTE[i % len(_PALETTE)]
        samples = sample_front(layer.front, scene.samples)
        pts = samples.points.copy()
        pts[:, 1] = -pts[:, 1]
        lo = np.minimum(lo, pts.min(axis=0))
        hi = np.maximum(hi, pts.max(axis=0))
        if samples.is_point:
            markers.append((float(pts[0, 0]), float(pts[0, 1]), color))
            continue
        polylines.append((pts, color, layer.is_base))
        if layer.mark_cusps:
            report = find_cusps(layer.front)
            if report.locations:
                cpts = support_points(
                    front_series(layer.front), np.asarray(report.locations)
                )
                for x, y in cpts:
                    markers.append((float(x), float(-y), color))

    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-9))
    pad = 0.05 * span
    x0, y0 = lo - pad
    w, h = (hi - lo) + 2 * pad
    stroke = scene.stroke_width * span
    marker_r = 1.6 * stroke

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">'
        ),
    ]
    for pts, color, is_base in polylines:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        dash = f' stroke-dasharray="{_fmt(4 * stroke)},{_fmt(3 * stroke)}"' if is_base else ""
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{_fmt(stroke)}"{dash}/>'
        )
    for x, y, color in markers:
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(marker_r)}" fill="{color}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
