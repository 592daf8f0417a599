"""Deterministic SVG rendering of a solved instance.

The drawing is plain text assembled with fixed 6-decimal formatting, so
the same report always yields byte-identical output. Each offset
candidate gets its own labeled group (ids F1/F2/F3); the chosen one is
drawn last and thicker. Waypoints are numbered circles. The coordinate
group flips the y axis so the picture matches the usual math convention
(y up) while staying valid SVG.
"""

from __future__ import annotations

from .dubins import DubinsPath, sample_path
from .sequence import SolutionReport

_COLORS = {"F1": "#1f77b4", "F2": "#d62728", "F3": "#2ca02c"}


def _fmt(v: float) -> str:
    out = f"{v:.6f}"
    return "0.000000" if out == "-0.000000" else out


def _polyline(path: DubinsPath, step: float) -> str:
    pts = sample_path(path, step)
    return "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts)


def solution_svg(report: SolutionReport, step: float | None = None) -> str:
    inst = report.instance
    rho = inst.rho
    if step is None:
        step = rho / 32.0

    xs: list[float] = []
    ys: list[float] = []
    polylines: dict[str, str] = {}
    for cand in report.candidates:
        samples = sample_path(cand.path, step)
        xs.extend(s[0] for s in samples)
        ys.extend(s[1] for s in samples)
        polylines[cand.label] = _polyline(cand.path, step)
    xs.extend(p[0] for p in inst.points)
    ys.extend(p[1] for p in inst.points)

    margin = 0.06 * max(max(xs) - min(xs), max(ys) - min(ys), rho)
    x0, y0 = min(xs) - margin, min(ys) - margin
    w, h = (max(xs) - min(xs)) + 2 * margin, (max(ys) - min(ys)) + 2 * margin

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}" '
        f'width="800" height="{_fmt(800 * h / w)}">',
        f'<g transform="matrix(1 0 0 -1 0 {_fmt(2 * y0 + h)})">',
        f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" width="{_fmt(w)}" height="{_fmt(h)}" fill="#ffffff"/>',
    ]
    ordering = [c for c in report.candidates if c.label != report.chosen.label]
    ordering.append(report.chosen)
    for cand in ordering:
        chosen = cand.label == report.chosen.label
        width = rho / (20.0 if chosen else 60.0)
        opacity = "1.0" if chosen else "0.45"
        lines.append(
            f'<g id="{cand.label}" fill="none" stroke="{_COLORS[cand.label]}" '
            f'stroke-width="{_fmt(width)}" stroke-opacity="{opacity}">'
        )
        lines.append(f'<path d="{polylines[cand.label]}"/>')
        lines.append("</g>")
    lines.append('<g id="waypoints" fill="#000000" stroke="none">')
    for px, py in inst.points:
        lines.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(rho / 12.0)}"/>')
    lines.append("</g>")
    lines.append("</g>")  # close the flipped frame; labels go unflipped below
    lines.append(f'<g id="labels" font-family="monospace" font-size="{_fmt(rho / 3.0)}" fill="#000000">')
    for i, (px, py) in enumerate(inst.points):
        label_y = (2 * y0 + h) - py - rho / 8.0
        lines.append(f'<text x="{_fmt(px + rho / 8.0)}" y="{_fmt(label_y)}">p{i + 1}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(report: SolutionReport, path, step: float | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(solution_svg(report, step))
