"""Static SVG drawings of planar instances."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .colorings.base import TupleColoring
from .errors import InputError
from .geometry.points import PointSet

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")


def _circumcircle(pts: Sequence[Sequence[int]]) -> tuple[float, float, float]:
    if len(pts) == 2:
        (ax, ay), (bx, by) = pts
        cx, cy = Fraction(ax + bx, 2), Fraction(ay + by, 2)
    else:
        (ax, ay), (bx, by), (cx0, cy0) = pts
        d = 2 * (ax * (by - cy0) + bx * (cy0 - ay) + cx0 * (ay - by))
        if d == 0:
            raise InputError("generator points are collinear")
        a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx0 * cx0 + cy0 * cy0
        cx = Fraction(a2 * (by - cy0) + b2 * (cy0 - ay) + c2 * (ay - by), d)
        cy = Fraction(a2 * (cx0 - bx) + b2 * (ax - cx0) + c2 * (bx - ax), d)
    r2 = (cx - pts[0][0]) ** 2 + (cy - pts[0][1]) ** 2
    return float(cx), float(cy), float(r2) ** 0.5


def emit_svg(
    P: PointSet,
    highlight: Sequence[int] | None = None,
    generator: Sequence[int] | None = None,
    kind: str = "disks2d",
    coloring: TupleColoring | None = None,
    max_pairs: int = 200,
    size: int = 480,
) -> str:
    """SVG text showing the points, an optional highlighted range, and the
    first ``max_pairs`` colored pairs."""
    if P.dim != 2:
        raise InputError("SVG output needs planar points")
    pad = 20
    head = f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">'
    if len(P) == 0:
        return head + "</svg>\n"
    xs = [p[0] for p in P.coords]
    ys = [p[1] for p in P.coords]
    x0, y0 = min(xs), min(ys)
    span = max(max(xs) - x0, max(ys) - y0, 1)
    scale = (size - 2 * pad) / span

    def sx(x: float) -> float:
        return pad + (x - x0) * scale

    def sy(y: float) -> float:
        return size - pad - (y - y0) * scale

    out = [head, f'<rect width="{size}" height="{size}" fill="white"/>']
    if highlight is not None and generator:
        gpts = [P.coords[i] for i in generator]
        if kind in ("disks2d", "balls") and len(gpts) in (2, 3):
            cx, cy, r = _circumcircle(gpts)
            out.append(f'<circle cx="{sx(cx):.3f}" cy="{sy(cy):.3f}" r="{r * scale:.3f}" fill="none" stroke="#d62728"/>')
        elif kind == "halfplanes2d" and len(gpts) == 2:
            (ax, ay), (bx, by) = gpts
            out.append(f'<line x1="{sx(ax):.3f}" y1="{sy(ay):.3f}" x2="{sx(bx):.3f}" y2="{sy(by):.3f}" stroke="#d62728"/>')
    if highlight is not None and kind in ("rects2d", "boxes", "squares2d") and len(highlight):
        hx = [P.coords[i][0] for i in highlight]
        hy = [P.coords[i][1] for i in highlight]
        w, h = max(hx) - min(hx), max(hy) - min(hy)
        if kind == "squares2d":
            w = h = max(w, h)
        out.append(
            f'<rect x="{sx(min(hx)):.3f}" y="{sy(min(hy) + h):.3f}" width="{w * scale:.3f}" '
            f'height="{h * scale:.3f}" fill="none" stroke="#d62728"/>'
        )
    if coloring is not None and coloring.t == 2:
        for (a, b), c in list(coloring.items())[:max_pairs]:
            (ax, ay), (bx, by) = P.coords[a], P.coords[b]
            out.append(
                f'<line x1="{sx(ax):.3f}" y1="{sy(ay):.3f}" x2="{sx(bx):.3f}" y2="{sy(by):.3f}" '
                f'stroke="{PALETTE[c % len(PALETTE)]}" stroke-opacity="0.5"/>'
            )
    hl = set(highlight or ())
    for i, (x, y) in enumerate(P.coords):
        fill = "#d62728" if i in hl else "black"
        # square markers keep <circle> reserved for disk ranges
        out.append(f'<rect class="pt" x="{sx(x) - 2.5:.3f}" y="{sy(y) - 2.5:.3f}" width="5" height="5" fill="{fill}"/>')
    out.append("</svg>\n")
    return "\n".join(out)
