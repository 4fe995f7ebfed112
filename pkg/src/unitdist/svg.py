"""SVG drawings of embeddings: one unit is 100 px, y points up."""

from __future__ import annotations

from .embedding import Embedding
from .graph import Graph

UNIT_PX = 100.0
MARGIN_PX = 30.0
RADIUS_PX = 9.0

_PLANES = {"xy": (0, 1), "xz": (0, 2), "yz": (1, 2)}


class RenderError(ValueError):
    pass


def project(e: Embedding, plane: str | None = None) -> list[tuple[float, float]]:
    """Float 2D coordinates; 3D embeddings need an orthographic plane (xy, xz, yz)."""
    if e.dim == 1:
        return [(float(p[0]), 0.0) for p in e.points]
    if e.dim == 2:
        if plane not in (None, "xy"):
            raise RenderError("a planar embedding can only be drawn in the xy plane")
        return [(float(p[0]), float(p[1])) for p in e.points]
    if e.dim == 3:
        if plane is None:
            raise RenderError("3D embeddings need a projection plane: xy, xz or yz")
        if plane not in _PLANES:
            raise RenderError(f"unknown projection plane {plane!r}")
        a, b = _PLANES[plane]
        return [(float(p[a]), float(p[b])) for p in e.points]
    raise RenderError(f"cannot draw a {e.dim}-dimensional embedding")


def render_svg(g: Graph, e: Embedding, plane: str | None = None, labels: bool = True) -> str:
    if len(e.points) < g.n:
        raise RenderError("embedding does not cover the graph")
    pts = project(e, plane)[:g.n]
    xs = [x for x, _ in pts] or [0.0]
    ys = [y for _, y in pts] or [0.0]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0) * UNIT_PX + 2 * MARGIN_PX
    height = (y1 - min(ys)) * UNIT_PX + 2 * MARGIN_PX

    def px(p):
        # flip y so larger coordinates sit higher on the page
        return MARGIN_PX + (p[0] - x0) * UNIT_PX, MARGIN_PX + (y1 - p[1]) * UNIT_PX

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.3f}" height="{height:.3f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
        '<g stroke="black" stroke-width="1.5">',
    ]
    for u, v in g.edges:
        (ax, ay), (bx, by) = px(pts[u]), px(pts[v])
        out.append(f'<line x1="{ax:.4f}" y1="{ay:.4f}" x2="{bx:.4f}" y2="{by:.4f}"/>')
    out.append("</g>")
    out.append('<g fill="white" stroke="black" font-family="sans-serif" font-size="10" text-anchor="middle">')
    for v, p in enumerate(pts):
        cx, cy = px(p)
        out.append(f'<circle cx="{cx:.4f}" cy="{cy:.4f}" r="{RADIUS_PX:g}"/>')
        if labels:
            out.append(f'<text x="{cx:.4f}" y="{cy + 3.5:.4f}" fill="black" stroke="none">{v + 1}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
