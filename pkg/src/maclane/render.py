"""Straight-line drawings of embeddings via Tutte's barycentric layout."""

from __future__ import annotations

import itertools
import math

import numpy as np

from .embedding import Embedding, Face
from .graph import Graph, is_connected

ITERATIONS = 1000
TOLERANCE = 1e-9


def is_three_connected(g: Graph) -> bool:
    """Simple, at least 4 vertices, and connected after deleting any two vertices."""
    if g.num_vertices < 4:
        return False
    if len({frozenset(uv) for uv in g.edges.values()}) != g.num_edges:
        return False
    for drop in itertools.combinations(sorted(g.vertices), 2):
        keep = g.vertices - set(drop)
        sub = Graph(keep, {e: uv for e, uv in g.edges.items() if uv[0] in keep and uv[1] in keep})
        if not is_connected(sub):
            return False
    return True


def tutte_layout(emb: Embedding, outer: Face, iterations: int = ITERATIONS, tol: float = TOLERANCE) -> dict[int, tuple[float, float]]:
    """Pin ``outer``'s vertices on a regular polygon, relax the rest to neighbour averages.

    Jacobi sweeps stop after ``iterations`` or once no vertex moves more than ``tol``.
    """
    g = emb.graph
    order = sorted(g.vertices)
    pos = {v: k for k, v in enumerate(order)}
    xy = np.zeros((len(order), 2))
    boundary = [g.tail(h) for h in outer.walk]
    fixed = np.zeros(len(order), dtype=bool)
    for k, v in enumerate(boundary):
        angle = 2 * math.pi * k / len(boundary)
        xy[pos[v]] = (math.cos(angle), math.sin(angle))
        fixed[pos[v]] = True
    adj = np.zeros((len(order), len(order)))
    for u, v in g.edges.values():
        adj[pos[u], pos[v]] += 1
        adj[pos[v], pos[u]] += 1
    deg = adj.sum(axis=1)
    free = ~fixed & (deg > 0)
    for _ in range(iterations):
        target = adj @ xy / np.where(deg > 0, deg, 1)[:, None]
        moved = np.abs(target[free] - xy[free]).max(initial=0.0)
        xy[free] = target[free]
        if moved < tol:
            break
    return {v: (float(xy[pos[v], 0]), float(xy[pos[v], 1])) for v in order}


def render_svg(emb: Embedding, outer: Face | None = None, size: int = 480) -> str:
    """SVG drawing; the outer face defaults to the longest face.

    Straight-line drawings are only guaranteed crossing-free for 3-connected
    graphs, so other inputs get a best-effort label.
    """
    faces = emb.faces()
    if outer is None:
        outer = max(faces, key=len)
    layout = tutte_layout(emb, outer)
    g = emb.graph
    margin = 30
    scale = (size - 2 * margin) / 2

    def px(v: int) -> tuple[str, str]:
        x, y = layout[v]
        return f"{margin + (x + 1) * scale:.3f}", f"{margin + (1 - y) * scale:.3f}"

    exact = is_three_connected(g)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<!-- {'3-connected: straight-line planar drawing' if exact else 'best-effort drawing: graph is not 3-connected'} -->",
        '<g stroke="#333" stroke-width="1.5">',
    ]
    for e, (u, v) in sorted(g.edges.items()):
        (x1, y1), (x2, y2) = px(u), px(v)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"><title>edge {e}</title></line>')
    out.append("</g>")
    out.append('<g fill="#fff" stroke="#333" font-size="10" text-anchor="middle">')
    for v in sorted(g.vertices):
        x, y = px(v)
        out.append(f'<circle cx="{x}" cy="{y}" r="7"/>')
        out.append(f'<text x="{x}" y="{float(y) + 3.5:.3f}" stroke="none" fill="#000">{v}</text>')
    out.append("</g>")
    if not exact:
        out.append(f'<text x="{margin}" y="{size - 8}" font-size="11" fill="#a00">best-effort layout (not 3-connected)</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
