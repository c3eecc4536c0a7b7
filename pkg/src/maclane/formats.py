"""Text formats: edge lists, bases, embeddings, face and certificate reports.

Edge list::

    graph <num_vertices> <num_edges>
    <edge_id> <u> <v>
    ...

Vertices are ``0 .. num_vertices-1``. Basis: one element per line as
space-separated edge ids; a blank line after the first element ends it.
Embedding: ``<v>: <edge>.<end> ...`` per vertex, each rotation starting at
its least half-edge. ``#`` starts a comment everywhere.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .embedding import Embedding, Face
from .errors import ParseError
from .graph import EdgeSet, Graph, HalfEdge


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _ints(tokens: Iterable[str], lineno: int) -> list[int]:
    try:
        out = [int(t) for t in tokens]
    except ValueError:
        raise ParseError("expected integers", lineno) from None
    if any(x < 0 for x in out):
        raise ParseError("ids must be non-negative", lineno)
    return out


# ---------------------------------------------------------------------------
# graphs


def format_graph(g: Graph) -> str:
    n = g.num_vertices
    if g.vertices != frozenset(range(n)):
        raise ValueError("edge-list format needs vertices 0..n-1")
    lines = [f"graph {n} {g.num_edges}"]
    lines += [f"{e} {u} {v}" for e, (u, v) in sorted(g.edges.items())]
    return "\n".join(lines) + "\n"


def parse_graphs(text: str) -> list[Graph]:
    """Parse one or more concatenated edge-list blocks."""
    graphs = []
    header = None
    edges: dict[int, tuple[int, int]] = {}

    def finish() -> None:
        if header is None:
            return
        n, m, lineno = header
        if len(edges) != m:
            raise ParseError(f"header declares {m} edges, found {len(edges)}", lineno)
        graphs.append(Graph(range(n), edges))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "graph":
            finish()
            if len(tokens) != 3:
                raise ParseError("header must be 'graph <num_vertices> <num_edges>'", lineno)
            n, m = _ints(tokens[1:], lineno)
            header, edges = (n, m, lineno), {}
            continue
        if header is None:
            raise ParseError("missing 'graph' header", lineno)
        if len(tokens) != 3:
            raise ParseError("edge line must be '<edge_id> <u> <v>'", lineno)
        e, u, v = _ints(tokens, lineno)
        if e in edges:
            raise ParseError(f"duplicate edge id {e}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if u >= header[0] or v >= header[0]:
            raise ParseError("vertex id out of range", lineno)
        edges[e] = (u, v)
    finish()
    if not graphs:
        raise ParseError("no graph found")
    return graphs


def parse_graph(text: str) -> Graph:
    graphs = parse_graphs(text)
    if len(graphs) != 1:
        raise ParseError(f"expected one graph, found {len(graphs)}")
    return graphs[0]


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="ascii"))


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g), encoding="ascii")


# ---------------------------------------------------------------------------
# bases


def format_basis(b: Sequence[Iterable[int]]) -> str:
    return "".join(" ".join(map(str, sorted(x))) + "\n" for x in b)


def parse_basis(text: str) -> list[EdgeSet]:
    out: list[EdgeSet] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.lstrip().startswith("#"):
            continue
        line = _strip(raw)
        if not line:
            if out:
                break
            continue
        ids = _ints(line.split(), lineno)
        if len(set(ids)) != len(ids):
            raise ParseError("repeated edge id within an element", lineno)
        out.append(frozenset(ids))
    return out


def read_basis(path: str | Path) -> list[EdgeSet]:
    return parse_basis(Path(path).read_text(encoding="ascii"))


def write_basis(b: Sequence[Iterable[int]], path: str | Path) -> None:
    Path(path).write_text(format_basis(b), encoding="ascii")


# ---------------------------------------------------------------------------
# embeddings


def format_embedding(emb: Embedding) -> str:
    lines = []
    for v, cyc in sorted(emb.rotation.items()):
        lines.append(f"{v}: " + " ".join(str(h) for h in cyc) if cyc else f"{v}:")
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> Embedding:
    """Parse a rotation system; the graph is recovered from the half-edges."""
    rotation: dict[int, list[HalfEdge]] = {}
    ends: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError("expected '<vertex>: <half-edges>'", lineno)
        (v,) = _ints([head], lineno)
        if v in rotation:
            raise ParseError(f"vertex {v} listed twice", lineno)
        cyc = []
        for tok in rest.split():
            e_s, dot, end_s = tok.partition(".")
            if not dot:
                raise ParseError(f"bad half-edge {tok!r}", lineno)
            e, end = _ints([e_s, end_s], lineno)
            if end not in (0, 1):
                raise ParseError(f"half-edge end must be 0 or 1 in {tok!r}", lineno)
            if (e, end) in ends:
                raise ParseError(f"half-edge {tok} appears twice", lineno)
            ends[(e, end)] = v
            cyc.append(HalfEdge(e, end))
        rotation[v] = cyc
    edges = {}
    for (e, end), v in ends.items():
        if (e, 1 - end) not in ends:
            raise ParseError(f"edge {e} is missing its other half-edge")
        if end == 0:
            edges[e] = (v, ends[(e, 1)])
    try:
        return Embedding(Graph(rotation, edges), rotation)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_embedding(path: str | Path) -> Embedding:
    return parse_embedding(Path(path).read_text(encoding="ascii"))


def write_embedding(emb: Embedding, path: str | Path) -> None:
    Path(path).write_text(format_embedding(emb), encoding="ascii")


# ---------------------------------------------------------------------------
# reports


def format_face_report(faces: Iterable[Face | EdgeSet]) -> str:
    lines = []
    for f in faces:
        circuit = f.circuit if isinstance(f, Face) else f
        lines.append(" ".join(map(str, sorted(circuit))))
    return "\n".join(lines) + "\n" if lines else ""


def format_certificate(planar: bool, residual: EdgeSet | None = None, faces: Iterable[Face] = ()) -> str:
    out = [f"planar: {'yes' if planar else 'no'}"]
    if residual is not None:
        out.append("residual: " + " ".join(map(str, sorted(residual))))
    body = format_face_report(faces)
    if body:
        out.append("faces:")
        out.append(body.rstrip("\n"))
    return "\n".join(out) + "\n"
