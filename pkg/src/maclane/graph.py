"""Undirected loopless multigraphs, threads, and connectivity.

Vertices and edges carry stable non-negative integer ids. Every edge has two
incidences, addressed as :class:`HalfEdge` ``(edge, end)`` where ``end``
indexes the edge's endpoint pair, so parallel edges stay distinguishable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import InternalContradiction, IsACycle, NotAThread, NotTwoConnected, UnknownEdgeId

EdgeSet = frozenset  # frozenset[int] of edge ids; a GF(2) vector over E(G)


class HalfEdge(NamedTuple):
    """Incidence of ``edge`` at its ``end``-th endpoint.

    Read as a dart, it is the traversal of ``edge`` leaving that endpoint.
    """

    edge: int
    end: int

    def twin(self) -> "HalfEdge":
        return HalfEdge(self.edge, 1 - self.end)

    def __str__(self) -> str:
        return f"{self.edge}.{self.end}"


class Graph:
    """Immutable multigraph: ``vertices`` plus ``edges: id -> (u, v)``."""

    __slots__ = ("_vertices", "_edges", "_inc", "_hash")

    def __init__(self, vertices: Iterable[int], edges: Mapping[int, tuple[int, int]]):
        verts = frozenset(vertices)
        es: dict[int, tuple[int, int]] = {}
        for e in sorted(edges):
            u, v = edges[e]
            if e < 0:
                raise ValueError(f"edge id {e} is negative")
            if u == v:
                raise ValueError(f"edge {e} is a loop at vertex {u}")
            if u not in verts or v not in verts:
                raise ValueError(f"edge {e} has an endpoint outside the vertex set")
            es[e] = (u, v)
        inc: dict[int, list[HalfEdge]] = {v: [] for v in sorted(verts)}
        for e, (u, v) in es.items():
            inc[u].append(HalfEdge(e, 0))
            inc[v].append(HalfEdge(e, 1))
        self._vertices = verts
        self._edges = MappingProxyType(es)
        self._inc = {v: tuple(hs) for v, hs in inc.items()}
        self._hash = None

    @classmethod
    def from_edge_list(cls, pairs: Iterable[tuple[int, int]], vertices: Iterable[int] | None = None) -> "Graph":
        """Build a graph numbering edges 0, 1, ... in the order given."""
        edges = {i: (u, v) for i, (u, v) in enumerate(pairs)}
        if vertices is None:
            vertices = {x for uv in edges.values() for x in uv}
        return cls(vertices, edges)

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def edges(self) -> Mapping[int, tuple[int, int]]:
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    def edge_ids(self) -> list[int]:
        return list(self._edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._edges[e]

    def tail(self, h: HalfEdge) -> int:
        return self._edges[h.edge][h.end]

    def head(self, h: HalfEdge) -> int:
        return self._edges[h.edge][1 - h.end]

    def other(self, e: int, v: int) -> int:
        a, b = self._edges[e]
        return b if a == v else a

    def half_edge_at(self, e: int, v: int) -> HalfEdge:
        """The incidence of edge ``e`` at vertex ``v``."""
        return HalfEdge(e, 0 if self._edges[e][0] == v else 1)

    def incidence(self, v: int) -> tuple[HalfEdge, ...]:
        return self._inc[v]

    def degree(self, v: int) -> int:
        return len(self._inc[v])

    def half_edges(self) -> list[HalfEdge]:
        return [HalfEdge(e, end) for e in self._edges for end in (0, 1)]

    def edge_subgraph(self, edge_ids: Iterable[int], vertices: Iterable[int] | None = None) -> "Graph":
        ids = set(edge_ids)
        unknown = ids.difference(self._edges)
        if unknown:
            raise UnknownEdgeId(unknown)
        sub = {e: self._edges[e] for e in ids}
        if vertices is None:
            vertices = {x for uv in sub.values() for x in uv}
        return Graph(vertices, sub)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and dict(self._edges) == dict(other._edges)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, frozenset(self._edges.items())))
        return self._hash

    def __repr__(self) -> str:
        es = ", ".join(f"{e}:{u}-{v}" for e, (u, v) in self._edges.items())
        return f"Graph(V={sorted(self._vertices)}, E={{{es}}})"


@dataclass(frozen=True)
class Thread:
    """A path given by its vertex and edge sequences.

    Used both for threads of a host graph and for paths to be inserted into
    an embedding.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def inner_vertices(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def edge_set(self) -> EdgeSet:
        return frozenset(self.edges)

    def reversed(self) -> "Thread":
        return Thread(self.vertices[::-1], self.edges[::-1])


# ---------------------------------------------------------------------------
# connectivity


def components(g: Graph) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for root in sorted(g.vertices):
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for h in g.incidence(v):
                w = g.head(h)
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def _block_edge_sets(g: Graph) -> list[list[int]]:
    """Edge sets of the blocks, via iterative Hopcroft-Tarjan on edge ids."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[list[int]] = []
    clock = 0
    for root in sorted(g.vertices):
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack: list[tuple[int, int, Iterator[HalfEdge]]] = [(root, -1, iter(g.incidence(root)))]
        edge_stack: list[int] = []
        while stack:
            v, parent_edge, it = stack[-1]
            descended = False
            for h in it:
                if h.edge == parent_edge:
                    continue
                w = g.head(h)
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append(h.edge)
                    stack.append((w, h.edge, iter(g.incidence(w))))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    edge_stack.append(h.edge)
            if descended:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == parent_edge:
                            break
                    blocks.append(sorted(block))
    blocks.sort(key=lambda b: b[0])
    return blocks


def block_decomposition(g: Graph) -> list[Graph]:
    """Blocks of ``g`` (2-connected pieces and bridges), ordered by least edge id."""
    return [g.edge_subgraph(b) for b in _block_edge_sets(g)]


def is_two_connected(g: Graph) -> bool:
    """Connected, at least two vertices, min degree 2, and no cut vertex.

    A cycle counts, including the 2-cycle formed by two parallel edges.
    """
    if g.num_vertices < 2:
        return False
    if any(g.degree(v) < 2 for v in g.vertices):
        return False
    if not is_connected(g):
        return False
    return len(_block_edge_sets(g)) == 1


def is_cycle(g: Graph) -> bool:
    if g.num_vertices == 0:
        return False
    return all(g.degree(v) == 2 for v in g.vertices) and is_connected(g)


def cycle_traversal(g: Graph) -> Thread:
    """Closed walk around a cycle graph, as a Thread whose last vertex repeats the first.

    Starts at end 0 of the least edge id and leaves along that edge.
    """
    if not is_cycle(g):
        raise ValueError("graph is not a cycle")
    e0 = min(g.edges)
    start, cur = g.endpoints(e0)
    verts, es = [start, cur], [e0]
    e = e0
    while cur != start:
        e = next(h.edge for h in g.incidence(cur) if h.edge != e)
        cur = g.other(e, cur)
        verts.append(cur)
        es.append(e)
    return Thread(tuple(verts), tuple(es))


# ---------------------------------------------------------------------------
# threads


def _require_reducible_class(g: Graph) -> None:
    if not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    if is_cycle(g):
        raise IsACycle("graph is a cycle; it has no threads")


def threads(g: Graph) -> list[Thread]:
    """All maximal threads, ordered by least edge id.

    Each thread is oriented from its smaller end vertex.
    """
    _require_reducible_class(g)
    seen: set[int] = set()
    out = []
    for u in sorted(v for v in g.vertices if g.degree(v) != 2):
        for h in g.incidence(u):
            if h.edge in seen:
                continue
            verts, es = [u], []
            cur, e = u, h.edge
            while True:
                es.append(e)
                cur = g.other(e, cur)
                verts.append(cur)
                if g.degree(cur) != 2:
                    break
                e = next(k.edge for k in g.incidence(cur) if k.edge != e)
            seen.update(es)
            t = Thread(tuple(verts), tuple(es))
            if verts[-1] < verts[0]:
                t = t.reversed()
            out.append(t)
    out.sort(key=lambda t: min(t.edges))
    return out


def _check_thread(g: Graph, t: Thread) -> None:
    vs, es = t.vertices, t.edges
    if not es or len(vs) != len(es) + 1 or len(set(vs)) != len(vs):
        raise NotAThread(f"{t} is not a path")
    for k, e in enumerate(es):
        if e not in g.edges or set(g.endpoints(e)) != {vs[k], vs[k + 1]}:
            raise NotAThread(f"edge {e} does not join {vs[k]} and {vs[k + 1]}")
    if any(g.degree(v) != 2 for v in vs[1:-1]):
        raise NotAThread("an inner vertex does not have degree 2")
    if g.degree(vs[0]) == 2 or g.degree(vs[-1]) == 2:
        raise NotAThread("an end vertex has degree 2")


def remove_thread(g: Graph, t: Thread) -> Graph:
    """Delete the edges and inner vertices of ``t``; its ends stay."""
    _check_thread(g, t)
    drop = set(t.edges)
    inner = set(t.inner_vertices)
    return Graph(
        g.vertices - inner,
        {e: uv for e, uv in g.edges.items() if e not in drop},
    )


def find_reducible_thread(g: Graph) -> Thread:
    """A thread whose removal leaves a 2-connected graph.

    Among all such threads, the one with the smallest least edge id.
    """
    for t in threads(g):
        if is_two_connected(remove_thread(g, t)):
            return t
    raise InternalContradiction("2-connected non-cycle graph without a reducible thread")


def induced_edge_subgraph(g: Graph, x: Iterable[int]) -> Graph:
    return g.edge_subgraph(x)


# ---------------------------------------------------------------------------
# named graphs


def cycle_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("a cycle needs at least 2 vertices")
    return Graph.from_edge_list([(i, (i + 1) % n) for i in range(n)], range(n))


def complete_graph(n: int) -> Graph:
    return Graph.from_edge_list([(i, j) for i in range(n) for j in range(i + 1, n)], range(n))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edge_list([(i, m + j) for i in range(m) for j in range(n)], range(m + n))


def theta_graph(*lengths: int) -> Graph:
    """Internally disjoint paths between vertices 0 and 1 with the given edge counts."""
    pairs = []
    nxt = 2
    for length in lengths:
        if length < 1:
            raise ValueError("path lengths must be positive")
        prev = 0
        for _ in range(length - 1):
            pairs.append((prev, nxt))
            prev = nxt
            nxt += 1
        pairs.append((prev, 1))
    return Graph.from_edge_list(pairs, range(nxt))
