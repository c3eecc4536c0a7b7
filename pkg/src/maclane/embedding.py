"""Combinatorial embeddings as rotation systems.

A dart is a :class:`HalfEdge` read as "leave the tail along this edge". The
face to the left of dart ``h`` continues with the rotation successor of
``twin(h)`` at the head of ``h``; iterating that map traces face boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    EndpointNotOnFace,
    FaceNotInEmbedding,
    NotConnected,
    NotPlanarEmbedding,
    NotTwoConnected,
    PathNotDisjoint,
)
from .graph import EdgeSet, Graph, HalfEdge, Thread, cycle_traversal, is_connected, is_two_connected


def normalize_cycle(seq: Sequence) -> tuple:
    """Rotate a cyclic sequence to start at its minimum element."""
    if not seq:
        return ()
    k = min(range(len(seq)), key=seq.__getitem__)
    return tuple(seq[k:]) + tuple(seq[:k])


@dataclass(frozen=True)
class Face:
    """A face given by its boundary walk, normalized to start at its least dart."""

    walk: tuple[HalfEdge, ...]

    @property
    def circuit(self) -> EdgeSet:
        return frozenset(h.edge for h in self.walk)

    def __len__(self) -> int:
        return len(self.walk)


class Embedding:
    """A graph together with a cyclic order of half-edges at every vertex."""

    __slots__ = ("graph", "_rotation", "_succ", "_faces")

    def __init__(self, graph: Graph, rotation: Mapping[int, Sequence[HalfEdge]]):
        rot: dict[int, tuple[HalfEdge, ...]] = {}
        for v in sorted(graph.vertices):
            cyc = tuple(HalfEdge(*h) for h in rotation.get(v, ()))
            if sorted(cyc) != sorted(graph.incidence(v)):
                raise ValueError(f"rotation at vertex {v} is not a cyclic order of its half-edges")
            rot[v] = normalize_cycle(cyc)
        extra = set(rotation).difference(graph.vertices)
        if extra:
            raise ValueError(f"rotation given for unknown vertices {sorted(extra)}")
        succ = {}
        for cyc in rot.values():
            for k, h in enumerate(cyc):
                succ[h] = cyc[(k + 1) % len(cyc)]
        self.graph = graph
        self._rotation = rot
        self._succ = succ
        self._faces: list[Face] | None = None

    @property
    def rotation(self) -> dict[int, tuple[HalfEdge, ...]]:
        return dict(self._rotation)

    def succ(self, h: HalfEdge) -> HalfEdge:
        return self._succ[h]

    def next_dart(self, h: HalfEdge) -> HalfEdge:
        return self._succ[h.twin()]

    def faces(self) -> list[Face]:
        if self._faces is None:
            self._faces = _trace_faces(self)
        return list(self._faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Embedding):
            return NotImplemented
        return self.graph == other.graph and self._rotation == other._rotation

    def __hash__(self) -> int:
        return hash((self.graph, tuple(self._rotation.items())))

    def __repr__(self) -> str:
        rot = "; ".join(f"{v}: {' '.join(map(str, c))}" for v, c in self._rotation.items())
        return f"Embedding({rot})"


def _trace_faces(emb: Embedding) -> list[Face]:
    out = []
    seen: set[HalfEdge] = set()
    for start in sorted(emb.graph.half_edges()):
        if start in seen:
            continue
        walk = []
        h = start
        while h not in seen:
            seen.add(h)
            walk.append(h)
            h = emb.next_dart(h)
        out.append(Face(tuple(walk)))
    return out


def _require_connected(emb: Embedding) -> None:
    if not emb.graph.vertices or not is_connected(emb.graph):
        raise NotConnected("embedding of a disconnected graph")


def faces(emb: Embedding) -> list[Face]:
    """Faces ordered by least dart; each dart lies on exactly one walk."""
    _require_connected(emb)
    return emb.faces()


def euler_characteristic(emb: Embedding) -> int:
    _require_connected(emb)
    g = emb.graph
    nf = len(emb.faces()) if g.num_edges else 1
    return g.num_vertices - g.num_edges + nf


def is_planar_embedding(emb: Embedding) -> bool:
    return euler_characteristic(emb) == 2


def facial_circuits(emb: Embedding) -> list[EdgeSet]:
    if not is_two_connected(emb.graph):
        raise NotTwoConnected("facial circuits need a 2-connected graph")
    if not is_planar_embedding(emb):
        raise NotPlanarEmbedding("embedding is not planar")
    return [f.circuit for f in emb.faces()]


def facial_basis(emb: Embedding, f: Face) -> list[EdgeSet]:
    """Facial circuits of every face except ``f``."""
    circuits = facial_circuits(emb)
    fs = emb.faces()
    try:
        k = fs.index(f)
    except ValueError:
        raise FaceNotInEmbedding(f"{f} is not a face of the embedding") from None
    return circuits[:k] + circuits[k + 1 :]


class PlaneBuilder:
    """Mutable embedding that grows by inserting paths across faces.

    Faces are kept as explicit boundary walks keyed by integer id, so an
    insertion only touches the split face and the two attachment rotations.
    """

    def __init__(self, endpoints: Mapping[int, tuple[int, int]]):
        self.endpoints = dict(endpoints)
        self.vertices: set[int] = set()
        self.edges: set[int] = set()
        self.rotation: dict[int, list[HalfEdge]] = {}
        self.faces: dict[int, list[HalfEdge]] = {}
        self._next_face = 0

    def tail(self, h: HalfEdge) -> int:
        return self.endpoints[h.edge][h.end]

    def dart_from(self, e: int, v: int) -> HalfEdge:
        return HalfEdge(e, 0 if self.endpoints[e][0] == v else 1)

    def _new_face(self, walk: list[HalfEdge]) -> int:
        fid = self._next_face
        self._next_face += 1
        self.faces[fid] = walk
        return fid

    @classmethod
    def from_cycle(cls, endpoints: Mapping[int, tuple[int, int]], cycle: Thread) -> tuple["PlaneBuilder", int, int]:
        """Embed a closed walk (last vertex == first). Returns the builder and
        the ids of the face traced along the walk and the opposite face."""
        b = cls(endpoints)
        vs, es = cycle.vertices[:-1], cycle.edges
        darts = [b.dart_from(e, vs[k]) for k, e in enumerate(es)]
        for k, v in enumerate(vs):
            b.rotation[v] = [darts[k - 1].twin(), darts[k]]
        b.vertices.update(vs)
        b.edges.update(es)
        forward = b._new_face(darts)
        backward = b._new_face([d.twin() for d in reversed(darts)])
        return b, forward, backward

    @classmethod
    def from_embedding(cls, emb: Embedding) -> tuple["PlaneBuilder", list[int]]:
        g = emb.graph
        b = cls(g.edges)
        b.vertices = set(g.vertices)
        b.edges = set(g.edges)
        b.rotation = {v: list(c) for v, c in emb.rotation.items()}
        ids = [b._new_face(list(f.walk)) for f in emb.faces()]
        return b, ids

    def insert_path(self, fid: int, path: Thread, i: int, j: int) -> tuple[int, int]:
        """Insert ``path`` from ``walk[i]``'s tail to ``walk[j]``'s tail inside face ``fid``.

        Returns ``(a, b)``: face ``a`` runs along the walk from position ``j``
        to ``i`` and back over the path; face ``b`` runs from ``i`` to ``j``.
        """
        walk = self.faces.pop(fid)
        x, y = path.ends
        vs, es = path.vertices, path.edges
        darts = [self.dart_from(e, vs[k]) for k, e in enumerate(es)]
        rx, ry = self.rotation[x], self.rotation[y]
        rx.insert(rx.index(walk[i]), darts[0])
        ry.insert(ry.index(walk[j]), darts[-1].twin())
        for k in range(1, len(vs) - 1):
            self.rotation[vs[k]] = [darts[k - 1].twin(), darts[k]]
        self.vertices.update(vs)
        self.edges.update(es)
        back = [d.twin() for d in reversed(darts)]
        if i < j:
            arc_ij, arc_ji = walk[i:j], walk[j:] + walk[:i]
        else:
            arc_ij, arc_ji = walk[i:] + walk[:j], walk[j:i]
        a = self._new_face(arc_ji + darts)
        b = self._new_face(arc_ij + back)
        return a, b

    def graph(self) -> Graph:
        return Graph(self.vertices, {e: self.endpoints[e] for e in self.edges})

    def embedding(self) -> Embedding:
        return Embedding(self.graph(), self.rotation)

    def face(self, fid: int) -> Face:
        return Face(normalize_cycle(self.faces[fid]))


def insert_path_chord(
    emb: Embedding,
    f: Face,
    path: Thread,
    x: int,
    y: int,
    positions: tuple[int, int] | None = None,
) -> Embedding:
    """Draw ``path`` (new edges, new inner vertices) from ``x`` to ``y`` across face ``f``.

    ``positions`` picks the walk indices whose darts leave ``x`` and ``y``;
    by default the first occurrence of each is used.
    """
    if f not in emb.faces():
        raise FaceNotInEmbedding(f"{f} is not a face of the embedding")
    if path.ends == (y, x) and x != y:
        path = path.reversed()
    g = emb.graph
    if path.ends != (x, y):
        raise PathNotDisjoint(f"path does not run between {x} and {y}")
    if x == y or len(path.edges) + 1 != len(path.vertices) or len(set(path.vertices)) != len(path.vertices):
        raise PathNotDisjoint("path must be a simple path between two distinct vertices")
    if set(path.inner_vertices) & g.vertices:
        raise PathNotDisjoint("path inner vertices already belong to the graph")
    if set(path.edges) & set(g.edges) or len(set(path.edges)) != len(path.edges):
        raise PathNotDisjoint("path edge ids already belong to the graph")
    tails = [g.tail(h) for h in f.walk]
    if positions is None:
        if x not in tails or y not in tails:
            raise EndpointNotOnFace(f"vertex {x if x not in tails else y} is not on the face")
        positions = (tails.index(x), tails.index(y))
    i, j = positions
    if not (0 <= i < len(tails) and 0 <= j < len(tails)) or tails[i] != x or tails[j] != y:
        raise EndpointNotOnFace("positions do not address the path's end vertices on the face")
    b, ids = PlaneBuilder.from_embedding(emb)
    vs = path.vertices
    for k, e in enumerate(path.edges):
        b.endpoints[e] = (vs[k], vs[k + 1])
    b.insert_path(ids[emb.faces().index(f)], path, i, j)
    return b.embedding()


def cycle_embedding(g: Graph) -> Embedding:
    """The unique rotation system of a cycle graph."""
    b, _, _ = PlaneBuilder.from_cycle(g.edges, cycle_traversal(g))
    return b.embedding()
