"""Independent ground truth at desk scale.

Nothing here touches cycle spaces: planarity is decided by trying every
rotation system and counting faces, and test corpora come from exhaustive
generation up to isomorphism or from random path insertion.
"""

from __future__ import annotations

import itertools
import math
import random
from typing import Iterator

import numpy as np

from .embedding import Embedding, PlaneBuilder
from .errors import NotConnected, SearchBudgetExceeded
from .graph import Graph, Thread, cycle_graph, cycle_traversal, is_connected, is_two_connected

DEFAULT_ROTATION_BUDGET = 10**8
_CHUNK = 1 << 15


def rotation_count(g: Graph) -> int:
    """Rotation systems :func:`is_planar_bruteforce` would enumerate."""
    degs = sorted((g.degree(v) for v in g.vertices), reverse=True)
    total = 1
    for k, d in enumerate(degs):
        n = math.factorial(d - 1) if d > 0 else 1
        if k == 0 and d >= 3:
            n //= 2
        total *= n
    return total


def _cyclic_orders(darts: list[int], up_to_reflection: bool) -> list[tuple[int, ...]]:
    first, rest = darts[0], darts[1:]
    out = []
    for p in itertools.permutations(rest):
        if up_to_reflection and len(p) >= 2 and p > p[::-1]:
            continue
        out.append((first,) + p)
    return out


def _is_simple(g: Graph) -> bool:
    return len({frozenset(uv) for uv in g.edges.values()}) == g.num_edges


def is_planar_bruteforce(
    g: Graph, budget: int | None = DEFAULT_ROTATION_BUDGET, face_bound: bool = True
) -> bool:
    """True iff some rotation system of ``g`` has V - E + F = 2.

    Darts are numbered ``2k + end`` for the k-th edge. The vertex of largest
    degree has its rotation fixed up to reflection (mirror images have the
    same face count). Face counts are computed for batches of rotation
    systems at once by pointer doubling on the face permutation.

    With ``face_bound``, a simple graph on at least 3 vertices is rejected
    without enumeration when 2 - V + E > 2E / 3: none of its rotation
    systems has a face walk shorter than 3.
    """
    if not g.vertices or not is_connected(g):
        raise NotConnected("rotation enumeration needs a connected graph")
    nv, ne = g.num_vertices, g.num_edges
    if ne == 0:
        return True
    target = 2 - nv + ne
    if face_bound and nv >= 3 and _is_simple(g) and 3 * target > 2 * ne:
        return False
    total = rotation_count(g)
    if budget is not None and total > budget:
        raise SearchBudgetExceeded(budget, "rotation enumeration")
    ids = sorted(g.edges)
    pos = {e: k for k, e in enumerate(ids)}
    nd = 2 * ne

    verts = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    tables = []  # (dart columns, table of successor values per choice)
    for k, v in enumerate(verts):
        darts = [2 * pos[h.edge] + h.end for h in g.incidence(v)]
        orders = _cyclic_orders(darts, up_to_reflection=(k == 0))
        cols = np.array(darts, dtype=np.int64)
        tab = np.empty((len(orders), len(darts)), dtype=np.int32)
        for r, order in enumerate(orders):
            succ = {order[i]: order[(i + 1) % len(order)] for i in range(len(order))}
            tab[r] = [succ[d] for d in darts]
        tables.append((cols, tab))

    twin = np.arange(nd) ^ 1
    steps = max(1, math.ceil(math.log2(nd)))
    radices = [len(t) for _, t in tables]
    label_dtype = np.int8 if nd < 128 else np.int32
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        rows = len(idx)
        sigma = np.empty((rows, nd), dtype=np.int32)
        rem = idx
        for (cols, tab), r in zip(tables, radices):
            sigma[:, cols] = tab[rem % r]
            rem = rem // r
        # face permutation h -> succ(twin(h)), as flat indices into the batch
        step = (sigma[:, twin] + (np.arange(rows, dtype=np.int32) * nd)[:, None]).ravel()
        label = np.tile(np.arange(nd, dtype=label_dtype), rows)
        for k in range(steps):
            np.minimum(label, label[step], out=label)
            if k + 1 < steps:
                step = step[step]
        nfaces = (label.reshape(rows, nd) == np.arange(nd, dtype=label_dtype)).sum(axis=1)
        if (nfaces == target).any():
            return True
    return False


# ---------------------------------------------------------------------------
# exhaustive generation


def _perm_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


class _Canonizer:
    """Precomputed relabeling gathers for ``n``-vertex adjacency matrices."""

    def __init__(self, n: int, base: int):
        perms = _perm_table(n)
        iu, ju = np.triu_indices(n, 1)
        self.gather = perms[:, iu] * n + perms[:, ju]
        self.weights = base ** np.arange(len(iu) - 1, -1, -1, dtype=np.int64)

    def __call__(self, adj: np.ndarray) -> int:
        return int((adj.ravel()[self.gather] @ self.weights).min())


def canonical_code(adj: np.ndarray, base: int | None = None) -> int:
    """Smallest upper-triangle code of ``adj`` over all vertex relabelings.

    Entries are edge multiplicities, read as digits of a base ``base``
    number (default: one more than the largest entry, at least 2).
    """
    n = adj.shape[0]
    if n <= 1:
        return 0
    if base is None:
        base = max(int(adj.max()) + 1, 2)
    return _Canonizer(n, base)(np.asarray(adj, dtype=np.int64))


def _graph_from_adj(adj: np.ndarray) -> Graph:
    n = adj.shape[0]
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            pairs.extend([(i, j)] * int(adj[i, j]))
    return Graph.from_edge_list(pairs, range(n))


def _decode(code: int, n: int, base: int) -> np.ndarray:
    iu, ju = np.triu_indices(n, 1)
    adj = np.zeros((n, n), dtype=np.int64)
    for k in range(len(iu) - 1, -1, -1):
        code, d = divmod(code, base)
        adj[iu[k], ju[k]] = adj[ju[k], iu[k]] = d
    return adj


def _graphs_on(n: int, max_edges: int, multiplicity: int) -> list[tuple[int, int]]:
    """(edge count, canonical code) of every multigraph on ``n`` vertices, up to isomorphism."""
    pairs = list(zip(*np.triu_indices(n, 1)))
    base = max(multiplicity + 1, 2)
    canon = _Canonizer(n, base)
    empty = np.zeros((n, n), dtype=np.int64)
    level = {canon(empty)}
    found = [(0, c) for c in level]
    for e in range(1, max_edges + 1):
        nxt = set()
        for code in level:
            adj = _decode(code, n, base)
            for i, j in pairs:
                if adj[i, j] < multiplicity:
                    adj[i, j] += 1
                    adj[j, i] += 1
                    nxt.add(canon(adj))
                    adj[i, j] -= 1
                    adj[j, i] -= 1
        level = nxt
        found.extend((e, c) for c in sorted(level))
        if not level:
            break
    return found


def enumerate_two_connected_graphs(
    max_vertices: int, max_edges: int | None = None, multiplicity: int = 1
) -> Iterator[Graph]:
    """Every 2-connected graph with at most ``max_vertices`` vertices, up to isomorphism.

    ``multiplicity`` bounds parallel edges per vertex pair (1 gives simple
    graphs). Graphs come out ordered by vertex count, then edge count, then
    canonical code; each is relabeled to its canonical vertex order.
    """
    if multiplicity < 1:
        raise ValueError("multiplicity must be at least 1")
    base = max(multiplicity + 1, 2)
    for n in range(2, max_vertices + 1):
        cap = multiplicity * n * (n - 1) // 2
        if max_edges is not None:
            cap = min(cap, max_edges)
        for _, code in _graphs_on(n, cap, multiplicity):
            g = _graph_from_adj(_decode(code, n, base))
            if is_two_connected(g):
                yield g


# ---------------------------------------------------------------------------
# random planar graphs


def random_planar_two_connected(seed: int, n: int, max_inner: int = 2) -> tuple[Graph, Embedding]:
    """Grow a triangle by random path insertions until it has ``n`` vertices.

    Each step picks a face and two distinct positions on its walk uniformly
    and inserts a path with 0 to ``max_inner`` new inner vertices (0 gives a
    single chord edge, possibly parallel to an existing one). The result is
    2-connected and its embedding planar by construction.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = random.Random(seed)
    tri = cycle_graph(3)
    b, _, _ = PlaneBuilder.from_cycle(tri.edges, cycle_traversal(tri))
    next_v, next_e = 3, 3
    while len(b.vertices) < n:
        fid = rng.choice(sorted(b.faces))
        walk = b.faces[fid]
        i, j = rng.sample(range(len(walk)), 2)
        x, y = b.tail(walk[i]), b.tail(walk[j])
        k = rng.randint(0, min(max_inner, n - len(b.vertices)))
        vs = [x] + list(range(next_v, next_v + k)) + [y]
        es = list(range(next_e, next_e + k + 1))
        next_v += k
        next_e += k + 1
        for a, (u, v) in enumerate(zip(vs, vs[1:])):
            b.endpoints[es[a]] = (u, v)
        b.insert_path(fid, Thread(tuple(vs), tuple(es)), i, j)
    emb = b.embedding()
    return emb.graph, emb
