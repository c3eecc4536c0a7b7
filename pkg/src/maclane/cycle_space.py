"""GF(2) linear algebra on edge sets: membership, circuits, bases, simple bases.

Public functions take and return edge sets as ``frozenset`` of edge ids.
Elimination and the exhaustive search work on Python ``int`` bit vectors,
with bit ``k`` standing for the ``k``-th smallest edge id of the graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import NotConnected, NotTwoConnected, SearchBudgetExceeded, UnknownEdgeId
from .graph import EdgeSet, Graph, components, is_connected, is_two_connected

DEFAULT_BUDGET = 10**6

CycleBasis = list  # list[EdgeSet]


def sym_diff(x: Iterable[int], y: Iterable[int]) -> EdgeSet:
    return frozenset(x) ^ frozenset(y)


def gf2_sum(sets: Iterable[Iterable[int]]) -> EdgeSet:
    acc: set[int] = set()
    for s in sets:
        acc.symmetric_difference_update(s)
    return frozenset(acc)


class EdgeIndex:
    """Bijection between a graph's edge ids and bit positions."""

    def __init__(self, g: Graph):
        self.ids = sorted(g.edges)
        self.bit = {e: k for k, e in enumerate(self.ids)}

    def to_mask(self, x: Iterable[int]) -> int:
        m = 0
        bit = self.bit
        try:
            for e in x:
                m |= 1 << bit[e]
        except KeyError:
            raise UnknownEdgeId(set(x) - set(bit)) from None
        return m

    def to_set(self, mask: int) -> EdgeSet:
        out = []
        k = 0
        while mask:
            if mask & 1:
                out.append(self.ids[k])
            mask >>= 1
            k += 1
        return frozenset(out)

    @property
    def full(self) -> int:
        return (1 << len(self.ids)) - 1


class Eliminator:
    """Incremental GF(2) row echelon form with undo."""

    def __init__(self):
        self.rows: list[tuple[int, int]] = []  # (pivot bit, reduced row)

    def reduce(self, v: int) -> int:
        for p, row in self.rows:
            if v >> p & 1:
                v ^= row
        return v

    def push(self, v: int) -> bool:
        """Add ``v``; returns False (and leaves state untouched) if dependent."""
        r = self.reduce(v)
        if not r:
            return False
        self.rows.append((r.bit_length() - 1, r))
        return True

    def pop(self) -> None:
        self.rows.pop()

    def __len__(self) -> int:
        return len(self.rows)


def gf2_rank(masks: Iterable[int]) -> int:
    el = Eliminator()
    for m in masks:
        el.push(m)
    return len(el)


def _check_known(g: Graph, x: Iterable[int]) -> EdgeSet:
    x = frozenset(x)
    unknown = x.difference(g.edges)
    if unknown:
        raise UnknownEdgeId(unknown)
    return x


def _degrees(g: Graph, x: EdgeSet) -> Counter:
    deg: Counter = Counter()
    for e in x:
        u, v = g.endpoints(e)
        deg[u] += 1
        deg[v] += 1
    return deg


def is_cycle_space_member(g: Graph, x: Iterable[int]) -> bool:
    x = _check_known(g, x)
    return all(d % 2 == 0 for d in _degrees(g, x).values())


def is_circuit(g: Graph, x: Iterable[int]) -> bool:
    x = _check_known(g, x)
    if not x:
        return False
    deg = _degrees(g, x)
    if any(d != 2 for d in deg.values()):
        return False
    # connected 2-regular: walking from one edge must return after |x| steps
    start = min(x)
    first, cur = g.endpoints(start)
    e, steps = start, 1
    incident: dict[int, list[int]] = {}
    for k in x:
        for w in g.endpoints(k):
            incident.setdefault(w, []).append(k)
    while cur != first:
        a, b = incident[cur]
        e = b if a == e else a
        cur = g.other(e, cur)
        steps += 1
    return steps == len(x)


def cycle_space_dimension(g: Graph) -> int:
    return g.num_edges - g.num_vertices + len(components(g))


def edge_multiplicity(b: Iterable[Iterable[int]]) -> dict[int, int]:
    counts: Counter = Counter()
    for x in b:
        counts.update(frozenset(x))
    return dict(sorted(counts.items()))


@dataclass
class BasisReport:
    """Outcome of checking a candidate (simple) cycle basis."""

    count: int
    dimension: int
    rank: int
    empty: list[int] = field(default_factory=list)  # indices of empty elements
    non_members: list[int] = field(default_factory=list)  # indices not in the cycle space
    non_circuits: list[int] = field(default_factory=list)
    duplicates: list[int] = field(default_factory=list)
    over_covered: dict[int, int] = field(default_factory=dict)  # edge id -> multiplicity >= 3

    @property
    def is_basis(self) -> bool:
        return (
            not self.empty
            and not self.non_members
            and self.rank == self.count == self.dimension
        )

    @property
    def is_simple(self) -> bool:
        return self.is_basis and not self.non_circuits and not self.over_covered

    def problems(self) -> list[str]:
        out = []
        if self.empty:
            out.append(f"empty elements: {self.empty}")
        if self.non_members:
            out.append(f"elements not in the cycle space: {self.non_members}")
        if self.duplicates:
            out.append(f"duplicate elements: {self.duplicates}")
        if self.rank < self.count:
            out.append(f"dependent: rank {self.rank} < {self.count} elements")
        if self.count != self.dimension:
            out.append(f"wrong count: {self.count} elements, cycle space dimension {self.dimension}")
        elif self.rank < self.dimension:
            out.append(f"rank deficit: rank {self.rank} < dimension {self.dimension}")
        if self.non_circuits:
            out.append(f"non-circuit elements: {self.non_circuits}")
        if self.over_covered:
            pretty = ", ".join(f"{e}x{k}" for e, k in self.over_covered.items())
            out.append(f"edges in 3 or more elements: {pretty}")
        return out


def check_basis(g: Graph, b: Sequence[Iterable[int]]) -> BasisReport:
    elems = [_check_known(g, x) for x in b]
    index = EdgeIndex(g)
    report = BasisReport(
        count=len(elems),
        dimension=cycle_space_dimension(g),
        rank=gf2_rank(index.to_mask(x) for x in elems),
    )
    seen: set[EdgeSet] = set()
    for i, x in enumerate(elems):
        if not x:
            report.empty.append(i)
        if x in seen:
            report.duplicates.append(i)
        seen.add(x)
        if not is_cycle_space_member(g, x):
            report.non_members.append(i)
        if not is_circuit(g, x):
            report.non_circuits.append(i)
    report.over_covered = {e: k for e, k in edge_multiplicity(elems).items() if k > 2}
    return report


def is_basis(g: Graph, b: Sequence[Iterable[int]]) -> bool:
    return check_basis(g, b).is_basis


def is_simple_basis(g: Graph, b: Sequence[Iterable[int]]) -> bool:
    return check_basis(g, b).is_simple


def fundamental_cycle_basis(g: Graph) -> CycleBasis:
    """Fundamental circuits of the BFS tree grown from the least vertex.

    Edges are scanned in increasing id order; the basis lists one circuit per
    non-tree edge, in increasing id order of that edge.
    """
    if not g.vertices or not is_connected(g):
        raise NotConnected("fundamental cycle basis needs a connected graph")
    root = min(g.vertices)
    parent: dict[int, tuple[int, int] | None] = {root: None}  # v -> (tree edge, parent)
    depth = {root: 0}
    frontier = [root]
    tree: set[int] = set()
    while frontier:
        nxt = []
        for v in frontier:
            for h in sorted(g.incidence(v)):
                w = g.head(h)
                if w not in parent:
                    parent[w] = (h.edge, v)
                    depth[w] = depth[v] + 1
                    tree.add(h.edge)
                    nxt.append(w)
        frontier = nxt
    basis = []
    for e in sorted(g.edges):
        if e in tree:
            continue
        u, v = g.endpoints(e)
        path = {e}
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            te, u = parent[u]  # type: ignore[misc]
            path.add(te)
        basis.append(frozenset(path))
    return basis


# ---------------------------------------------------------------------------
# exhaustive search


class _Budget:
    def __init__(self, limit: int | None, what: str):
        self.limit = limit
        self.used = 0
        self.what = what

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise SearchBudgetExceeded(self.limit, self.what)


def enumerate_circuits(g: Graph, budget: int | None = None) -> list[EdgeSet]:
    """All circuits of ``g``, sorted by (size, sorted edge ids)."""
    index = EdgeIndex(g)
    masks = _enumerate_circuit_masks(g, index, _Budget(budget, "circuit enumeration"))
    return [index.to_set(m) for m in masks]


def _enumerate_circuit_masks(g: Graph, index: EdgeIndex, budget: _Budget) -> list[int]:
    bit = index.bit
    found: list[int] = []
    for e0 in index.ids:
        u, v = g.endpoints(e0)
        root_mask = 1 << bit[e0]

        def extend(cur: int, mask: int, on_path: set[int]) -> None:
            for h in g.incidence(cur):
                if h.edge <= e0:
                    continue
                budget.tick()
                w = g.head(h)
                m = mask | 1 << bit[h.edge]
                if w == v:
                    found.append(m)
                elif w not in on_path:
                    on_path.add(w)
                    extend(w, m, on_path)
                    on_path.discard(w)

        extend(u, root_mask, {u})
    found.sort(key=lambda m: (bin(m).count("1"), _ids_key(m, index)))
    return found


def _ids_key(mask: int, index: EdgeIndex) -> tuple[int, ...]:
    return tuple(sorted(index.to_set(mask)))


@dataclass
class SearchStats:
    circuits: int = 0
    nodes: int = 0
    exhausted: bool = False


class SimpleBasisSearch:
    """Exhaustive search for simple cycle bases of a 2-connected graph.

    Circuits are ordered by (size, edge ids) and subsets are explored in
    lexicographic order. A branch is cut as soon as an edge would be covered a
    third time or the new circuit is dependent on those already chosen.

    With ``prune=True`` two further cuts apply, both valid for any simple
    basis of a 2-connected graph: every edge must be covered (the basis spans
    a circuit through it), and the total size of the chosen circuits is at
    most ``2e - g`` where ``g`` is the smallest circuit size (edges covered
    once form the nonempty sum of the basis).
    """

    def __init__(self, g: Graph, budget: int | None = DEFAULT_BUDGET, prune: bool = True):
        if not is_two_connected(g):
            raise NotTwoConnected("simple basis search needs a 2-connected graph")
        self.g = g
        self.index = EdgeIndex(g)
        self.prune = prune
        self._budget = _Budget(budget, "simple basis search")
        self.circuits = _enumerate_circuit_masks(g, self.index, self._budget)
        self.dimension = cycle_space_dimension(g)
        self.stats = SearchStats(circuits=len(self.circuits))

    def __iter__(self) -> Iterator[CycleBasis]:
        for masks in self._search():
            yield [self.index.to_set(m) for m in masks]
        self.stats.exhausted = True

    def _search(self) -> Iterator[list[int]]:
        circ = self.circuits
        n = len(circ)
        dim = self.dimension
        sizes = [bin(c).count("1") for c in circ]
        full = self.index.full
        max_total = 2 * self.g.num_edges - (sizes[0] if sizes else 0)
        suffix = [0] * (n + 1)
        for k in range(n - 1, -1, -1):
            suffix[k] = suffix[k + 1] | circ[k]
        prune = self.prune
        budget = self._budget
        stats = self.stats
        el = Eliminator()
        chosen: list[int] = []

        def rec(start: int, once: int, twice: int, total: int) -> Iterator[list[int]]:
            need = dim - len(chosen)
            if need == 0:
                yield list(chosen)
                return
            if prune and (full & ~(once | twice)) & ~suffix[start]:
                return
            for k in range(start, n - need + 1):
                budget.tick()
                stats.nodes += 1
                c = circ[k]
                if c & twice:
                    continue
                if prune:
                    if total + need * sizes[k] > max_total:
                        break
                    if (full & ~(once | twice)) & ~suffix[k]:
                        break
                if not el.push(c):
                    continue
                chosen.append(c)
                yield from rec(k + 1, once ^ c, twice | (once & c), total + sizes[k])
                chosen.pop()
                el.pop()

        if dim == 0:
            yield []
            return
        yield from rec(0, 0, 0, 0)


def iter_simple_bases(g: Graph, budget: int | None = DEFAULT_BUDGET, prune: bool = True) -> Iterator[CycleBasis]:
    """Every simple cycle basis of ``g`` (as a set), in search order."""
    return iter(SimpleBasisSearch(g, budget, prune))


def find_simple_basis_bruteforce(
    g: Graph, budget: int | None = DEFAULT_BUDGET, prune: bool = True
) -> CycleBasis | None:
    """First simple cycle basis in search order, or None when none exists.

    Raises SearchBudgetExceeded when the budget runs out first.
    """
    return next(iter_simple_bases(g, budget, prune), None)
