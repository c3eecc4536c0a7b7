"""Planar embeddings realizing a simple cycle basis, and planarity via bases.

The construction strips reducible threads until a cycle remains, rewriting
the basis at every step, then puts the threads back one at a time, each
drawn across the face whose circuit the rewritten basis dictates:

* thread covered by one member ``C``: drop ``C``; on the way back the thread
  splits the residual face into ``C`` and the new residual face;
* thread covered by two members ``S``, ``Z`` (which must meet exactly in the
  thread): replace them by ``S + Z``; on the way back the thread splits the
  face ``S + Z`` into ``S`` and ``Z`` and the residual face is kept.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cycle_space import (
    DEFAULT_BUDGET,
    EdgeIndex,
    SimpleBasisSearch,
    check_basis,
    gf2_sum,
)
from .embedding import Embedding, Face, PlaneBuilder, is_planar_embedding
from .errors import (
    InternalContradiction,
    NotASimpleBasis,
    NotTwoConnected,
    ThreadCoverViolation,
)
from .oracle import DEFAULT_ROTATION_BUDGET, is_planar_bruteforce
from .graph import (
    EdgeSet,
    Graph,
    Thread,
    block_decomposition,
    cycle_traversal,
    find_reducible_thread,
    is_cycle,
    is_two_connected,
    remove_thread,
)


@dataclass(frozen=True)
class EmbeddingWithResidualFace:
    embedding: Embedding
    residual_face: Face

    @property
    def residual_circuit(self) -> EdgeSet:
        return self.residual_face.circuit


@dataclass(frozen=True)
class ReductionPlan:
    """Threads in removal order, the graphs between removals, and the final cycle."""

    threads: tuple[Thread, ...]
    graphs: tuple[Graph, ...]  # graphs[k] is the host of threads[k]; graphs[-1] is a cycle
    base: Thread  # closed walk around graphs[-1]


@functools.lru_cache(maxsize=256)
def reduction_plan(g: Graph) -> ReductionPlan:
    if not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    ts, gs = [], [g]
    while not is_cycle(gs[-1]):
        t = find_reducible_thread(gs[-1])
        ts.append(t)
        gs.append(remove_thread(gs[-1], t))
    return ReductionPlan(tuple(ts), tuple(gs), cycle_traversal(gs[-1]))


def _arc_mask(walk, lo: int, hi: int, bit) -> int:
    m = 0
    for h in walk[lo:hi]:
        m |= 1 << bit[h.edge]
    return m


def _split_positions(b: PlaneBuilder, fid: int, x: int, y: int, target: int, index: EdgeIndex) -> tuple[int, int, bool] | None:
    """Walk positions of ``x`` and ``y`` on face ``fid`` cutting off an arc with edges ``target``.

    Returns ``(i, j, target_is_b)`` where ``target_is_b`` says the arc
    ``walk[i:j]`` (face ``b`` of the insertion) carries ``target``. Ties go
    to the earliest positions. None when no such positions exist.
    """
    walk = b.faces[fid]
    bit = index.bit
    n = len(walk)
    tails = [b.tail(h) for h in walk]
    for i in (k for k in range(n) if tails[k] == x):
        for j in (k for k in range(n) if tails[k] == y):
            if i < j:
                arc_ij = _arc_mask(walk, i, j, bit)
                arc_ji = _arc_mask(walk, j, n, bit) | _arc_mask(walk, 0, i, bit)
            else:
                arc_ij = _arc_mask(walk, i, n, bit) | _arc_mask(walk, 0, j, bit)
                arc_ji = _arc_mask(walk, j, i, bit)
            if arc_ij == target:
                return i, j, True
            if arc_ji == target:
                return i, j, False
    return None


def embed_from_simple_basis(
    g: Graph,
    b: Sequence[Iterable[int]],
    *,
    validate: bool = True,
    debug: bool = False,
) -> EmbeddingWithResidualFace:
    """Build a planar embedding whose faces are the members of ``b`` plus one.

    The extra (residual) face has circuit equal to the GF(2) sum of ``b``.
    ``validate`` checks that ``b`` is a simple basis up front; ``debug`` also
    checks that every intermediate rewritten basis is simple on its graph.
    """
    if not is_two_connected(g):
        raise NotTwoConnected("graph is not 2-connected")
    basis = [frozenset(x) for x in b]
    if validate:
        report = check_basis(g, basis)
        if not report.is_simple:
            raise NotASimpleBasis("not a simple basis: " + "; ".join(report.problems()), report)

    def fault(msg: str) -> Exception:
        # with a verified simple basis these branches are unreachable
        return InternalContradiction(msg) if validate else NotASimpleBasis(msg)

    plan = reduction_plan(g)
    index = EdgeIndex(g)
    current = [index.to_mask(x) for x in basis]

    records: list[tuple[int, Thread, int, tuple[int, ...]]] = []
    for level, t in enumerate(plan.threads):
        tm = index.to_mask(t.edges)
        hits = [m for m in current if m & tm]
        if any(m & tm != tm for m in hits):
            raise fault(f"a member meets thread {t.edges} without containing it")
        if not hits:
            raise ThreadCoverViolation(f"thread {t.edges} lies in no basis member")
        if len(hits) > 2:
            raise fault(f"thread {t.edges} lies in {len(hits)} basis members")
        if len(hits) == 1:
            current.remove(hits[0])
        else:
            s, z = hits
            if s & z != tm:
                raise ThreadCoverViolation(f"members through thread {t.edges} share edges off the thread")
            current.remove(s)
            current.remove(z)
            current.append(s ^ z)
        records.append((level, t, tm, tuple(hits)))
        if debug:
            sub = plan.graphs[level + 1]
            rep = check_basis(sub, [index.to_set(m) for m in current])
            if not rep.is_simple:
                raise fault(f"rewritten basis not simple at level {level}: {rep.problems()}")

    cycle_mask = index.to_mask(plan.base.edges)
    if current != [cycle_mask]:
        raise fault("rewritten basis of the final cycle is not its edge set")

    builder, member_fid, residual = PlaneBuilder.from_cycle(g.edges, plan.base)
    face_of = {cycle_mask: member_fid}
    residual_mask = cycle_mask

    for level, t, tm, hits in reversed(records):
        x, y = t.ends
        if len(hits) == 1:
            (c,) = hits
            target = c & ~tm
            if target & ~residual_mask:
                raise fault("member minus thread is not contained in the residual face")
            split = _split_positions(builder, residual, x, y, target, index)
            if split is None:
                raise fault("thread ends do not cut the member out of the residual face")
            i, j, target_is_b = split
            fa, fb = builder.insert_path(residual, t, i, j)
            face_of[c] = fb if target_is_b else fa
            residual = fa if target_is_b else fb
            residual_mask = (residual_mask & ~target) | tm
        else:
            s, z = hits
            sz = s ^ z
            # on a cycle both faces share one circuit, so only compare beyond that
            if sz == residual_mask and len(face_of) > 1:
                raise fault("sum of the two members equals the residual face")
            fid = face_of.pop(sz, None)
            if fid is None:
                raise fault("sum of the two members is not a face")
            split = _split_positions(builder, fid, x, y, s & ~tm, index)
            if split is None:
                raise fault("thread ends do not split the face into the two members")
            i, j, target_is_b = split
            fa, fb = builder.insert_path(fid, t, i, j)
            face_of[s] = fb if target_is_b else fa
            face_of[z] = fa if target_is_b else fb

    emb = builder.embedding()
    result = EmbeddingWithResidualFace(emb, builder.face(residual))
    if debug:
        _check_result(g, basis, result, fault)
    return result


def _check_result(g: Graph, basis: list[EdgeSet], result: EmbeddingWithResidualFace, fault) -> None:
    emb = result.embedding
    if emb.graph != g or not is_planar_embedding(emb):
        raise fault("constructed embedding is not a planar embedding of the graph")
    circuits = sorted(sorted(f.circuit) for f in emb.faces())
    expected = sorted(sorted(x) for x in basis + [gf2_sum(basis)])
    if circuits != expected or result.residual_face not in emb.faces():
        raise fault("facial circuits differ from basis plus residual")


@dataclass
class PlanarityVerdict:
    """Outcome of the basis criterion on one 2-connected graph."""

    planar: bool
    basis: list[EdgeSet] | None = None
    certificate: EmbeddingWithResidualFace | None = None
    circuits: int = 0
    nodes: int = 0


def is_planar_via_basis(g: Graph, budget: int | None = DEFAULT_BUDGET) -> PlanarityVerdict:
    """Decide planarity of a 2-connected graph by searching for a simple basis.

    A found basis is turned into an embedding (the certificate). When the
    search is exhausted the verdict records how many circuits and search
    nodes were examined. Raises SearchBudgetExceeded if undecided.
    """
    search = SimpleBasisSearch(g, budget)
    basis = next(iter(search), None)
    verdict = PlanarityVerdict(
        planar=basis is not None,
        basis=basis,
        circuits=search.stats.circuits,
        nodes=search.stats.nodes,
    )
    if basis is not None:
        verdict.certificate = embed_from_simple_basis(g, basis)
    return verdict


@dataclass
class BlockVerdict:
    block: Graph
    planar: bool
    certificate: EmbeddingWithResidualFace | None = None


@dataclass
class GraphVerdict:
    blocks: list[BlockVerdict] = field(default_factory=list)

    @property
    def planar(self) -> bool:
        return all(b.planar for b in self.blocks)


def planarity_by_blocks(g: Graph, method: str = "basis", budget: int | None = None) -> GraphVerdict:
    """Planarity of an arbitrary graph: it is planar iff every block is.

    Bridges are planar outright. ``method`` is ``"basis"`` (simple-basis
    search with embedding certificate) or ``"rotations"`` (exhaustive
    rotation systems). Raises SearchBudgetExceeded if any block is undecided.
    """
    out = GraphVerdict()
    for block in block_decomposition(g):
        if block.num_edges == 1:
            out.blocks.append(BlockVerdict(block, True))
        elif method == "basis":
            v = is_planar_via_basis(block, DEFAULT_BUDGET if budget is None else budget)
            out.blocks.append(BlockVerdict(block, v.planar, v.certificate))
        elif method == "rotations":
            ok = is_planar_bruteforce(block, DEFAULT_ROTATION_BUDGET if budget is None else budget)
            out.blocks.append(BlockVerdict(block, ok))
        else:
            raise ValueError(f"unknown method {method!r}")
        if not out.blocks[-1].planar:
            break
    return out
