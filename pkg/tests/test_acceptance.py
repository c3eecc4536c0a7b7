"""Acceptance criteria, one test each.

Run under pytest (a summary line per criterion is printed at the end) or
directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import functools
import random
import sys
import time

import pytest

import oracles
from conftest import ACCEPTANCE
from maclane.cycle_space import (
    SimpleBasisSearch,
    enumerate_circuits,
    gf2_sum,
    is_cycle_space_member,
    iter_simple_bases,
    sym_diff,
)
from maclane.embedder import embed_from_simple_basis
from maclane.embedding import facial_basis, facial_circuits, faces, is_planar_embedding
from maclane.graph import complete_bipartite, complete_graph, find_reducible_thread, is_cycle, remove_thread
from maclane.oracle import enumerate_two_connected_graphs, is_planar_bruteforce, random_planar_two_connected


@functools.lru_cache(maxsize=None)
def corpus6():
    return tuple(enumerate_two_connected_graphs(6))


@functools.lru_cache(maxsize=None)
def rotation_verdicts6():
    """Planarity of every corpus graph by full rotation enumeration, no shortcuts."""
    return tuple(is_planar_bruteforce(g, budget=None, face_bound=False) for g in corpus6())


def planar_corpus6():
    return tuple(g for g, ok in zip(corpus6(), rotation_verdicts6()) if ok)


def _exhaust(g):
    search = SimpleBasisSearch(g, budget=None, prune=False)
    t = time.perf_counter()
    found = next(iter(search), None)
    return found, search, time.perf_counter() - t


def criterion_1():
    g = complete_graph(5)
    found, search, dt = _exhaust(g)
    ok = found is None and search.stats.exhausted and search.stats.circuits == 37 and dt < 60
    return ok, f"K5: no simple basis over {search.stats.circuits} circuits, {search.stats.nodes} nodes, {dt:.2f}s (limit 60s)"


def criterion_2():
    g = complete_bipartite(3, 3)
    found, search, dt = _exhaust(g)
    ok = found is None and search.stats.exhausted and search.stats.circuits == 15 and dt < 5
    return ok, f"K3,3: no simple basis over {search.stats.circuits} circuits, {search.stats.nodes} nodes, {dt:.2f}s (limit 5s)"


def criterion_3():
    t = time.perf_counter()
    graphs = corpus6()
    disagree = 0
    planar = 0
    for g, by_rotations in zip(graphs, rotation_verdicts6()):
        by_basis = next(iter_simple_bases(g, budget=None), None) is not None
        planar += by_rotations
        disagree += by_basis != by_rotations
    dt = time.perf_counter() - t
    ok = disagree == 0 and len(graphs) == 70 and dt < 600
    return ok, f"{len(graphs)} graphs ({planar} planar), {disagree} disagreements, {dt:.1f}s (limit 600s)"


def criterion_4():
    total = failures = 0
    for g in planar_corpus6():
        for b in iter_simple_bases(g, budget=None):
            total += 1
            r = embed_from_simple_basis(g, b)
            emb = r.embedding
            want = sorted(sorted(c) for c in b + [gf2_sum(b)])
            got = sorted(sorted(c) for c in facial_circuits(emb)) if is_planar_embedding(emb) else None
            failures += emb.graph != g or got != want
    ok = failures == 0 and total > 0
    return ok, f"{total} simple bases over {len(planar_corpus6())} planar graphs, {failures} failures"


def criterion_5(seeds: int = 1000):
    t = time.perf_counter()
    runs = failures = 0
    for seed in range(seeds):
        n = 3 + seed % 48
        g, emb = random_planar_two_connected(seed, n)
        want = sorted(sorted(c) for c in facial_circuits(emb))
        for f in faces(emb):
            runs += 1
            r = embed_from_simple_basis(g, facial_basis(emb, f))
            got = sorted(sorted(c) for c in facial_circuits(r.embedding))
            failures += got != want or r.residual_circuit != f.circuit
    dt = time.perf_counter() - t
    ok = failures == 0 and dt < 300
    return ok, f"{seeds} graphs, {runs} re-embeddings, {failures} failures, {dt:.1f}s (limit 300s)"


def criterion_6():
    checked = failures = 0
    streams = [enumerate_two_connected_graphs(7), enumerate_two_connected_graphs(4, multiplicity=2)]
    for stream in streams:
        for g in stream:
            if is_cycle(g):
                continue
            checked += 1
            try:
                t = find_reducible_thread(g)
            except Exception:
                failures += 1
                continue
            failures += not oracles.two_connected(remove_thread(g, t))
    return failures == 0, f"{checked} non-cycle graphs, {failures} without a reducible thread"


def criterion_7(seed: int = 2024):
    rng = random.Random(seed)
    cases = failures = 0

    def rand_set():
        return frozenset(rng.sample(range(64), rng.randint(0, 20)))

    for _ in range(4000):
        x, y, z = rand_set(), rand_set(), rand_set()
        cases += 1
        failures += not (
            sym_diff(sym_diff(x, y), z) == sym_diff(x, sym_diff(y, z))
            and sym_diff(x, y) == sym_diff(y, x)
            and sym_diff(x, x) == frozenset()
            and sym_diff(x, frozenset()) == x
        )
    for k in range(3000):
        g, emb = random_planar_two_connected(seed + k, rng.randint(3, 12))
        circuits = enumerate_circuits(g, budget=10**6) if g.num_edges <= 16 else facial_circuits(emb)
        for _ in range(2):
            pick = [c for c in circuits if rng.random() < 0.5]
            cases += 1
            failures += not is_cycle_space_member(g, gf2_sum(pick))
        cases += 1
        failures += gf2_sum(facial_circuits(emb)) != frozenset()
    return failures == 0 and cases >= 10**4, f"{cases} randomized cases, {failures} failures"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7]


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1), ids=lambda k: f"criterion_{k}")
def test_criterion(k):
    ok, detail = CRITERIA[k - 1]()
    ACCEPTANCE[k] = (ok, detail)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


if __name__ == "__main__":
    passed = True
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        passed &= ok
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
    sys.exit(0 if passed else 1)
