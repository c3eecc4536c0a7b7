import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import ear_graphs
from maclane.cycle_space import gf2_sum, is_simple_basis
from maclane.embedding import (
    Embedding,
    Face,
    PlaneBuilder,
    cycle_embedding,
    euler_characteristic,
    facial_basis,
    facial_circuits,
    faces,
    insert_path_chord,
    is_planar_embedding,
    normalize_cycle,
)
from maclane.errors import (
    EndpointNotOnFace,
    FaceNotInEmbedding,
    NotConnected,
    NotPlanarEmbedding,
    NotTwoConnected,
    PathNotDisjoint,
)
from maclane.graph import Graph, HalfEdge, Thread, cycle_graph
from maclane.oracle import random_planar_two_connected


def H(s: str) -> HalfEdge:
    e, end = s.split(".")
    return HalfEdge(int(e), int(end))


def rot(table: dict[int, str]) -> dict[int, list[HalfEdge]]:
    return {v: [H(t) for t in s.split()] for v, s in table.items()}


# K4 drawn with 0 in the middle of the triangle 1, 2, 3 (counterclockwise orders)
K4_PLANAR = rot({0: "0.0 1.0 2.0", 1: "3.0 0.1 4.0", 2: "5.0 1.1 3.1", 3: "4.1 2.1 5.1"})


@pytest.fixture
def k4_emb(k4):
    return Embedding(k4, K4_PLANAR)


def test_normalize_cycle():
    assert normalize_cycle([3, 1, 2]) == (1, 2, 3)
    assert normalize_cycle([]) == ()


def test_rotation_must_permute_incidences(k4):
    bad = dict(K4_PLANAR)
    bad[0] = [H("0.0"), H("1.0")]
    with pytest.raises(ValueError):
        Embedding(k4, bad)
    with pytest.raises(ValueError):
        Embedding(k4, {**K4_PLANAR, 9: []})


def test_rotation_is_normalized(k4):
    a = Embedding(k4, K4_PLANAR)
    b = Embedding(k4, {**K4_PLANAR, 0: [H("1.0"), H("2.0"), H("0.0")]})
    assert a == b and hash(a) == hash(b)


def test_triangle_faces(triangle):
    emb = cycle_embedding(triangle)
    fs = faces(emb)
    assert len(fs) == 2
    assert all(f.circuit == frozenset(triangle.edges) for f in fs)
    assert is_planar_embedding(emb)
    assert facial_circuits(emb) == [frozenset({0, 1, 2})] * 2
    assert facial_basis(emb, fs[1]) == [frozenset({0, 1, 2})]


def test_k4_faces(k4_emb):
    fs = faces(k4_emb)
    assert len(fs) == 4
    assert all(len(f) == 3 for f in fs)
    assert euler_characteristic(k4_emb) == 2
    assert sorted(map(sorted, facial_circuits(k4_emb))) == [[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]]


def test_k4_facial_basis_is_simple(k4, k4_emb):
    outer = next(f for f in faces(k4_emb) if f.circuit == {3, 4, 5})
    b = facial_basis(k4_emb, outer)
    assert len(b) == 3
    assert is_simple_basis(k4, b)


def _all_rotations(g):
    per_vertex = []
    for v in sorted(g.vertices):
        inc = list(g.incidence(v))
        per_vertex.append([[inc[0], *p] for p in itertools.permutations(inc[1:])])
    for choice in itertools.product(*per_vertex):
        yield Embedding(g, dict(zip(sorted(g.vertices), choice)))


def test_k5_never_has_seven_faces(k5):
    counts = {len(faces(emb)) for emb in _all_rotations(k5)}
    assert 7 not in counts
    assert max(counts) == 5  # K5 embeds on the torus: 5 - 10 + 5 = 0


def test_k5_rotation_is_not_planar(k5):
    emb = next(_all_rotations(k5))
    assert not is_planar_embedding(emb)
    with pytest.raises(NotPlanarEmbedding):
        facial_circuits(emb)


def test_theta_faces_are_pairwise_path_unions(theta):
    base = cycle_embedding(theta.edge_subgraph([0, 1, 2]))
    emb = insert_path_chord(base, faces(base)[0], Thread((0, 3, 1), (3, 4)), 0, 1)
    assert emb.graph == theta
    got = sorted(sorted(c) for c in facial_circuits(emb))
    assert got == [[0, 1, 2], [0, 3, 4], [1, 2, 3, 4]]
    for f in faces(emb):
        assert is_simple_basis(theta, facial_basis(emb, f))


def test_chord_path_through_triangle(triangle):
    emb = cycle_embedding(triangle)
    f = faces(emb)[0]
    out = insert_path_chord(emb, f, Thread((0, 3, 1), (3, 4)), 0, 1)
    assert len(faces(out)) == 3
    assert is_planar_embedding(out)
    assert out.graph.endpoints(3) == (0, 3) and out.graph.endpoints(4) == (3, 1)


def test_chord_across_square():
    sq = cycle_graph(4)
    emb = cycle_embedding(sq)
    inner, other = faces(emb)
    out = insert_path_chord(emb, inner, Thread((0, 2), (4,)), 0, 2)
    fs = faces(out)
    assert len(fs) == 3
    assert sorted(len(f) for f in fs) == [3, 3, 4]
    assert other in fs


def test_chord_reversed_path_is_accepted():
    sq = cycle_graph(4)
    emb = cycle_embedding(sq)
    out = insert_path_chord(emb, faces(emb)[0], Thread((2, 0), (4,)), 0, 2)
    assert out.graph.num_edges == 5


def test_chord_errors(k4, k4_emb):
    f = next(f for f in faces(k4_emb) if f.circuit == {3, 4, 5})  # vertices 1, 2, 3
    with pytest.raises(EndpointNotOnFace):
        insert_path_chord(k4_emb, f, Thread((0, 9, 1), (6, 7)), 0, 1)
    with pytest.raises(PathNotDisjoint):
        insert_path_chord(k4_emb, f, Thread((1, 2), (3,)), 1, 2)
    with pytest.raises(PathNotDisjoint):
        insert_path_chord(k4_emb, f, Thread((1, 0, 2), (6, 7)), 1, 2)
    with pytest.raises(FaceNotInEmbedding):
        insert_path_chord(k4_emb, Face((H("0.0"),)), Thread((1, 2), (6,)), 1, 2)


def test_face_errors(k4_emb):
    with pytest.raises(FaceNotInEmbedding):
        facial_basis(k4_emb, Face((H("0.0"), H("3.0"))))
    path = Graph.from_edge_list([(0, 1), (1, 2)])
    emb = Embedding(path, {0: [H("0.0")], 1: [H("0.1"), H("1.0")], 2: [H("1.1")]})
    assert is_planar_embedding(emb)
    with pytest.raises(NotTwoConnected):
        facial_circuits(emb)
    split = Graph.from_edge_list([(0, 1), (2, 3)])
    with pytest.raises(NotConnected):
        faces(Embedding(split, {0: [H("0.0")], 1: [H("0.1")], 2: [H("1.0")], 3: [H("1.1")]}))


def test_builder_from_embedding_round_trip(k4_emb):
    b, ids = PlaneBuilder.from_embedding(k4_emb)
    assert len(ids) == 4
    assert b.embedding() == k4_emb


def _check_darts(emb):
    darts = [h for f in faces(emb) for h in f.walk]
    assert sorted(darts) == sorted(emb.graph.half_edges())
    for f in faces(emb):
        for k, h in enumerate(f.walk):
            nxt = f.walk[(k + 1) % len(f.walk)]
            assert emb.graph.head(h) == emb.graph.tail(nxt)


@settings(max_examples=60)
@given(st.integers(0, 10**6), st.integers(3, 14))
def test_random_planar_embeddings(seed, n):
    g, emb = random_planar_two_connected(seed, n)
    assert oracles.two_connected(g)
    assert is_planar_embedding(emb)
    _check_darts(emb)
    fcs = facial_circuits(emb)
    assert gf2_sum(fcs) == frozenset()
    for f in faces(emb):
        assert is_simple_basis(g, facial_basis(emb, f))


@given(ear_graphs(), st.randoms(use_true_random=False))
def test_random_rotations_have_even_euler_characteristic(g, rnd):
    rotation = {}
    for v in g.vertices:
        inc = list(g.incidence(v))
        rnd.shuffle(inc)
        rotation[v] = inc
    emb = Embedding(g, rotation)
    _check_darts(emb)
    chi = euler_characteristic(emb)
    assert chi <= 2 and chi % 2 == 0


@settings(max_examples=60)
@given(st.integers(0, 10**6), st.integers(3, 10), st.integers(0, 3))
def test_random_chord_insertion_keeps_planarity(seed, n, inner):
    g, emb = random_planar_two_connected(seed, n)
    rng = random.Random(seed)
    f = rng.choice(faces(emb))
    i, j = rng.sample(range(len(f)), 2) if len(f) > 1 else (0, 0)
    x, y = g.tail(f.walk[i]), g.tail(f.walk[j])
    if x == y:
        return
    nv, ne = max(g.vertices) + 1, max(g.edges) + 1
    path = Thread((x, *range(nv, nv + inner), y), tuple(range(ne, ne + inner + 1)))
    out = insert_path_chord(emb, f, path, x, y, positions=(i, j))
    assert is_planar_embedding(out)
    assert len(faces(out)) == len(faces(emb)) + 1
    kept = [h for h in faces(emb) if h != f]
    assert all(h in faces(out) for h in kept)
