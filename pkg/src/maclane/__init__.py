"""Planarity of 2-connected multigraphs through simple cycle bases.

A 2-connected graph is planar exactly when its cycle space has a basis of
circuits covering every edge at most twice; given such a basis,
:func:`embed_from_simple_basis` builds an embedding whose faces are the
basis members plus one residual face.
"""

from .cycle_space import (
    check_basis,
    cycle_space_dimension,
    edge_multiplicity,
    enumerate_circuits,
    find_simple_basis_bruteforce,
    fundamental_cycle_basis,
    is_basis,
    is_circuit,
    is_cycle_space_member,
    is_simple_basis,
    iter_simple_bases,
    sym_diff,
)
from .embedder import (
    EmbeddingWithResidualFace,
    embed_from_simple_basis,
    is_planar_via_basis,
    planarity_by_blocks,
)
from .embedding import (
    Embedding,
    Face,
    facial_basis,
    facial_circuits,
    faces,
    insert_path_chord,
    is_planar_embedding,
)
from .graph import (
    Graph,
    HalfEdge,
    Thread,
    block_decomposition,
    find_reducible_thread,
    induced_edge_subgraph,
    is_cycle,
    is_two_connected,
    remove_thread,
    threads,
)
from .oracle import enumerate_two_connected_graphs, is_planar_bruteforce, random_planar_two_connected

__version__ = "0.1.0"
