"""Command-line front end.

Exit codes: 0 success or yes, 1 definite negative, 2 input error,
3 search budget exhausted or interrupted.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .cycle_space import DEFAULT_BUDGET, check_basis
from .embedder import embed_from_simple_basis, planarity_by_blocks
from .embedding import Embedding, facial_basis, is_planar_embedding
from .errors import (
    FaceIndexOutOfRange,
    InternalContradiction,
    MaclaneError,
    NotASimpleBasis,
    NotPlanarEmbedding,
    NotTwoConnected,
    ParseError,
    SearchBudgetExceeded,
    ThreadCoverViolation,
    UnknownEdgeId,
)
from .formats import (
    format_basis,
    format_certificate,
    format_embedding,
    format_graph,
    read_basis,
    read_embedding,
    read_graph,
    write_embedding,
)
from .graph import Graph, HalfEdge, is_connected
from .oracle import DEFAULT_ROTATION_BUDGET, enumerate_two_connected_graphs, random_planar_two_connected
from .render import render_svg

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _budget(args, default: int) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("MACLANE_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"MACLANE_BUDGET is not an integer: {env!r}") from None
    return default


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def cmd_verify_basis(args) -> int:
    g = read_graph(args.graph)
    b = read_basis(args.basis)
    report = check_basis(g, b)
    print(f"simple-basis: {'yes' if report.is_simple else 'no'}")
    for p in report.problems():
        print(f"  {p}")
    return EXIT_OK if report.is_simple else EXIT_NO


def cmd_embed(args) -> int:
    g = read_graph(args.graph)
    b = read_basis(args.basis)
    try:
        result = embed_from_simple_basis(g, b)
    except (NotASimpleBasis, ThreadCoverViolation) as exc:
        print("simple-basis: no")
        problems = exc.report.problems() if exc.report is not None else [str(exc)]
        for line in problems:
            print(f"  {line}")
        return EXIT_NO
    emb = result.embedding
    write_embedding(emb, args.out)
    report = format_certificate(True, result.residual_circuit, emb.faces())
    _emit(report, args.report)
    if args.svg:
        Path(args.svg).write_text(render_svg(emb, result.residual_face), encoding="ascii")
    return EXIT_OK


def cmd_extract_basis(args) -> int:
    emb = read_embedding(args.embedding)
    faces = emb.faces() if emb.graph.vertices else []
    if not 0 <= args.face < len(faces):
        raise FaceIndexOutOfRange(f"face index {args.face} out of range (embedding has {len(faces)} faces)")
    _emit(format_basis(facial_basis(emb, faces[args.face])), args.out)
    return EXIT_OK


def glue_blocks(g: Graph, block_embeddings: list[Embedding], bridges: list[int]) -> Embedding:
    """Concatenate block rotations at shared vertices into one rotation system."""
    rotation: dict[int, list[HalfEdge]] = {v: [] for v in g.vertices}
    for emb in block_embeddings:
        for v, cyc in emb.rotation.items():
            rotation[v].extend(cyc)
    for e in bridges:
        u, v = g.endpoints(e)
        rotation[u].append(HalfEdge(e, 0))
        rotation[v].append(HalfEdge(e, 1))
    return Embedding(g, rotation)


def cmd_planarity(args) -> int:
    g = read_graph(args.graph)
    default = DEFAULT_BUDGET if args.method == "basis" else DEFAULT_ROTATION_BUDGET
    budget = _budget(args, default)
    try:
        verdict = planarity_by_blocks(g, args.method, budget)
    except SearchBudgetExceeded:
        print("planar: unknown(budget)")
        return EXIT_BUDGET
    print(f"planar: {'yes' if verdict.planar else 'no'}")
    if not verdict.planar:
        bad = next(b for b in verdict.blocks if not b.planar)
        print(f"  non-planar block edges: {' '.join(map(str, sorted(bad.block.edges)))}")
        return EXIT_NO
    if args.method == "basis" and g.num_edges and is_connected(g):
        embs = [b.certificate.embedding for b in verdict.blocks if b.certificate is not None]
        bridges = [min(b.block.edges) for b in verdict.blocks if b.block.num_edges == 1]
        cert = glue_blocks(g, embs, bridges)
        if not is_planar_embedding(cert):
            raise InternalContradiction("glued block embeddings are not planar")
        _emit(format_embedding(cert), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "exhaustive":
        graphs = list(enumerate_two_connected_graphs(args.max_vertices, args.max_edges, args.multiplicity))
        if args.out_dir:
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            for k, g in enumerate(graphs):
                (out / f"graph_{k:05d}.txt").write_text(format_graph(g), encoding="ascii")
            print(f"{len(graphs)} graphs written to {out}")
        else:
            sys.stdout.write("".join(format_graph(g) for g in graphs))
    else:
        g, emb = random_planar_two_connected(args.seed, args.vertices)
        _emit(format_graph(g), args.out)
        if args.embedding_out:
            write_embedding(emb, args.embedding_out)
    return EXIT_OK


def cmd_render(args) -> int:
    emb = read_embedding(args.embedding)
    outer = None
    if args.outer_face is not None:
        faces = emb.faces()
        if not 0 <= args.outer_face < len(faces):
            raise FaceIndexOutOfRange(f"face index {args.outer_face} out of range")
        outer = faces[args.outer_face]
    if not is_planar_embedding(emb):
        raise NotPlanarEmbedding("embedding is not planar")
    Path(args.out).write_text(render_svg(emb, outer), encoding="ascii")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maclane", description="Planarity through simple cycle bases.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-basis", help="check that a basis file is a simple cycle basis")
    s.add_argument("graph")
    s.add_argument("basis")
    s.set_defaults(func=cmd_verify_basis)

    s = sub.add_parser("embed", help="build the embedding realizing a simple basis")
    s.add_argument("graph")
    s.add_argument("basis")
    s.add_argument("--out", required=True, help="embedding file to write")
    s.add_argument("--report", help="write the certificate report here instead of stdout")
    s.add_argument("--svg", help="also draw the embedding")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("extract-basis", help="facial basis of an embedding, omitting one face")
    s.add_argument("embedding")
    s.add_argument("face", type=int, help="index into the face list (ordered by least half-edge)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_extract_basis)

    s = sub.add_parser("planarity", help="decide planarity")
    s.add_argument("graph")
    s.add_argument("--method", choices=["basis", "rotations"], default="basis")
    s.add_argument("--budget", type=int)
    s.add_argument("--out", help="certificate embedding (basis method); stdout by default")
    s.set_defaults(func=cmd_planarity)

    s = sub.add_parser("gen", help="generate test graphs")
    gsub = s.add_subparsers(dest="kind", required=True)
    e = gsub.add_parser("exhaustive", help="all 2-connected graphs up to isomorphism")
    e.add_argument("--max-vertices", type=int, required=True)
    e.add_argument("--max-edges", type=int)
    e.add_argument("--multiplicity", type=int, default=1)
    e.add_argument("--out-dir")
    r = gsub.add_parser("random", help="random 2-connected planar graph")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--vertices", type=int, required=True)
    r.add_argument("--out")
    r.add_argument("--embedding-out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("render", help="draw an embedding as SVG")
    s.add_argument("embedding")
    s.add_argument("--out", required=True)
    s.add_argument("--outer-face", type=int)
    s.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KeyboardInterrupt:
        _err("interrupted")
        return EXIT_BUDGET
    except SearchBudgetExceeded as exc:
        _err(str(exc))
        return EXIT_BUDGET
    except NotPlanarEmbedding as exc:
        _err(str(exc))
        return EXIT_NO
    except (ParseError, UnknownEdgeId, NotTwoConnected, FaceIndexOutOfRange, OSError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except (MaclaneError, ValueError) as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
