"""Embed, extract every facial basis, re-embed, and time it on random planar graphs.

    python scripts/round_trip.py --seeds 200 --max-vertices 50
"""

from __future__ import annotations

import argparse
import dataclasses
import statistics
import time
from dataclasses import dataclass

from maclane.embedder import embed_from_simple_basis
from maclane.embedding import facial_basis, facial_circuits, faces
from maclane.oracle import random_planar_two_connected


@dataclass
class Config:
    seeds: int = 200
    max_vertices: int = 50
    max_inner: int = 2


def parse_config() -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in dataclasses.fields(Config):
        p.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    return Config(**vars(p.parse_args()))


def main() -> None:
    cfg = parse_config()
    per_embed = []
    failures = 0
    t0 = time.perf_counter()
    for seed in range(cfg.seeds):
        n = 3 + seed % (cfg.max_vertices - 2)
        g, emb = random_planar_two_connected(seed, n, cfg.max_inner)
        want = sorted(sorted(c) for c in facial_circuits(emb))
        for f in faces(emb):
            t = time.perf_counter()
            r = embed_from_simple_basis(g, facial_basis(emb, f))
            per_embed.append(time.perf_counter() - t)
            failures += sorted(sorted(c) for c in facial_circuits(r.embedding)) != want
    total = time.perf_counter() - t0
    print(f"graphs {cfg.seeds}  embeddings {len(per_embed)}  failures {failures}")
    print(f"total {total:.1f}s  median embed {1e3 * statistics.median(per_embed):.2f}ms  max {1e3 * max(per_embed):.2f}ms")


if __name__ == "__main__":
    main()
