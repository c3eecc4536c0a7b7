"""Compare simple-basis existence with rotation-system planarity over an exhaustive corpus.

    python scripts/criterion_vs_oracle.py --max-vertices 6
"""

from __future__ import annotations

import argparse
import dataclasses
import time
from collections import defaultdict
from dataclasses import dataclass

from maclane.cycle_space import SimpleBasisSearch
from maclane.oracle import enumerate_two_connected_graphs, is_planar_bruteforce


@dataclass
class Config:
    max_vertices: int = 6
    multiplicity: int = 1
    face_bound: bool = False  # True skips enumeration for graphs too dense to be planar
    prune: bool = True


def parse_config() -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in dataclasses.fields(Config):
        if f.type in ("bool", bool):
            p.add_argument(f"--{f.name.replace('_', '-')}", action=argparse.BooleanOptionalAction, default=f.default)
        else:
            p.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    return Config(**vars(p.parse_args()))


def main() -> None:
    cfg = parse_config()
    rows = defaultdict(lambda: dict(graphs=0, planar=0, disagree=0, nodes=0, t_basis=0.0, t_rot=0.0))
    for g in enumerate_two_connected_graphs(cfg.max_vertices, multiplicity=cfg.multiplicity):
        r = rows[g.num_vertices]
        t = time.perf_counter()
        search = SimpleBasisSearch(g, budget=None, prune=cfg.prune)
        by_basis = next(iter(search), None) is not None
        r["t_basis"] += time.perf_counter() - t
        r["nodes"] += search.stats.nodes
        t = time.perf_counter()
        by_rot = is_planar_bruteforce(g, budget=None, face_bound=cfg.face_bound)
        r["t_rot"] += time.perf_counter() - t
        r["graphs"] += 1
        r["planar"] += by_rot
        r["disagree"] += by_basis != by_rot
    print(f"{'n':>3} {'graphs':>7} {'planar':>7} {'disagree':>9} {'nodes':>10} {'basis s':>9} {'rotation s':>11}")
    for n in sorted(rows):
        r = rows[n]
        print(f"{n:>3} {r['graphs']:>7} {r['planar']:>7} {r['disagree']:>9} {r['nodes']:>10} {r['t_basis']:>9.2f} {r['t_rot']:>11.2f}")


if __name__ == "__main__":
    main()
