"""Search effort for the simple-basis criterion on named graphs, with and without the extra prunes.

The unpruned search on K6 (197 circuits, dimension 10) does not finish in
reasonable time; it stops at ``budget`` nodes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from maclane.cycle_space import SimpleBasisSearch
from maclane.errors import SearchBudgetExceeded
from maclane.graph import Graph, complete_bipartite, complete_graph, theta_graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edge_list(outer + spokes + inner)


@dataclass
class Config:
    graphs: dict = field(
        default_factory=lambda: {
            "K4": complete_graph(4),
            "theta(2,3,4)": theta_graph(2, 3, 4),
            "K3,3": complete_bipartite(3, 3),
            "K5": complete_graph(5),
            "K2,5": complete_bipartite(2, 5),
            "K6": complete_graph(6),
            "Petersen": petersen(),
        }
    )
    budget: int = 2_000_000


def main(cfg: Config = Config()) -> None:
    print(f"{'graph':<14} {'prune':<6} {'circuits':>9} {'nodes':>10} {'basis':>6} {'seconds':>8}")
    for name, g in cfg.graphs.items():
        for prune in (True, False):
            search = SimpleBasisSearch(g, budget=cfg.budget, prune=prune)
            t = time.perf_counter()
            try:
                found = str(next(iter(search), None) is not None)
            except SearchBudgetExceeded:
                found = "budget"
            dt = time.perf_counter() - t
            print(f"{name:<14} {str(prune):<6} {search.stats.circuits:>9} {search.stats.nodes:>10} {found:>6} {dt:>8.2f}")


if __name__ == "__main__":
    main()
