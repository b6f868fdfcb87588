"""Write every connected graph on 1..6 vertices (up to isomorphism) as graph6 lines.

Uses the networkx graph atlas, which lists all graphs on at most 7 vertices.
"""

import sys

import networkx as nx

from gposition.codecs import g6_encode
from gposition.graph import build_graph


def main(path: str, max_n: int = 6) -> None:
    count = 0
    with open(path, "w") as fh:
        for G in nx.graph_atlas_g():
            n = G.number_of_nodes()
            if n == 0 or n > max_n or not nx.is_connected(G):
                continue
            fh.write(g6_encode(build_graph(n, G.edges())) + "\n")
            count += 1
    print(f"wrote {count} graphs to {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_upto6.g6")
