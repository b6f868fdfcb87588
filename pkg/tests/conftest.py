from __future__ import annotations

import itertools
from pathlib import Path

import networkx as nx
import pytest

from gposition.audit import random_corpus
from gposition.codecs import g6_decode
from gposition.graph import Graph, build_graph

DATA = Path(__file__).parent / "data"
CONNECTED_UPTO6 = DATA / "connected_upto6.g6"


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_nx(G: nx.Graph) -> Graph:
    nodes = sorted(G.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(index[u], index[v]) for u, v in G.edges()])


def nx_distances(g: Graph) -> list[list[int]]:
    """Distances from networkx with the same INF = n convention."""
    lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    return [[lengths[u].get(v, g.n) for v in range(g.n)] for u in range(g.n)]


def exhaustive_gp(g: Graph, required=()) -> int:
    """Largest triple-free subset containing ``required``, from networkx distances."""
    D = nx_distances(g)
    inf = g.n

    def ok(S):
        for u, v in itertools.combinations(S, 2):
            if D[u][v] >= inf:
                continue
            for w in S:
                if w not in (u, v) and D[u][w] + D[w][v] == D[u][v]:
                    return False
        return True

    req = set(required)
    rest = [v for v in range(g.n) if v not in req]
    for k in range(len(rest), -1, -1):
        for extra in itertools.combinations(rest, k):
            if ok(sorted(req | set(extra))):
                return len(req) + k
    return -1


def load_connected_upto6() -> list[Graph]:
    return [g6_decode(line) for line in CONNECTED_UPTO6.read_text().split()]


@pytest.fixture(scope="session")
def connected6() -> list[Graph]:
    return load_connected_upto6()


@pytest.fixture(scope="session")
def random_small() -> list[Graph]:
    return [g for _, g in random_corpus(60, seed=2024, max_n=9)]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number].line())
