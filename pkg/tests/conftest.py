import itertools
import sys

import networkx as nx
import pytest
from hypothesis import settings

from gpkit.graph import Graph, graph_from_edges

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return graph_from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def brute_triple_gp(g: Graph, s) -> bool:
    """Reference general position test straight from shortest path lengths."""
    d = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    for u, v, w in itertools.permutations(s, 3):
        if d[u][w] + d[w][v] == d[u][v]:
            return False
    return True


def brute_gp(g: Graph) -> int:
    n = g.order
    for k in range(n, 0, -1):
        for s in itertools.combinations(range(n), k):
            if brute_triple_gp(g, s):
                return k
    return 0


@pytest.fixture(scope="session")
def atlas_connected():
    """Connected graphs up to order 7 from the networkx graph atlas, by order."""
    out = {}
    for h in nx.graph_atlas_g()[1:]:
        if nx.is_connected(h):
            out.setdefault(h.number_of_nodes(), []).append(from_nx(h))
    return out


def pytest_terminal_summary(terminalreporter):
    lines = getattr(sys.modules.get("test_acceptance"), "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
