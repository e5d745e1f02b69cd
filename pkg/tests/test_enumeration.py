import io
import logging

import networkx as nx
import pytest

from conftest import to_nx
from gpkit.enumeration import (
    enumerate_connected,
    enumerate_graphs,
    read_graph6_file,
    read_graph6_stream,
    read_graph6_text,
    write_graph6,
)
from gpkit.graph import GraphError, canonical_key, cycle_graph, is_connected
from gpkit.graph6 import Graph6Error


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)])
def test_connected_counts(n, count):
    assert len(enumerate_connected(n)) == count


@pytest.mark.slow
def test_connected_count_order_8():
    assert len(enumerate_connected(8)) == 11117


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_all_graph_counts(n, count):
    assert len(enumerate_graphs(n)) == count


def test_order_range():
    with pytest.raises(GraphError):
        enumerate_connected(0)
    with pytest.raises(GraphError):
        enumerate_connected(9)


def test_classes_match_atlas(atlas_connected):
    # the atlas lists each graph on up to 7 vertices once, independently of our keys
    for n in range(1, 8):
        ours = {canonical_key(g) for g in enumerate_connected(n)}
        theirs = {canonical_key(g) for g in atlas_connected[n]}
        assert ours == theirs


def test_representatives_pairwise_non_isomorphic():
    gs = [to_nx(g) for g in enumerate_connected(6)]
    for i, a in enumerate(gs):
        for b in gs[i + 1:]:
            if a.number_of_edges() == b.number_of_edges():
                assert not nx.is_isomorphic(a, b)


def test_stream_is_sorted_and_connected():
    gs = enumerate_connected(5).graphs
    assert all(is_connected(g) for g in gs)
    keys = [(g.size(), canonical_key(g)) for g in gs]
    assert keys == sorted(keys)
    assert gs[0].size() == 4 and gs[-1].size() == 10


class TestReading:
    def test_single_vertex(self):
        s = read_graph6_text("@\n")
        assert len(s) == 1 and s.graphs[0].order == 1

    def test_empty_input(self):
        assert len(read_graph6_text("")) == 0
        assert len(read_graph6_text(">>graph6<<\n\n")) == 0

    def test_round_trip_order_5(self, tmp_path):
        gs = enumerate_connected(5).graphs
        path = tmp_path / "five.g6"
        with open(path, "w") as fh:
            write_graph6(gs, fh)
        back = read_graph6_file(str(path))
        assert back.graphs == gs
        assert back.provenance == str(path)

    def test_strict_reports_line(self):
        with pytest.raises(Graph6Error, match="line 3"):
            read_graph6_text("Cl\n\nC!\n")

    def test_lenient_skips_and_logs(self, caplog):
        with caplog.at_level(logging.WARNING):
            s = read_graph6_text("Cl\nzz\nCl\n", strict=False)
        assert len(s) == 2
        assert [ln for ln, _ in s.errors] == [2]
        assert "line 2" in caplog.text

    def test_dedup(self):
        # Cl and C] are two labellings of C4
        s = read_graph6_text("Cl\nC]\nCF\n", dedup=True)
        assert [g == cycle_graph(4) for g in s] == [True, False]
        assert len(read_graph6_text("Cl\nC]\nCF\n")) == 3

    def test_bytes_stream(self):
        s = read_graph6_stream(io.BytesIO(b"Cl\r\nD?{\n"))
        assert [g.order for g in s] == [4, 5]
