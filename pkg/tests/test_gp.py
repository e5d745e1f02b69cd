import itertools
import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import brute_gp, brute_triple_gp, to_nx
from gpkit import families
from gpkit.gp import (
    clique_partition,
    distances,
    eta,
    gp_bruteforce,
    gp_certificate,
    gp_diameter2,
    gp_exact,
    gp_upper_bound,
    interval,
    is_gp_definitional,
    is_gp_structural,
    max_cluster_set,
)
from gpkit.graph import (
    DisconnectedGraphError,
    GraphError,
    clique_number,
    complete_graph,
    cycle_graph,
    diameter,
    empty_graph,
    graph_from_edges,
    induced_subgraph,
    is_clique,
    mask_of,
    path_graph,
)
from strategies import connected_graphs


def double_star(a, b):
    """Centres 0 and 1 with ``a`` and ``b`` leaves."""
    edges = [(0, 1)] + [(0, 2 + i) for i in range(a)] + [(1, 2 + a + i) for i in range(b)]
    return graph_from_edges(2 + a + b, edges)


class TestInterval:
    def test_c4_opposite_pair(self):
        assert interval(distances(cycle_graph(4)), 0, 2) == {0, 1, 2, 3}

    def test_adjacent_pair(self):
        assert interval(distances(complete_graph(5)), 0, 1) == {0, 1}

    def test_path_endpoints(self):
        assert interval(distances(path_graph(4)), 0, 3) == {0, 1, 2, 3}

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            interval(distances(empty_graph(2)), 0, 1)


class TestCheckers:
    @given(connected_graphs(max_n=8))
    def test_small_sets_always_pass(self, g):
        for k in range(3):
            for s in itertools.combinations(range(g.order), k):
                assert is_gp_definitional(g, s) and is_gp_structural(g, s)

    def test_c4_three_vertices(self):
        c4 = cycle_graph(4)
        assert not is_gp_definitional(c4, {0, 1, 2})
        assert not is_gp_structural(c4, {0, 1, 2})

    def test_c5_every_triple(self):
        c5 = cycle_graph(5)
        for s in itertools.combinations(range(5), 3):
            assert is_gp_definitional(c5, s) == is_gp_structural(c5, s) == brute_triple_gp(c5, s)
        # consecutive triples: the middle vertex lies between the ends
        assert not is_gp_definitional(c5, {0, 1, 2})
        assert is_gp_definitional(c5, {0, 1, 3})

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            is_gp_definitional(empty_graph(3), [0])
        with pytest.raises(DisconnectedGraphError):
            is_gp_structural(empty_graph(3), [0])

    def test_clique_partition(self):
        assert clique_partition(complete_graph(4), range(4)) == [frozenset(range(4))]
        assert clique_partition(path_graph(3), [0, 1, 2]) is None
        assert clique_partition(cycle_graph(4), [0, 2]) == [frozenset({0}), frozenset({2})]
        with pytest.raises(GraphError):
            clique_partition(path_graph(3), [])

    def test_double_star_leaves(self):
        g = double_star(2, 2)
        cert = gp_certificate(g, [2, 3, 4, 5])
        assert cert is not None
        assert sorted(len(b) for b in cert.blocks) == [1, 1, 1, 1]
        values = {d for row in cert.block_distance for d in row if d is not None}
        assert values == {2, 3}
        assert cert.violations(g, distances(g)) == []

    @given(connected_graphs(max_n=7))
    def test_agree_with_reference(self, g):
        for mask in range(1 << g.order):
            s = [v for v in range(g.order) if mask >> v & 1]
            ref = brute_triple_gp(g, s)
            assert is_gp_definitional(g, s) == ref
            assert is_gp_structural(g, s) == ref

    def test_downward_closure(self, atlas_connected):
        for n in range(1, 7):
            for g in atlas_connected[n]:
                dist = distances(g)
                good = {m for m in range(1 << n)
                        if is_gp_definitional(g, [v for v in range(n) if m >> v & 1], dist)}
                for m in good:
                    for v in range(n):
                        if m >> v & 1:
                            assert m & ~(1 << v) in good


class TestSolvers:
    @pytest.mark.parametrize(
        "g, value",
        [
            (complete_graph(1), 1),
            (complete_graph(2), 2),
            (path_graph(3), 2),
            (complete_graph(3), 3),
            (complete_graph(4), 4),
            (cycle_graph(5), 3),
            (path_graph(5), 2),
            (cycle_graph(4), 2),
        ],
    )
    def test_values(self, g, value):
        assert gp_bruteforce(g).value == value
        assert gp_exact(g).value == value

    def test_path_witnesses(self):
        p5 = path_graph(5)
        assert is_gp_definitional(p5, {0, 4})
        assert not is_gp_definitional(p5, {0, 2, 4})
        # any pair is a gp-set, ties break lexicographically
        assert gp_bruteforce(p5).witness == gp_exact(p5).witness == {0, 1}

    def test_c12(self):
        assert gp_exact(cycle_graph(12)).value == 3

    def test_f1_three_pendants(self):
        g = families.generate(families.parse_instance("F1 k=3"))
        assert g.order == 7
        assert gp_exact(g).value == 5 == brute_gp(g)

    def test_bruteforce_cap(self):
        with pytest.raises(GraphError):
            gp_bruteforce(path_graph(21))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            gp_exact(empty_graph(2))

    @pytest.mark.parametrize("g, bound, gp", [(path_graph(5), 2, 2), (complete_graph(9), 9, 9), (cycle_graph(6), 4, 3)])
    def test_upper_bound(self, g, bound, gp):
        assert gp_upper_bound(g) == bound
        assert gp_exact(g).value == gp

    def test_exact_matches_bruteforce_on_atlas(self, atlas_connected):
        for gs in atlas_connected.values():
            for g in gs:
                a, b = gp_exact(g), gp_bruteforce(g)
                assert a == b

    def test_within_clique_and_diameter_bounds(self, atlas_connected):
        for n, gs in atlas_connected.items():
            for g in gs:
                v = gp_exact(g).value
                assert clique_number(g) <= v
                if n > 1:
                    assert v <= gp_upper_bound(g)

    @given(connected_graphs(max_n=8))
    def test_against_reference(self, g):
        assert gp_exact(g).value == brute_gp(g)

    @given(connected_graphs(max_n=14))
    def test_witness_valid(self, g):
        res = gp_exact(g)
        assert len(res.witness) == res.value
        assert is_gp_definitional(g, res.witness)
        cert = gp_certificate(g, res.witness)
        assert cert is not None and cert.violations(g, distances(g)) == []

    def test_witness_is_lexicographically_smallest(self):
        rng = random.Random(3)
        for _ in range(60):
            n = rng.randint(3, 9)
            pairs = [(i, j) for j in range(n) for i in range(j)]
            g = graph_from_edges(n, [e for e in pairs if rng.random() < 0.4] + [(i, i + 1) for i in range(n - 1)])
            res = gp_exact(g)
            first = next(
                s for s in itertools.combinations(range(n), res.value) if brute_triple_gp(g, s)
            )
            assert sorted(res.witness) == list(first)

    def test_shortest_cycle_meets_witness_in_general_position(self, atlas_connected):
        for gs in atlas_connected.values():
            for g in gs:
                cycle = _shortest_cycle(g)
                if cycle is None:
                    continue
                s = gp_exact(g).witness
                on_cycle = [i for i, v in enumerate(cycle) if v in s]
                c = cycle_graph(len(cycle))
                assert is_gp_definitional(c, on_cycle)
                assert len(on_cycle) <= (2 if len(cycle) == 4 else 3)


def _shortest_cycle(g):
    h = to_nx(g)
    best = None
    for u, v in list(h.edges()):
        h.remove_edge(u, v)
        if nx.has_path(h, u, v):
            path = nx.shortest_path(h, u, v)
            if best is None or len(path) < len(best):
                best = path
        h.add_edge(u, v)
    return best


class TestEta:
    def test_examples(self):
        assert eta(cycle_graph(5)) == 3
        assert eta(complete_graph(6)) == 6
        assert eta(cycle_graph(4)) == 2

    def test_c5_witness_is_edge_plus_far_vertex(self):
        s = max_cluster_set(cycle_graph(5))
        h, _ = induced_subgraph(cycle_graph(5), s)
        assert h.size() == 1

    @given(connected_graphs(max_n=8))
    def test_against_all_subsets(self, g):
        best = 0
        for mask in range(1, 1 << g.order):
            s = [v for v in range(g.order) if mask >> v & 1]
            h, _ = induced_subgraph(g, s)
            if all(is_clique(h, mask_of(c)) for c in nx.connected_components(to_nx(h))):
                best = max(best, len(s))
        assert eta(g) == best

    def test_diameter2_formula(self):
        assert gp_diameter2(cycle_graph(5)) == 3
        assert gp_diameter2(cycle_graph(4)) == 2
        with pytest.raises(GraphError):
            gp_diameter2(path_graph(4))

    def test_f5_member(self):
        g = families.generate(families.parse_instance("F5 b=3 S=[0,1] T=[1]"))
        assert diameter(g) == 2
        assert gp_diameter2(g) == g.order - 2 == gp_exact(g).value

    def test_diameter2_atlas(self, atlas_connected):
        for n in range(3, 8):
            for g in atlas_connected[n]:
                if diameter(g) == 2:
                    assert gp_diameter2(g) == gp_exact(g).value
