from hypothesis import strategies as st

from gpkit.graph import graph_from_edges, is_connected


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    g = draw(graphs(min_n, max_n))
    # join components along a path so the sample stays connected
    from gpkit.graph import components, members

    comps = [members(c)[0] for c in components(g)]
    extra = list(zip(comps, comps[1:]))
    g = graph_from_edges(g.order, list(g.edges()) + extra)
    assert is_connected(g)
    return g


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))
