"""General position sets: intervals, the two set checkers and exact gp(G).

A set ``S`` is in general position when no member lies on a shortest path
between two other members.  Two independent membership tests are provided:

* :func:`is_gp_definitional` looks for a triple ``u, w, v`` in ``S`` with
  ``d(u, w) + d(w, v) == d(u, v)``;
* :func:`is_gp_structural` requires the components of ``G[S]`` to be cliques
  whose vertex sets form a distance-constant, in-transitive partition.

Exact search treats both gp(G) and eta(G) as a largest vertex set avoiding a
family of forbidden triples (collinear triples, respectively induced paths on
three vertices) and runs the bitset branch and bound from :mod:`gpkit.kernels`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from gpkit import kernels
from gpkit.graph import (
    DisconnectedGraphError,
    DistMatrix,
    Graph,
    GraphError,
    all_pairs_distances,
    components,
    is_clique,
    mask_of,
    max_clique,
    members,
)

BRUTEFORCE_MAX_ORDER = 20


@dataclass(frozen=True)
class GpCertificate:
    """Clique blocks of ``G[S]`` with their pairwise distances.

    ``block_distance[i][j]`` is the common distance between the blocks;
    the diagonal holds ``None``.
    """

    blocks: tuple[frozenset[int], ...]
    block_distance: tuple[tuple[Optional[int], ...], ...]

    def violations(self, g: Graph, dist: DistMatrix) -> list[str]:
        """Invariant violations of this certificate against ``g`` (empty if valid)."""
        problems = []
        seen: set[int] = set()
        for i, block in enumerate(self.blocks):
            if not block:
                problems.append(f"block {i} is empty")
            if seen & block:
                problems.append(f"block {i} overlaps an earlier block")
            seen |= block
            if not is_clique(g, mask_of(block)):
                problems.append(f"block {i} does not induce a clique")
        p = len(self.blocks)
        for i, j in itertools.permutations(range(p), 2):
            dij = self.block_distance[i][j]
            if dij is None or dij < 1 or dij != self.block_distance[j][i]:
                problems.append(f"bad block distance ({i}, {j})")
                continue
            for u in self.blocks[i]:
                for v in self.blocks[j]:
                    if dist[u, v] != dij:
                        problems.append(f"d({u},{v}) != block distance ({i}, {j})")
        for i, j, k in itertools.permutations(range(p), 3):
            bd = self.block_distance
            if bd[i][k] == bd[i][j] + bd[j][k]:
                problems.append(f"blocks {i}, {j}, {k} are transitive")
        return problems


@dataclass(frozen=True)
class GpResult:
    value: int
    witness: frozenset[int]


def _connected_distances(g: Graph, dist: Optional[DistMatrix] = None) -> DistMatrix:
    dist = dist or distances(g)
    if not dist.connected:
        raise DisconnectedGraphError("operation requires a connected graph")
    return dist


@lru_cache(maxsize=4096)
def distances(g: Graph) -> DistMatrix:
    """Cached :func:`gpkit.graph.all_pairs_distances`."""
    return all_pairs_distances(g)


def interval(d: DistMatrix, u: int, v: int) -> frozenset[int]:
    duv = d[u, v]
    if duv is None:
        raise DisconnectedGraphError(f"vertices {u} and {v} are not connected")
    out = []
    for w in range(d.order):
        duw, dwv = d[u, w], d[w, v]
        if duw is not None and dwv is not None and duw + dwv == duv:
            out.append(w)
    return frozenset(out)


def is_gp_definitional(g: Graph, s: Iterable[int], dist: Optional[DistMatrix] = None) -> bool:
    d = _connected_distances(g, dist).rows
    verts = sorted(set(s))
    for u, v in itertools.combinations(verts, 2):
        duv = d[u][v]
        du, dv = d[u], d[v]
        for w in verts:
            if w != u and w != v and du[w] + dv[w] == duv:
                return False
    return True


def clique_partition(g: Graph, s: Iterable[int]) -> Optional[list[frozenset[int]]]:
    """Components of ``G[s]``, or ``None`` when some component is not a clique."""
    smask = mask_of(s)
    if not smask:
        raise GraphError("clique partition needs a nonempty vertex set")
    blocks = []
    for comp in components(g, smask):
        if not is_clique(g, comp):
            return None
        blocks.append(frozenset(members(comp)))
    return blocks


def gp_certificate(
    g: Graph, s: Iterable[int], dist: Optional[DistMatrix] = None
) -> Optional[GpCertificate]:
    """Structural certificate for ``s``, or ``None`` when ``s`` is not in general position."""
    d = _connected_distances(g, dist)
    s = list(s)
    if not s:
        return GpCertificate((), ())
    blocks = clique_partition(g, s)
    if blocks is None:
        return None
    p = len(blocks)
    table: list[list[Optional[int]]] = [[None] * p for _ in range(p)]
    for i, j in itertools.combinations(range(p), 2):
        found = {d[u, v] for u in blocks[i] for v in blocks[j]}
        if len(found) != 1:
            return None
        table[i][j] = table[j][i] = found.pop()
    for i, j, k in itertools.permutations(range(p), 3):
        if table[i][k] == table[i][j] + table[j][k]:
            return None
    return GpCertificate(tuple(blocks), tuple(tuple(row) for row in table))


def is_gp_structural(g: Graph, s: Iterable[int], dist: Optional[DistMatrix] = None) -> bool:
    return gp_certificate(g, s, dist) is not None


def gp_upper_bound(g: Graph, dist: Optional[DistMatrix] = None) -> int:
    if g.order < 2:
        raise GraphError("the diameter bound needs at least 2 vertices")
    d = _connected_distances(g, dist)
    return g.order - d.max_distance() + 1


def gp_bruteforce(g: Graph, dist: Optional[DistMatrix] = None) -> GpResult:
    """Exhaustive gp(G): all subsets, largest size first, lexicographic witness."""
    if g.order > BRUTEFORCE_MAX_ORDER:
        raise GraphError(f"brute force is capped at order {BRUTEFORCE_MAX_ORDER}")
    d = _connected_distances(g, dist)
    size, mask = kernels.gp_brute(g.order, d.flat(), g.order)
    return GpResult(size, frozenset(members(mask)))


def collinear_table(d: DistMatrix) -> list[int]:
    """``table[a*n+b]``: vertices ``c`` with ``{a, b, c}`` on a common geodesic."""
    n = d.order
    rows = d.rows
    table = [0] * (n * n)
    for a in range(n):
        da = rows[a]
        for b in range(a + 1, n):
            db = rows[b]
            dab = da[b]
            m = 0
            for c in range(n):
                if c == a or c == b:
                    continue
                dac, dbc = da[c], db[c]
                if dac + dbc == dab or dab + dbc == dac or dab + dac == dbc:
                    m |= 1 << c
            table[a * n + b] = table[b * n + a] = m
    return table


def induced_p3_table(g: Graph) -> list[int]:
    """``table[a*n+b]``: vertices ``c`` such that ``{a, b, c}`` spans exactly two edges."""
    n = g.order
    adj = g.adj
    table = [0] * (n * n)
    for a in range(n):
        for b in range(a + 1, n):
            ab = adj[a] >> b & 1
            m = 0
            for c in range(n):
                if c == a or c == b:
                    continue
                if ab + (adj[a] >> c & 1) + (adj[b] >> c & 1) == 2:
                    m |= 1 << c
            table[a * n + b] = table[b * n + a] = m
    return table


def _branching_order(g: Graph) -> list[int]:
    return sorted(range(g.order), key=lambda v: (-g.degree(v), v))


def _max_triple_free(g: Graph, forbid: list[int], lower_mask: int, upper: int) -> tuple[int, int]:
    """Maximum triple-free set, then the lexicographically smallest one of that size."""
    n = g.order
    lower = lower_mask.bit_count()
    value, mask = kernels.max_triple_free(n, forbid, _branching_order(g), lower, upper)
    if mask < 0:
        value = lower
    _, witness = kernels.max_triple_free(n, forbid, list(range(n)), value - 1, value)
    return value, witness


def gp_exact(g: Graph, dist: Optional[DistMatrix] = None) -> GpResult:
    """Exact gp(G) by branch and bound.

    Every subset of a general position set is one, so the search only grows
    sets whose every triple is non-collinear.  A maximum clique (always in
    general position) seeds the lower bound; the search stops early once it
    reaches ``n - diam + 1``.
    """
    d = _connected_distances(g, dist)
    n = g.order
    if n == 1:
        return GpResult(1, frozenset({0}))
    upper = n - d.max_distance() + 1
    clique = mask_of(max_clique(g))
    value, witness = _max_triple_free(g, collinear_table(d), clique, upper)
    return GpResult(value, frozenset(members(witness)))


def max_cluster_set(g: Graph) -> frozenset[int]:
    """Largest vertex set whose induced subgraph is a disjoint union of cliques
    (lexicographically smallest among the largest)."""
    clique = mask_of(max_clique(g))
    _, witness = _max_triple_free(g, induced_p3_table(g), clique, g.order)
    return frozenset(members(witness))


def eta(g: Graph) -> int:
    """Largest order of an induced complete multipartite subgraph of the
    complement, one-part subgraphs included (so ``eta >= omega``)."""
    _connected_distances(g)
    return len(max_cluster_set(g))


def gp_diameter2(g: Graph) -> int:
    d = _connected_distances(g)
    if g.order < 2 or d.max_distance() != 2:
        raise GraphError("closed form applies only to graphs of diameter 2")
    return max(len(max_clique(g)), eta(g))
