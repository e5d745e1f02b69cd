"""Simple undirected graphs on vertices ``0..n-1`` with bitset adjacency.

Adjacency row ``adj[v]`` is a Python int whose bit ``w`` is set iff ``vw`` is
an edge.  Vertex sets are passed around either as iterables of ints (public
API) or as int masks (internals and kernels).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from gpkit import kernels

VertexSet = frozenset
"""Public vertex-set type: a frozenset of vertex indices."""

CANONICAL_KEY_MAX_ORDER = 10


class GraphError(ValueError):
    """Raised on malformed graph input or an operation's precondition failing."""


class DisconnectedGraphError(GraphError):
    pass


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Ascending vertex indices of the bits set in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise GraphError("graph order must be at least 1")
        if len(self.adj) != self.order:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {self.order}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in members(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @property
    def n(self) -> int:
        return self.order

    @property
    def all_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            for v in members(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def size(self) -> int:
        """Number of edges."""
        return sum(self.degrees()) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.order
        for v, row in enumerate(self.adj):
            m = 0
            for w in members(row):
                m |= 1 << perm[w]
            rows[perm[v]] = m
        return Graph(self.order, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={list(self.edges())})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise GraphError("graph order must be at least 1")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s`` with vertices renumbered in ascending order.

    Returns the subgraph and the map from new index to original vertex.
    """
    verts = sorted(set(s))
    if not verts:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        rows.append(mask_of(index[w] for w in members(g.adj[v]) if w in index))
    return Graph(len(verts), tuple(rows)), verts


def is_connected(g: Graph) -> bool:
    return component_mask(g, 0) == g.all_mask


def component_mask(g: Graph, start: int, within: Optional[int] = None) -> int:
    """Vertices reachable from ``start`` using only vertices of ``within``."""
    allowed = g.all_mask if within is None else within
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components of the subgraph induced by ``within`` as masks."""
    rest = g.all_mask if within is None else within
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = component_mask(g, v, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_clique(g: Graph, mask: int) -> bool:
    for v in members(mask):
        if mask & ~g.adj[v] & ~(1 << v):
            return False
    return True


@dataclass(frozen=True)
class DistMatrix:
    """All-pairs hop distances.  ``None`` marks an unreachable pair."""

    rows: tuple[tuple[Optional[int], ...], ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, uv: tuple[int, int]) -> Optional[int]:
        u, v = uv
        return self.rows[u][v]

    @property
    def connected(self) -> bool:
        return all(d is not None for row in self.rows for d in row)

    def max_distance(self) -> int:
        if not self.connected:
            raise DisconnectedGraphError("distance matrix has unreachable pairs")
        return max(max(row) for row in self.rows)

    def flat(self) -> list[int]:
        """Row-major list of distances for a connected graph (kernel input)."""
        if not self.connected:
            raise DisconnectedGraphError("distance matrix has unreachable pairs")
        return [d for row in self.rows for d in row]


def all_pairs_distances(g: Graph) -> DistMatrix:
    n = g.order
    rows = []
    for s in range(n):
        dist: list[Optional[int]] = [None] * n
        dist[s] = 0
        seen = 1 << s
        frontier = seen
        level = 0
        while frontier:
            level += 1
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v]
            nxt &= ~seen
            for v in members(nxt):
                dist[v] = level
            seen |= nxt
            frontier = nxt
        rows.append(tuple(dist))
    return DistMatrix(tuple(rows))


def diameter(g: Graph, dist: Optional[DistMatrix] = None) -> int:
    if g.order < 2:
        raise GraphError("diameter needs at least 2 vertices")
    dist = dist or all_pairs_distances(g)
    if not dist.connected:
        raise DisconnectedGraphError("diameter of a disconnected graph is undefined")
    return dist.max_distance()


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    n = g.order
    for s in range(n):
        # a non-tree edge between depths a and b closes a closed walk of length a+b+1;
        # the minimum over all roots is the girth
        depth = [-1] * n
        parent = [-1] * n
        depth[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * depth[v] >= best:
                break
            for w in members(g.adj[v]):
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    length = depth[v] + depth[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def max_clique(g: Graph) -> list[int]:
    """A maximum clique, found by bitset branch and bound."""
    order = sorted(range(g.order), key=lambda v: (-g.degree(v), v))
    size, mask = kernels.max_clique(list(g.adj), order)
    return members(mask)


def _refined_colors(g: Graph) -> list[int]:
    """Isomorphism-invariant vertex colouring by iterated degree refinement."""
    n = g.order
    colors = [0] * n
    ncolors = 1
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[w] for w in members(g.adj[v]))
            sigs.append((colors[v], tuple(nb)))
        ranked = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [ranked[s] for s in sigs]
        if len(ranked) == ncolors:
            return new
        colors, ncolors = new, len(ranked)


def canonical_form(g: Graph) -> Graph:
    """Canonically relabelled copy of ``g`` (equal for isomorphic inputs)."""
    if g.order > CANONICAL_KEY_MAX_ORDER:
        raise GraphError(
            f"canonical form supports order <= {CANONICAL_KEY_MAX_ORDER}, got {g.order}"
        )
    colors = _refined_colors(g)
    position_of = kernels.canonical_order(list(g.adj), colors)
    return g.relabel(position_of)


def canonical_key(g: Graph) -> bytes:
    """Lexicographically minimal upper-triangle bit string over the admissible
    relabellings, packed as graph6 bytes.

    A relabelling is admissible when it lists vertices in increasing order of
    their refined degree colour; the minimum runs over all such relabellings.
    """
    from gpkit.graph6 import to_graph6

    return to_graph6(canonical_form(g)).encode("ascii")
