"""Streams of small graphs, generated or read from graph6 files."""

from __future__ import annotations

import io
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import IO, Iterable, Iterator, Union

from gpkit.graph import Graph, GraphError, canonical_form, graph_from_edges, is_connected
from gpkit.graph6 import HEADER, Graph6Error, parse_graph6, to_graph6

log = logging.getLogger(__name__)

MAX_ENUMERATION_ORDER = 8
LABELED_BRUTE_FORCE_MAX = 6


@dataclass
class GraphStream:
    graphs: list[Graph]
    provenance: str = "generated"
    errors: list[tuple[int, str]] = field(default_factory=list)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)


def _sorted_reps(reps: dict[bytes, Graph]) -> list[Graph]:
    return [reps[k] for k in sorted(reps, key=lambda k: (reps[k].size(), k))]


def _labeled_classes(n: int, connected: bool) -> list[Graph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    reps: dict[bytes, Graph] = {}
    for bits in range(1 << len(pairs)):
        g = graph_from_edges(n, (pairs[k] for k in range(len(pairs)) if bits >> k & 1))
        if connected and not is_connected(g):
            continue
        c = canonical_form(g)
        reps.setdefault(to_graph6(c).encode(), c)
    return _sorted_reps(reps)


def _augment(smaller: list[Graph], connected: bool) -> list[Graph]:
    # every connected graph has a vertex whose deletion leaves it connected,
    # so joining a new vertex to every nonempty subset of each class is exhaustive
    n = smaller[0].order + 1
    reps: dict[bytes, Graph] = {}
    for h in smaller:
        for nb in range(1 if connected else 0, 1 << h.order):
            rows = [row | ((nb >> v & 1) << h.order) for v, row in enumerate(h.adj)]
            rows.append(nb)
            c = canonical_form(Graph(n, tuple(rows)))
            reps.setdefault(to_graph6(c).encode(), c)
    return _sorted_reps(reps)


@lru_cache(maxsize=None)
def _classes(n: int, connected: bool) -> tuple[Graph, ...]:
    if n <= LABELED_BRUTE_FORCE_MAX:
        return tuple(_labeled_classes(n, connected))
    return tuple(_augment(list(_classes(n - 1, connected)), connected))


def enumerate_connected(n: int) -> GraphStream:
    """One canonical representative per isomorphism class of connected graphs
    on ``n`` vertices, ordered by edge count then canonical key."""
    return enumerate_graphs(n, connected=True)


def enumerate_graphs(n: int, connected: bool = False) -> GraphStream:
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    return GraphStream(list(_classes(n, connected)))


def read_graph6_stream(
    source: Union[IO[str], IO[bytes], Iterable[str]],
    strict: bool = True,
    dedup: bool = False,
    provenance: str = "stream",
) -> GraphStream:
    """Parse one graph6 record per line.

    Blank lines and the ``>>graph6<<`` header are skipped.  With ``strict`` a
    malformed line raises :class:`Graph6Error` naming its line number;
    otherwise it is logged, recorded in ``errors`` and skipped.
    """
    from gpkit.graph import canonical_key

    graphs = []
    errors = []
    seen: set[bytes] = set()
    for lineno, raw in enumerate(source, 1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("ascii")
            except UnicodeDecodeError:
                raw = raw.decode("latin-1")
        line = raw.strip()
        if not line or line == HEADER:
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            if strict:
                raise Graph6Error(f"line {lineno}: {exc}") from None
            log.warning("skipping line %d: %s", lineno, exc)
            errors.append((lineno, str(exc)))
            continue
        if dedup:
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
        graphs.append(g)
    return GraphStream(graphs, provenance, errors)


def read_graph6_file(path: str, strict: bool = True, dedup: bool = False) -> GraphStream:
    with open(path, "rb") as fh:
        return read_graph6_stream(fh, strict=strict, dedup=dedup, provenance=path)


def read_graph6_text(text: str, strict: bool = True, dedup: bool = False) -> GraphStream:
    return read_graph6_stream(io.StringIO(text), strict=strict, dedup=dedup)


def write_graph6(graphs: Iterable[Graph], out: IO[str]) -> None:
    for g in graphs:
        out.write(to_graph6(g) + "\n")
