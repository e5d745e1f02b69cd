"""The eight graph families F1-F8 of graphs with gp(G) = n - 2.

Each family has a parameterised constructor (:func:`generate`) and a
structural recogniser (:func:`recognize`).  Constructed graphs use a fixed
labelling: the special vertices first, then the clique blocks in parameter
order, each block's vertices consecutive.

Parameters, with attachment sets given as 0-based indices *inside* the block
they refer to:

====  ======================================================================
F1    ``k``: pendant vertices at ``u1`` of the 4-cycle ``u1 u2 u3 u4``
      (labels ``u1..u4 = 0..3``, pendants ``4..``)
F2    ``r``, ``s``, ``t``: clique sizes joined to ``x`` only, ``y`` only and to
      both ends of the edge ``xy`` (``x=0``, ``y=1``)
F3    ``r``: size of ``K_r`` joined to ``u`` and ``x`` of the path
      ``u x y v``; ``S``: the block vertices also joined to ``y``
      (``u, x, y, v = 0..3``)
F4    ``q``: size of ``K_q`` joined to ``x`` and ``y``; ``r``: cliques joined
      to ``x``; ``s``: cliques joined to ``x`` and ``v`` of the path ``x y v``
      (``x, y, v = 0..2``; blocks in the order ``K_q``, ``r``, ``s``);
      ``Q``: vertices of ``K_q`` joined to ``v`` (default none);
      ``M``: per ``s`` block, the vertices joined to ``v`` (default all)
F5    ``b``: size ``n-2`` of the base clique; ``S``, ``T``: base vertices
      joined to ``u`` and to ``v`` (``u=0``, ``v=1``)
F6    as F5 plus the edge ``uv``
F7    ``n``: clique sizes (at least two); ``S``, ``T``: per clique, the
      vertices joined to ``x`` and to ``y`` (``x=0``, ``y=1``)
F8    as F7 plus the edge ``xy``
====  ======================================================================

Text form: ``"F2 r=[2,1] s=[1] t=[]"``, ``"F7 n=[1,2] S=[[0],[1]] T=[[0],[0,1]]"``.

Two readings of the constraints are supported.

``strict=True`` takes the constructions literally: F4 with ``Q`` empty, ``M``
full and ``s`` nonempty; F5 with ``S & T`` nonempty; F7/F8 with every ``S[i]``
and ``T[i]`` nonempty.  Under this reading some members have
gp(G) = n - 1 (F5 with ``S = T`` one vertex is a universal vertex joined to
cliques) and some graphs with gp(G) = n - 2 belong to no family (``K_4``
plus two nonadjacent vertices joined to disjoint pairs).

The default reading repairs both directions:

* F4 lets ``v`` join any part of ``K_q`` and of each ``s`` block, and allows
  ``s`` empty (the diameter stays 3 because some ``r`` block misses ``v``);
* F5 allows ``S & T`` empty, in which case the diameter is 3;
* F7/F8 allow empty attachment sets as long as the diameter is 2;
* graphs with gp(G) = n - 1, decided by :func:`recognize_gp_n_minus_1`,
  are rejected by :func:`generate` and never reported by :func:`recognize`.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Any, Iterator, Optional

from gpkit.graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    components,
    diameter,
    graph_from_edges,
    is_clique,
    is_connected,
    mask_of,
    members,
)

LABELS = ("F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8")

_KEYS = {
    "F1": ("k",),
    "F2": ("r", "s", "t"),
    "F3": ("r", "S"),
    "F4": ("q", "r", "s", "Q", "M"),
    "F5": ("b", "S", "T"),
    "F6": ("b", "S", "T"),
    "F7": ("n", "S", "T"),
    "F8": ("n", "S", "T"),
}


class FamilyError(GraphError):
    """Invalid family parameters."""


def _freeze(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return tuple(_freeze(v) for v in value)
    return value


def _thaw(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


@dataclass(frozen=True)
class FamilyInstance:
    label: str
    params: tuple[tuple[str, Any], ...]

    @classmethod
    def make(cls, label: str, **params: Any) -> "FamilyInstance":
        if label not in _KEYS:
            raise FamilyError(f"unknown family {label!r}")
        keys = _KEYS[label]
        if label == "F4":
            params.setdefault("Q", [])
            if "M" not in params and isinstance(params.get("s"), (list, tuple)):
                params["M"] = [list(range(size)) for size in params["s"]]
        if set(params) != set(keys):
            raise FamilyError(f"{label} takes parameters {', '.join(keys)}; got {sorted(params)}")
        return cls(label, tuple((k, _freeze(params[k])) for k in keys))

    def __getitem__(self, key: str) -> Any:
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)

    def to_text(self) -> str:
        parts = [self.label]
        for k, v in self.params:
            parts.append(f"{k}={json.dumps(_thaw(v), separators=(',', ':'))}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


_PARAM = re.compile(r"(\w+)=(\S+)")


def parse_instance(text: str) -> FamilyInstance:
    """Parse ``"F2 r=[2,1] s=[1] t=[]"``; the label may also be passed separately
    by joining it in front of the parameter string."""
    fields = text.split()
    if not fields:
        raise FamilyError("empty family instance")
    label = fields[0].upper()
    params = {}
    for item in fields[1:]:
        m = _PARAM.fullmatch(item)
        if not m:
            raise FamilyError(f"cannot parse parameter {item!r}")
        try:
            params[m.group(1)] = json.loads(m.group(2))
        except json.JSONDecodeError as exc:
            raise FamilyError(f"bad value for {m.group(1)}: {exc}") from None
    return FamilyInstance.make(label, **params)


# ----------------------------------------------------------------- builders


class _Builder:
    def __init__(self, specials: int) -> None:
        self.n = specials
        self.edges: list[tuple[int, int]] = []

    def clique(self, size: int) -> list[int]:
        verts = list(range(self.n, self.n + size))
        self.n += size
        self.edges.extend(itertools.combinations(verts, 2))
        return verts

    def join(self, v: int, verts: list[int]) -> None:
        self.edges.extend((v, w) for w in verts)

    def graph(self) -> Graph:
        return graph_from_edges(self.n, self.edges)


def _sizes(value: Any, name: str, minimum_len: int) -> list[int]:
    if not isinstance(value, (list, tuple)) or not all(isinstance(x, int) for x in value):
        raise FamilyError(f"{name} must be a list of integers")
    if len(value) < minimum_len:
        raise FamilyError(f"{name} needs at least {minimum_len} entries")
    if any(x < 1 for x in value):
        raise FamilyError(f"{name} clique sizes must be positive")
    return list(value)


def _subset(value: Any, size: int, name: str) -> list[int]:
    if not isinstance(value, (list, tuple)) or not all(isinstance(x, int) for x in value):
        raise FamilyError(f"{name} must be a list of indices")
    if len(set(value)) != len(value) or any(not 0 <= x < size for x in value):
        raise FamilyError(f"{name} must hold distinct indices in 0..{size - 1}")
    return sorted(value)


def _build_f1(p: FamilyInstance, strict: bool) -> Graph:
    k = p["k"]
    if not isinstance(k, int) or k < 1:
        raise FamilyError("F1 needs k >= 1")
    b = _Builder(4)
    b.edges += [(0, 1), (1, 2), (2, 3), (3, 0)]
    for _ in range(k):
        b.join(0, b.clique(1))
    return b.graph()


def _build_f2(p: FamilyInstance, strict: bool) -> Graph:
    r = _sizes(p["r"], "r", 1)
    s = _sizes(p["s"], "s", 1)
    t = _sizes(p["t"], "t", 0)
    b = _Builder(2)
    b.edges.append((0, 1))
    for size in r:
        b.join(0, b.clique(size))
    for size in s:
        b.join(1, b.clique(size))
    for size in t:
        block = b.clique(size)
        b.join(0, block)
        b.join(1, block)
    return b.graph()


def _build_f3(p: FamilyInstance, strict: bool) -> Graph:
    r = p["r"]
    if not isinstance(r, int) or r < 1:
        raise FamilyError("F3 needs r >= 1")
    attach = _subset(p["S"], r, "S")
    b = _Builder(4)
    b.edges += [(0, 1), (1, 2), (2, 3)]
    block = b.clique(r)
    b.join(0, block)
    b.join(1, block)
    b.join(2, [block[i] for i in attach])
    return b.graph()


def _build_f4(p: FamilyInstance, strict: bool) -> Graph:
    q = p["q"]
    if not isinstance(q, int) or q < 0:
        raise FamilyError("F4 needs q >= 0")
    r = _sizes(p["r"], "r", 1)
    s = _sizes(p["s"], "s", 1 if strict else 0)
    q_attach = _subset(p["Q"], q, "Q")
    m_sets = p["M"]
    if not isinstance(m_sets, (list, tuple)) or len(m_sets) != len(s):
        raise FamilyError("M needs one attachment list per s block")
    m_sets = [_subset(x, size, "M[j]") for x, size in zip(m_sets, s)]
    if any(not x for x in m_sets):
        raise FamilyError("every M[j] must be nonempty")
    if strict and (q_attach or any(len(x) != size for x, size in zip(m_sets, s))):
        raise FamilyError("strict F4 joins v to no vertex of K_q and to all of each s block")
    b = _Builder(3)
    b.edges += [(0, 1), (1, 2)]
    kq = b.clique(q)
    b.join(0, kq)
    b.join(1, kq)
    b.join(2, [kq[i] for i in q_attach])
    for size in r:
        b.join(0, b.clique(size))
    for size, attach in zip(s, m_sets):
        block = b.clique(size)
        b.join(0, block)
        b.join(2, [block[i] for i in attach])
    return b.graph()


def _build_f56(p: FamilyInstance, strict: bool) -> Graph:
    base = p["b"]
    if not isinstance(base, int) or base < 3:
        raise FamilyError(f"{p.label} needs a base clique of size >= 3")
    s = _subset(p["S"], base, "S")
    t = _subset(p["T"], base, "T")
    for name, sub in (("S", s), ("T", t)):
        if not 1 <= len(sub) <= base - 1:
            raise FamilyError(f"{name} must have between 1 and {base - 1} vertices")
    if strict and p.label == "F5" and not set(s) & set(t):
        raise FamilyError("F5 needs S and T to intersect")
    b = _Builder(2)
    if p.label == "F6":
        b.edges.append((0, 1))
    block = b.clique(base)
    b.join(0, [block[i] for i in s])
    b.join(1, [block[i] for i in t])
    return b.graph()


def _build_f78(p: FamilyInstance, strict: bool) -> Graph:
    sizes = _sizes(p["n"], "n", 2)
    s_sets, t_sets = p["S"], p["T"]
    if not isinstance(s_sets, (list, tuple)) or len(s_sets) != len(sizes):
        raise FamilyError("S needs one attachment list per clique")
    if not isinstance(t_sets, (list, tuple)) or len(t_sets) != len(sizes):
        raise FamilyError("T needs one attachment list per clique")
    s_sets = [_subset(x, size, "S[i]") for x, size in zip(s_sets, sizes)]
    t_sets = [_subset(x, size, "T[i]") for x, size in zip(t_sets, sizes)]
    if strict and (any(not x for x in s_sets) or any(not x for x in t_sets)):
        raise FamilyError("strict F7/F8 needs every S[i] and T[i] nonempty")
    if p.label == "F7" and not any(set(a) & set(c) for a, c in zip(s_sets, t_sets)):
        raise FamilyError("F7 needs S[i] and T[i] to meet for some i")
    b = _Builder(2)
    if p.label == "F8":
        b.edges.append((0, 1))
    for size, a, c in zip(sizes, s_sets, t_sets):
        block = b.clique(size)
        b.join(0, [block[i] for i in a])
        b.join(1, [block[i] for i in c])
    g = b.graph()
    if diameter(g) != 2:
        raise FamilyError(f"{p.label} instance has diameter {diameter(g)}, not 2")
    return g


_BUILDERS = {
    "F1": _build_f1,
    "F2": _build_f2,
    "F3": _build_f3,
    "F4": _build_f4,
    "F5": _build_f56,
    "F6": _build_f56,
    "F7": _build_f78,
    "F8": _build_f78,
}


def generate(instance: FamilyInstance, strict: bool = False) -> Graph:
    """Build the instance's graph.

    Raises :class:`FamilyError` on violated parameter constraints and, in the
    default reading, when the graph has gp(G) = n - 1.
    """
    g = _BUILDERS[instance.label](instance, strict)
    if g.order < 4:
        raise FamilyError("family members have at least 4 vertices")
    if not strict and recognize_gp_n_minus_1(g):
        raise FamilyError(f"{instance} has gp = n - 1")
    return g


# -------------------------------------------------------------- recognisers


@dataclass(frozen=True)
class FamilyMatch:
    instance: FamilyInstance
    roles: tuple[int, ...]
    """``roles[i]`` is the vertex of the input playing generator label ``i``."""


@dataclass
class RecognitionResult:
    matches: list[FamilyMatch] = field(default_factory=list)

    @property
    def matched_labels(self) -> list[str]:
        return sorted({m.instance.label for m in self.matches})

    def __bool__(self) -> bool:
        return bool(self.matches)


def _realises(g: Graph, instance: FamilyInstance, roles: list[int], strict: bool) -> bool:
    """True when relabelling ``g`` by ``roles`` gives exactly the constructed graph."""
    try:
        h = _BUILDERS[instance.label](instance, strict)
    except FamilyError:
        return False
    if h.order != g.order or sorted(roles) != list(range(g.order)):
        return False
    position = [0] * g.order
    for label, v in enumerate(roles):
        position[v] = label
    return g.relabel(position) == h


def _clique_blocks(g: Graph, rest: int) -> Optional[list[int]]:
    comps = components(g, rest) if rest else []
    if any(not is_clique(g, c) for c in comps):
        return None
    return comps


def _match_f1(g: Graph) -> Iterator[tuple[FamilyInstance, list[int]]]:
    n = g.order
    if n < 5:
        return
    for u1 in range(n):
        nb = g.neighbors(u1)
        for u2, u4 in itertools.combinations(nb, 2):
            if g.degree(u2) != 2 or g.degree(u4) != 2 or g.has_edge(u2, u4):
                continue
            common = [w for w in members(g.adj[u2] & g.adj[u4]) if w != u1]
            for u3 in common:
                if g.degree(u3) != 2:
                    continue
                pendants = [w for w in range(n) if w not in (u1, u2, u3, u4)]
                inst = FamilyInstance.make("F1", k=len(pendants))
                yield inst, [u1, u2, u3, u4] + pendants


def _match_f2(g: Graph) -> Iterator[tuple[FamilyInstance, list[int]]]:
    n = g.order
    for x, y in itertools.permutations(range(n), 2):
        if not g.has_edge(x, y):
            continue
        rest = g.all_mask & ~(1 << x | 1 << y)
        blocks = _clique_blocks(g, rest)
        if blocks is None:
            continue
        kinds: dict[str, list[int]] = {"x": [], "y": [], "xy": []}
        ok = True
        for c in blocks:
            to_x = c & g.adj[x]
            to_y = c & g.adj[y]
            if to_x not in (0, c) or to_y not in (0, c) or not (to_x or to_y):
                ok = False
                break
            kinds["xy" if to_x and to_y else "x" if to_x else "y"].append(c)
        if not ok or not kinds["x"] or not kinds["y"]:
            continue
        inst = FamilyInstance.make(
            "F2",
            r=[c.bit_count() for c in kinds["x"]],
            s=[c.bit_count() for c in kinds["y"]],
            t=[c.bit_count() for c in kinds["xy"]],
        )
        roles = [x, y] + [v for key in ("x", "y", "xy") for c in kinds[key] for v in members(c)]
        yield inst, roles


def _match_f3(g: Graph) -> Iterator[tuple[FamilyInstance, list[int]]]:
    n = g.order
    for v in range(n):
        if g.degree(v) != 1:
            continue
        y = g.neighbors(v)[0]
        for x in g.neighbors(y):
            if x == v:
                continue
            for u in g.neighbors(x):
                if u in (y, v) or g.has_edge(u, y) or g.has_edge(u, v):
                    continue
                rest = g.all_mask & ~mask_of((u, x, y, v))
                if not rest or not is_clique(g, rest):
                    continue
                block = members(rest)
                attach = [i for i, w in enumerate(block) if g.has_edge(y, w)]
                inst = FamilyInstance.make("F3", r=len(block), S=attach)
                yield inst, [u, x, y, v] + block


def _match_f4(g: Graph) -> Iterator[tuple[FamilyInstance, list[int]]]:
    n = g.order
    for x, v in itertools.permutations(range(n), 2):
        if g.has_edge(x, v):
            continue
        for y in members(g.adj[x] & g.adj[v]):
            rest = g.all_mask & ~mask_of((x, y, v))
            blocks = _clique_blocks(g, rest)
            if blocks is None:
                continue
            kq: list[int] = []
            kr: list[int] = []
            ks: list[int] = []
            ok = True
            for c in blocks:
                to_x, to_y, to_v = c & g.adj[x], c & g.adj[y], c & g.adj[v]
                if to_x != c or to_y not in (0, c):
                    ok = False
                    break
                (kq if to_y else ks if to_v else kr).append(c)
            if not ok or len(kq) > 1 or not kr:
                continue

            def inside(c: int, mask: int) -> list[int]:
                return [i for i, w in enumerate(members(c)) if mask >> w & 1]

            inst = FamilyInstance.make(
                "F4",
                q=kq[0].bit_count() if kq else 0,
                r=[c.bit_count() for c in kr],
                s=[c.bit_count() for c in ks],
                Q=inside(kq[0], g.adj[v]) if kq else [],
                M=[inside(c, g.adj[v]) for c in ks],
            )
            roles = [x, y, v] + [w for c in kq + kr + ks for w in members(c)]
            yield inst, roles


def _match_f56(g: Graph) -> Iterator[tuple[FamilyInstance, list[int]]]:
    n = g.order
    if n < 5:
        return
    for u, v in itertools.combinations(range(n), 2):
        rest = g.all_mask & ~(1 << u | 1 << v)
        if not is_clique(g, rest):
            continue
        block = members(rest)
        s = [i for i, w in enumerate(block) if g.has_edge(u, w)]
        t = [i for i, w in enumerate(block) if g.has_edge(v, w)]
        label = "F6" if g.has_edge(u, v) else "F5"
        inst = FamilyInstance.make(label, b=len(block), S=s, T=t)
        yield inst, [u, v] + block


def _match_f78(g: Graph) -> Iterator[tuple[FamilyInstance, list[int]]]:
    n = g.order
    for x, y in itertools.combinations(range(n), 2):
        rest = g.all_mask & ~(1 << x | 1 << y)
        blocks = _clique_blocks(g, rest)
        if blocks is None or len(blocks) < 2:
            continue
        sizes, s_sets, t_sets, roles = [], [], [], [x, y]
        for c in blocks:
            block = members(c)
            sizes.append(len(block))
            s_sets.append([i for i, w in enumerate(block) if g.has_edge(x, w)])
            t_sets.append([i for i, w in enumerate(block) if g.has_edge(y, w)])
            roles += block
        label = "F8" if g.has_edge(x, y) else "F7"
        yield FamilyInstance.make(label, n=sizes, S=s_sets, T=t_sets), roles


_MATCHERS = (_match_f1, _match_f2, _match_f3, _match_f4, _match_f56, _match_f78)


def recognize(g: Graph, strict: bool = False) -> RecognitionResult:
    """Every family containing ``g``, one witness per family."""
    if g.order < 4:
        raise GraphError("family recognition needs at least 4 vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("family recognition needs a connected graph")
    result = RecognitionResult()
    if not strict and recognize_gp_n_minus_1(g):
        return result
    found: set[str] = set()
    for matcher in _MATCHERS:
        for inst, roles in matcher(g):
            if inst.label in found:
                continue
            if _realises(g, inst, roles, strict):
                found.add(inst.label)
                result.matches.append(FamilyMatch(inst, tuple(roles)))
    result.matches.sort(key=lambda m: m.instance.label)
    return result


def regenerate(match: FamilyMatch, strict: bool = False) -> Graph:
    """The witness instance's graph relabelled onto the recognised vertices."""
    h = _BUILDERS[match.instance.label](match.instance, strict)
    return h.relabel(list(match.roles))


def recognize_gp_full(g: Graph) -> bool:
    """gp(G) = n holds exactly for complete graphs."""
    full = g.all_mask
    return all(row | 1 << v == full for v, row in enumerate(g.adj))


def recognize_gp_n_minus_1(g: Graph) -> bool:
    """gp(G) = n - 1: a universal vertex joined to at least two disjoint
    cliques, or ``K_n`` minus ``1..n-2`` edges sharing one endpoint."""
    n = g.order
    if n < 2:
        return False
    full = g.all_mask
    for v in range(n):
        if g.adj[v] | 1 << v != full:
            continue
        blocks = _clique_blocks(g, full & ~(1 << v))
        if blocks is not None and len(blocks) >= 2:
            return True
    for v in range(n):
        rest = full & ~(1 << v)
        missing = n - 1 - g.degree(v)
        if 1 <= missing <= n - 2 and is_clique(g, rest):
            return True
    return False


# ------------------------------------------------------------ parameter sweep


def _partitions(total: int, parts_min: int = 0, largest: Optional[int] = None) -> Iterator[list[int]]:
    """Non-increasing lists of positive ints with sum <= ``total``."""
    largest = total if largest is None else largest
    if parts_min <= 0:
        yield []
    for first in range(min(largest, total), 0, -1):
        for rest in _partitions(total - first, parts_min - 1, first):
            yield [first] + rest


def _prefix(k: int) -> list[int]:
    return list(range(k))


def _pair_patterns(size: int) -> list[tuple[list[int], list[int]]]:
    """Attachment pairs ``(A, B)`` inside one block, up to permuting the block."""
    out = []
    for both in range(size + 1):
        for a_only in range(size - both + 1):
            for b_only in range(size - both - a_only + 1):
                a = _prefix(both + a_only)
                b = _prefix(both) + list(range(both + a_only, both + a_only + b_only))
                out.append((a, b))
    return out


def _block_multisets(total: int, min_blocks: int, block_options) -> Iterator[list]:
    """Multisets of blocks ``(size, option)`` with total size <= ``total``."""
    catalog = [(size, opt) for size in range(1, total + 1) for opt in block_options(size)]

    def rec(start: int, room: int, chosen: list) -> Iterator[list]:
        if len(chosen) >= min_blocks:
            yield list(chosen)
        for i in range(start, len(catalog)):
            size, opt = catalog[i]
            if size <= room:
                chosen.append((size, opt))
                yield from rec(i, room - size, chosen)
                chosen.pop()

    yield from rec(0, total, [])


def sweep(max_n: int, strict: bool = False) -> Iterator[FamilyInstance]:
    """Every valid instance on at most ``max_n`` vertices, up to the symmetries
    that plainly give isomorphic graphs (reordering blocks of equal shape,
    permuting vertices inside a block)."""
    candidates: list[FamilyInstance] = []
    for k in range(1, max_n - 3):
        candidates.append(FamilyInstance.make("F1", k=k))
    room = max_n - 2
    for r in _partitions(room, 1):
        for s in _partitions(room - sum(r), 1):
            for t in _partitions(room - sum(r) - sum(s)):
                candidates.append(FamilyInstance.make("F2", r=r, s=s, t=t))
    for r in range(1, max_n - 3):
        for k in range(r + 1):
            candidates.append(FamilyInstance.make("F3", r=r, S=_prefix(k)))
    room = max_n - 3
    for q in range(room + 1):
        for qa in range(q + 1):
            for r in _partitions(room - q, 1):
                full_only = lambda size: [size]
                opts = full_only if strict else (lambda size: list(range(1, size + 1)))
                for sblocks in _block_multisets(room - q - sum(r), 0, opts):
                    if strict and (qa or not sblocks):
                        continue
                    candidates.append(
                        FamilyInstance.make(
                            "F4", q=q, r=r, s=[b[0] for b in sblocks], Q=_prefix(qa),
                            M=[_prefix(b[1]) for b in sblocks],
                        )
                    )
    for base in range(3, max_n - 1):
        for a, b in _pair_patterns(base):
            for label in ("F5", "F6"):
                candidates.append(FamilyInstance.make(label, b=base, S=a, T=b))
    pattern_cache: dict[int, list] = {}

    def patterns(size: int) -> list:
        if size not in pattern_cache:
            pattern_cache[size] = [
                (tuple(a), tuple(b)) for a, b in _pair_patterns(size) if a or b
            ]
        return pattern_cache[size]

    for blocks in _block_multisets(max_n - 2, 2, patterns):
        sizes = [b[0] for b in blocks]
        s_sets = [list(b[1][0]) for b in blocks]
        t_sets = [list(b[1][1]) for b in blocks]
        for label in ("F7", "F8"):
            candidates.append(FamilyInstance.make(label, n=sizes, S=s_sets, T=t_sets))
    for inst in candidates:
        try:
            generate(inst, strict=strict)
        except FamilyError:
            continue
        yield inst


def expected_diameter(instance: FamilyInstance) -> int:
    """Diameter every member of the instance's family variant has."""
    if instance.label in ("F1", "F2", "F3", "F4"):
        return 3
    if instance.label == "F5" and not set(instance["S"]) & set(instance["T"]):
        return 3
    return 2
