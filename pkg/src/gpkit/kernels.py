"""Backend selection for the search kernels.

The compiled extension ``gpkit._core`` is used when it imports and the graph
fits in 64-bit masks; otherwise the pure-Python twin in ``gpkit._pycore``
runs.  Set ``GPKIT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from gpkit import _pycore

try:
    if os.environ.get("GPKIT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from gpkit import _core
except ImportError:
    _core = None

BACKEND = "cython" if _core is not None else "python"

_COMPILED_MAX_ORDER = 64
_COMPILED_CANON_MAX_ORDER = 16


def _pick(n: int, cap: int = _COMPILED_MAX_ORDER):
    return _core if _core is not None and n <= cap else _pycore


def max_clique(adj: list[int], order: list[int]) -> tuple[int, int]:
    return _pick(len(adj)).max_clique(adj, order)


def max_triple_free(
    n: int, forbid: list[int], order: list[int], lower: int, upper: int
) -> tuple[int, int]:
    return _pick(n).max_triple_free(n, forbid, order, lower, upper)


def gp_brute(n: int, dist: list[int], top: int) -> tuple[int, int]:
    return _pick(n).gp_brute(n, dist, top)


def canonical_order(adj: list[int], colors: list[int]) -> list[int]:
    return _pick(len(adj), _COMPILED_CANON_MAX_ORDER).canonical_order(adj, colors)
