"""Integer kernels for spanning-tree enumeration.

The kernel walks edge subsets of size ``n - 1`` in lexicographic order with a
per-depth quick-find component table; any prefix that closes a cycle is cut
together with every extension of it.  Both backends run the same source:
``numpy`` interprets it, ``numba`` compiles it.
"""

from __future__ import annotations

import numpy as np

from ._accel import HAVE_NUMBA, default_backend, njit

__all__ = ["tree_subsets", "BACKENDS"]


def _tree_kernel(eu, ev, n, out, fill):
    m = eu.shape[0]
    k = n - 1
    comp = np.empty((k + 1, n), dtype=np.int64)
    for v in range(n):
        comp[0, v] = v
    chosen = np.empty(k, dtype=np.int64)
    nxt = np.zeros(k + 1, dtype=np.int64)
    count = 0
    depth = 0
    while depth >= 0:
        if depth == k:
            if fill:
                for t in range(k):
                    out[count, t] = chosen[t]
            count += 1
            depth -= 1
            continue
        c = nxt[depth]
        if m - c < k - depth:
            depth -= 1
            continue
        nxt[depth] = c + 1
        ru = comp[depth, eu[c]]
        rv = comp[depth, ev[c]]
        if ru == rv:
            continue
        for v in range(n):
            x = comp[depth, v]
            comp[depth + 1, v] = rv if x == ru else x
        chosen[depth] = c
        nxt[depth + 1] = c + 1
        depth += 1
    return count


_tree_kernel_numpy = _tree_kernel
BACKENDS = {"numpy": _tree_kernel_numpy}
if HAVE_NUMBA:
    BACKENDS["numba"] = njit(cache=True)(_tree_kernel)


def tree_subsets(eu: np.ndarray, ev: np.ndarray, n: int, backend: str | None = None) -> np.ndarray:
    """Edge-index sets of all spanning trees, one row per tree, in lex order.

    ``eu``/``ev`` are 0-based endpoint arrays.  Returns an int64 array of
    shape ``(count, n - 1)``.
    """
    backend = backend or default_backend()
    try:
        kernel = BACKENDS[backend]
    except KeyError:
        raise ValueError(f"backend {backend!r} unavailable; have {sorted(BACKENDS)}") from None
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if n == 1:
        return np.zeros((1, 0), dtype=np.int64)
    eu = np.ascontiguousarray(eu, dtype=np.int64)
    ev = np.ascontiguousarray(ev, dtype=np.int64)
    empty = np.zeros((0, n - 1), dtype=np.int64)
    count = kernel(eu, ev, n, empty, False)
    out = np.empty((count, n - 1), dtype=np.int64)
    if count:
        kernel(eu, ev, n, out, True)
    return out
