"""Weighted and sigma-weighted complexity of weighted graphs.

Production paths are cofactor determinants: ``kappa_cofactor`` for the
product-weighted complexity and ``kappa_sigma_jet`` for the sum-weighted one.
The ``*_enumerate`` functions walk every spanning tree and serve as oracles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .graph import Graph, Orientation, WeightedGraph, default_orientation, incidence_matrix, laplacian
from .kernels import tree_subsets
from .linalg import cofactor, determinant
from .ring import Jet1

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "DisconnectedGraphError",
    "SpanningTreeSet",
    "enumerate_spanning_trees",
    "kappa_cofactor",
    "kappa_enumerate",
    "kappa_sigma_enumerate",
    "kappa_sigma_jet",
    "kruskal_min_sigma",
    "reduced_incidence_det",
]

DEFAULT_BUDGET = 24


class BudgetExceeded(ValueError):
    pass


class DisconnectedGraphError(ValueError):
    pass


class SpanningTreeSet(tuple):
    """Tuple of spanning trees, each a sorted tuple of 0-based edge indices."""

    __slots__ = ()


def _graph_of(g) -> Graph:
    return g.graph if isinstance(g, WeightedGraph) else g


def enumerate_spanning_trees(
    g: Graph | WeightedGraph, budget: int = DEFAULT_BUDGET, backend: str | None = None
) -> SpanningTreeSet:
    """All spanning trees as edge-index subsets, in lexicographic order."""
    gr = _graph_of(g)
    if gr.vertex_count == 0:
        raise ValueError("spanning trees of the empty graph are undefined")
    if gr.edge_count > budget:
        raise BudgetExceeded(
            f"graph has {gr.edge_count} edges; enumeration budget is {budget} edges"
        )
    eu, ev = gr.endpoint_arrays()
    rows = tree_subsets(eu, ev, gr.vertex_count, backend=backend)
    return SpanningTreeSet(tuple(int(x) for x in r) for r in rows)


def kappa_cofactor(g: WeightedGraph, i: int = 1, j: int = 1) -> Any:
    """The ``(i, j)`` cofactor of the weighted Laplacian (1-based)."""
    n = g.vertex_count
    if n < 1 or not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"cofactor index ({i}, {j}) out of range for {n} vertices")
    return cofactor(laplacian(g), i, j)


def kappa_enumerate(g: WeightedGraph, budget: int = DEFAULT_BUDGET, backend: str | None = None):
    total = Fraction(0)
    for tree in enumerate_spanning_trees(g, budget, backend):
        prod = Fraction(1)
        for e in tree:
            prod *= g.weights[e]
        total += prod
    return total


def kappa_sigma_enumerate(g: WeightedGraph, budget: int = DEFAULT_BUDGET, backend: str | None = None):
    total = Fraction(0)
    for tree in enumerate_spanning_trees(g, budget, backend):
        total += sum((g.weights[e] for e in tree), Fraction(0))
    return total


def kappa_sigma_jet(g: WeightedGraph) -> tuple[Fraction, Fraction]:
    """``(kappa(G), kappa_sigma(G_w))`` from one jet cofactor.

    Each weight ``w`` becomes ``1 + w*eps``, the first-order expansion of
    ``x**w`` at ``x = 1``; the cofactor's value part counts trees and its eps
    part sums tree weights.
    """
    if g.vertex_count < 1:
        raise ValueError("graph must have at least one vertex")
    jg = g.map_weights(lambda w: Jet1(1, w))
    c = cofactor(laplacian(jg), 1, 1)
    if not isinstance(c, Jet1):
        c = Jet1(c, 0)
    return c.a0, c.a1


def kruskal_min_sigma(g: WeightedGraph) -> Fraction:
    """Minimum total weight of a spanning tree (Kruskal, stable on ties)."""
    n = g.vertex_count
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    order = sorted(range(g.edge_count), key=lambda k: g.weights[k])
    total = Fraction(0)
    used = 0
    for k in order:
        u, v = g.edges[k]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            total += g.weights[k]
            used += 1
            if used == n - 1:
                break
    if used != n - 1:
        raise DisconnectedGraphError("graph is disconnected; it has no spanning tree")
    return total


def reduced_incidence_det(
    g: WeightedGraph, o: Orientation | None, subset: Sequence[int], i: int
):
    """det of the incidence matrix restricted to edge columns ``subset``, row ``i`` (1-based) removed."""
    n = g.vertex_count
    if len(subset) != n - 1:
        raise ValueError(f"edge subset must have {n - 1} edges, got {len(subset)}")
    if not 1 <= i <= n:
        raise IndexError(f"row {i} out of range 1..{n}")
    inc = incidence_matrix(g, o or default_orientation(g))
    cols = list(subset)
    rows = [[inc[r][c] for c in cols] for r in range(n) if r != i - 1]
    return determinant(rows)
