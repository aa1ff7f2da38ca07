"""Seeded random instances: connected weighted graphs and anchored specs.

Everything takes a :class:`random.Random` so a seed fixes the whole stream.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .detfun import Anchor, DetFunSpec
from .graph import WeightedGraph
from .ring import LAMBDA, MU, BivarPoly

__all__ = ["random_rational", "random_connected_graph", "random_graph", "random_poly", "random_anchored_spec"]


def random_rational(rng: random.Random, bound: int = 9, positive: bool = False, nonzero: bool = False) -> Fraction:
    while True:
        lo = 1 if positive else -bound
        q = Fraction(rng.randint(lo, bound), rng.randint(1, bound))
        if q or not nonzero:
            return q


def random_graph(
    rng: random.Random,
    n: int,
    p: float = 0.5,
    max_edges: int | None = None,
    bound: int = 9,
    positive: bool = False,
) -> WeightedGraph:
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = [e for e in pairs if rng.random() < p]
    if max_edges is not None and len(edges) > max_edges:
        edges = sorted(rng.sample(edges, max_edges))
    weights = [random_rational(rng, bound, positive=positive, nonzero=True) for _ in edges]
    return WeightedGraph.from_edges(n, edges, weights)


def random_connected_graph(
    rng: random.Random,
    min_vertices: int = 2,
    max_vertices: int = 7,
    max_edges: int = 18,
    bound: int = 9,
    positive: bool = False,
) -> WeightedGraph:
    """Erdos-Renyi draws, retried until connected, with nonzero rational weights."""
    n = rng.randint(min_vertices, max_vertices)
    p = rng.uniform(0.35, 0.9)
    while True:
        g = random_graph(rng, n, p, max_edges, bound, positive)
        if g.graph.is_connected():
            return g


def random_poly(rng: random.Random, max_degree: int = 2, bound: int = 5, density: float = 0.6) -> BivarPoly:
    terms = {}
    for a in range(max_degree + 1):
        for b in range(max_degree + 1 - a):
            if rng.random() < density:
                terms[(a, b)] = random_rational(rng, bound)
    return BivarPoly(terms)


def random_anchored_spec(rng: random.Random, max_degree: int = 2, bound: int = 5) -> tuple[DetFunSpec, Anchor]:
    """A random (f, g, h) together with a point where f = 0 and g + h = 0.

    f = p (l - alpha) + p' (m - beta) and h = -g + (l - alpha) q + (m - beta) r.
    """
    alpha = random_rational(rng, bound)
    beta = random_rational(rng, bound)
    dl, dm = LAMBDA - alpha, MU - beta
    p, p2, q, r = (random_poly(rng, max_degree - 1, bound) for _ in range(4))
    g = random_poly(rng, max_degree, bound)
    if g.evaluate(alpha, beta) == 0:
        # keep g(alpha, beta) != 0 so the identities are not all 0 = 0
        g = g + 1
    f = p * dl + p2 * dm
    h = -g + dl * q + dm * r
    spec = DetFunSpec(f, g, h)
    return spec, Anchor(spec, alpha, beta)
