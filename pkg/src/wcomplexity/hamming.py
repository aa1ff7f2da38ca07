"""Closed forms for products of complete graphs K_{m_1} x ... x K_{m_n}.

Two tuples are adjacent when they differ in exactly one coordinate; such an
edge carries the weight of that coordinate.  Everything below is evaluated
subset by subset over the non-empty coordinate sets S.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Any, Mapping, Sequence

from .graph import WeightedGraph
from .ring import as_fraction, format_rational

__all__ = [
    "DEFAULT_VERTEX_BUDGET",
    "HammingSpec",
    "build_graph",
    "spectrum_closed_form",
    "spectrum_by_subset",
    "kappa_closed_form",
    "kappa_equal_sizes",
    "kappa_sigma_closed_form",
    "kappa_sigma_equal_sizes",
    "hypercube_kappa",
    "hypercube_kappa_unit",
    "mst_closed_form",
    "divide_out_spectrum",
]

DEFAULT_VERTEX_BUDGET = 4096


@dataclass(frozen=True)
class HammingSpec:
    sizes: tuple[int, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        sizes = tuple(int(m) for m in self.sizes)
        weights = tuple(as_fraction(w) for w in self.weights)
        if not sizes:
            raise ValueError("need at least one factor")
        if len(sizes) != len(weights):
            raise ValueError(f"{len(sizes)} sizes but {len(weights)} weights")
        if any(m < 2 for m in sizes):
            raise ValueError(f"every size must be >= 2, got {sizes}")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def unit(cls, sizes: Sequence[int]) -> "HammingSpec":
        return cls(tuple(sizes), (Fraction(1),) * len(sizes))

    @property
    def order(self) -> int:
        return prod(self.sizes)

    def is_hypercube(self) -> bool:
        return all(m == 2 for m in self.sizes)

    def subsets(self):
        """Non-empty coordinate subsets, as sorted index tuples."""
        n = len(self.sizes)
        for r in range(1, n + 1):
            yield from itertools.combinations(range(n), r)

    def to_json(self) -> dict:
        return {"sizes": list(self.sizes), "weights": [format_rational(w) for w in self.weights]}

    @classmethod
    def from_json(cls, doc: Mapping) -> "HammingSpec":
        sizes = doc["sizes"]
        weights = doc.get("weights") or ["1"] * len(sizes)
        return cls(tuple(sizes), tuple(weights))

    @classmethod
    def loads(cls, text: str) -> "HammingSpec":
        return cls.from_json(json.loads(text))


def build_graph(spec: HammingSpec, budget: int = DEFAULT_VERTEX_BUDGET) -> WeightedGraph:
    """Vertices in mixed-radix lexicographic order, last coordinate fastest."""
    nv = spec.order
    if nv > budget:
        raise ValueError(f"graph would have {nv} vertices; vertex budget is {budget}")
    tuples = list(itertools.product(*(range(m) for m in spec.sizes)))
    index = {t: k + 1 for k, t in enumerate(tuples)}
    edges, weights = [], []
    for t in tuples:
        for i, m in enumerate(spec.sizes):
            for b in range(t[i] + 1, m):
                other = t[:i] + (b,) + t[i + 1 :]
                edges.append((index[t], index[other]))
                weights.append(spec.weights[i])
    return WeightedGraph.from_edges(nv, edges, weights)


def _mult(spec: HammingSpec, s) -> int:
    return prod(spec.sizes[i] - 1 for i in s)


def _eig(spec: HammingSpec, s) -> Fraction:
    return sum((spec.sizes[i] * spec.weights[i] for i in s), Fraction(0))


def spectrum_by_subset(spec: HammingSpec) -> list[tuple[tuple[int, ...], Fraction, int]]:
    """``(S, sum_{s in S} m_s w_s, prod_{s in S} (m_s - 1))`` for every non-empty S."""
    return [(s, _eig(spec, s), _mult(spec, s)) for s in spec.subsets()]


def spectrum_closed_form(spec: HammingSpec) -> dict[Fraction, int]:
    """Laplacian eigenvalue -> multiplicity; coinciding values are merged."""
    out: dict[Fraction, int] = {Fraction(0): 1}
    for _, lam, mult in spectrum_by_subset(spec):
        out[lam] = out.get(lam, 0) + mult
    return dict(sorted(out.items()))


def kappa_closed_form(spec: HammingSpec) -> Fraction:
    total = Fraction(1)
    for _, lam, mult in spectrum_by_subset(spec):
        total *= lam**mult
    return total / spec.order


def kappa_equal_sizes(m: int, weights: Sequence[Any]) -> Fraction:
    """``m^(m^n - n - 1) prod_S (sum_{s in S} w_s)^((m-1)^|S|)`` for equal sizes."""
    n = len(weights)
    ws = [as_fraction(w) for w in weights]
    total = Fraction(m) ** (m**n - n - 1)
    for r in range(1, n + 1):
        for s in itertools.combinations(range(n), r):
            total *= sum((ws[i] for i in s), Fraction(0)) ** ((m - 1) ** r)
    return total


def kappa_sigma_closed_form(spec: HammingSpec) -> Fraction:
    """Sum over S of (product over T != S of the T-factor) * Omega(S), over prod m_i.

    This is the x-derivative at 1 of the kappa product when each coordinate
    weight w_s is replaced by x^{w_s}.
    """
    subsets = list(spec.subsets())
    unit_factor = {
        s: Fraction(sum(spec.sizes[i] for i in s)) ** _mult(spec, s) for s in subsets
    }
    total = Fraction(0)
    for s in subsets:
        others = Fraction(1)
        for t in subsets:
            if t != s:
                others *= unit_factor[t]
        mult = _mult(spec, s)
        msum = sum(spec.sizes[i] for i in s)
        omega = mult * Fraction(msum) ** (mult - 1) * _eig(spec, s)
        total += others * omega
    return total / spec.order


def kappa_sigma_equal_sizes(m: int, weights: Sequence[Any]) -> Fraction:
    """``m^(m^n-n-1) (prod_k k^(C(n,k)(m-1)^k)) (m^n - 1)/n (w_1 + ... + w_n)``."""
    n = len(weights)
    total = Fraction(m) ** (m**n - n - 1)
    for k in range(1, n + 1):
        total *= Fraction(k) ** (comb(n, k) * (m - 1) ** k)
    return total * Fraction(m**n - 1, n) * sum((as_fraction(w) for w in weights), Fraction(0))


def hypercube_kappa(n: int, weights: Sequence[Any]) -> Fraction:
    if n < 1 or len(weights) != n:
        raise ValueError(f"need n >= 1 and exactly n weights (n={n}, got {len(weights)})")
    ws = [as_fraction(w) for w in weights]
    total = Fraction(2) ** (2**n - n - 1)
    for r in range(1, n + 1):
        for s in itertools.combinations(range(n), r):
            total *= sum((ws[i] for i in s), Fraction(0))
    return total


def hypercube_kappa_unit(n: int) -> int:
    """``2^(2^n - n - 1) prod_k k^C(n,k)``."""
    return 2 ** (2**n - n - 1) * prod(k ** comb(n, k) for k in range(1, n + 1))


def mst_closed_form(n: int, weights: Sequence[Any]) -> Fraction:
    """Minimum spanning-tree weight of the weighted hypercube: sum 2^(n-i) w_(i), ascending order."""
    if n < 1 or len(weights) != n:
        raise ValueError(f"need n >= 1 and exactly n weights (n={n}, got {len(weights)})")
    ws = sorted(as_fraction(w) for w in weights)
    return sum((2 ** (n - i) * w for i, w in enumerate(ws, start=1)), Fraction(0))


def divide_out_spectrum(spec: HammingSpec, charpoly: Sequence[Any]) -> tuple[list[Fraction], bool]:
    """Divide ``det(xI - L)`` by ``x * prod_S (x - eig_S)^mult_S``.

    ``charpoly`` is low-degree-first.  Returns the quotient (low first) and
    whether every synthetic division step left a zero remainder; the
    factorization holds exactly when that flag is true and the quotient is 1.
    """
    high = [as_fraction(c) for c in reversed(charpoly)]
    exact = True
    roots = [Fraction(0)]
    for _, lam, mult in spectrum_by_subset(spec):
        roots.extend([lam] * mult)
    for r in roots:
        if len(high) < 2:
            return [c for c in reversed(high)], False
        out = [high[0]]
        for c in high[1:]:
            out.append(c + r * out[-1])
        if out[-1] != 0:
            exact = False
        high = out[:-1]
    return list(reversed(high)), exact
