"""Simple weighted graphs, their matrices, and the JSON graph format.

Vertices are labelled ``1..n`` in memory.  The JSON file format uses 0-based
endpoints; conversion happens only in :func:`loads_graph` / :func:`dumps_graph`.
Edge order is the input order and fixes the incidence-matrix column order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

import numpy as np

from .linalg import SquareMatrix
from .ring import as_fraction, format_rational

__all__ = [
    "Graph",
    "WeightedGraph",
    "Orientation",
    "GraphFormatError",
    "adjacency_matrix",
    "degree_matrix",
    "incidence_matrix",
    "laplacian",
    "default_orientation",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "loads_graph",
    "dumps_graph",
    "load_graph",
]


class GraphFormatError(ValueError):
    """Malformed graph input; ``line`` is the 1-based source line when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ValueError("negative vertex count")
        seen = set()
        for k, (u, v) in enumerate(edges):
            if u == v:
                raise ValueError(f"edge {k} is a loop at vertex {u}")
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValueError(f"edge {k} = {{{u},{v}}} has an endpoint outside 1..{self.vertex_count}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"edge {k} = {{{u},{v}}} is a duplicate")
            seen.add(key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def endpoint_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """0-based endpoint arrays for the integer kernels."""
        if not self.edges:
            return np.zeros(0, np.int64), np.zeros(0, np.int64)
        e = np.asarray(self.edges, dtype=np.int64) - 1
        return e[:, 0].copy(), e[:, 1].copy()

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n == 0:
            return False
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        return comps == 1


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with one weight per edge.

    Weights are normally exact rationals; the matrix builders accept any
    ring element, which is how jets get threaded through the Laplacian.
    """

    graph: Graph
    weights: tuple[Any, ...] = field(default=None)

    def __post_init__(self):
        if self.weights is None:
            w = tuple(Fraction(1) for _ in self.graph.edges)
        else:
            w = tuple(x if not isinstance(x, (int, str)) else as_fraction(x) for x in self.weights)
        if len(w) != self.graph.edge_count:
            raise ValueError(f"{len(w)} weights for {self.graph.edge_count} edges")
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]], weights: Sequence[Any] | None = None):
        return cls(Graph(n, tuple(edges)), None if weights is None else tuple(weights))

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.graph.edges

    def total_weight(self):
        """omega(G), the sum of all edge weights."""
        total = 0
        for w in self.weights:
            total = total + w
        return total

    def unit(self) -> "WeightedGraph":
        return WeightedGraph(self.graph)

    def is_unit(self) -> bool:
        return all(w == 1 for w in self.weights)

    def map_weights(self, fn: Callable[[Any], Any]) -> "WeightedGraph":
        return WeightedGraph(self.graph, tuple(fn(w) for w in self.weights))


@dataclass(frozen=True)
class Orientation:
    """``(positive_end, negative_end)`` for each edge, in edge order."""

    ends: tuple[tuple[int, int], ...]

    def check(self, g: Graph) -> None:
        if len(self.ends) != g.edge_count:
            raise ValueError(f"orientation has {len(self.ends)} entries for {g.edge_count} edges")
        for k, ((p, q), (u, v)) in enumerate(zip(self.ends, g.edges)):
            if {p, q} != {u, v} or p == q:
                raise ValueError(f"orientation entry {k} ({p}, {q}) does not match edge {{{u},{v}}}")


def default_orientation(g: Graph | WeightedGraph) -> Orientation:
    """Positive end at the lower vertex label."""
    g = g.graph if isinstance(g, WeightedGraph) else g
    return Orientation(tuple((min(u, v), max(u, v)) for u, v in g.edges))


def adjacency_matrix(g: WeightedGraph) -> SquareMatrix:
    n = g.vertex_count
    a: list[list[Any]] = [[0] * n for _ in range(n)]
    for (u, v), w in zip(g.edges, g.weights):
        a[u - 1][v - 1] = w
        a[v - 1][u - 1] = w
    return SquareMatrix(a)


def vertex_weights(g: WeightedGraph) -> list[Any]:
    deg: list[Any] = [0] * g.vertex_count
    for (u, v), w in zip(g.edges, g.weights):
        deg[u - 1] = deg[u - 1] + w
        deg[v - 1] = deg[v - 1] + w
    return deg


def degree_matrix(g: WeightedGraph) -> SquareMatrix:
    return SquareMatrix.diagonal(vertex_weights(g))


def incidence_matrix(g: WeightedGraph, o: Orientation | None = None) -> list[list[Any]]:
    """The ``n x m`` weighted incidence matrix (rows: vertices, columns: edges)."""
    o = o or default_orientation(g)
    o.check(g.graph)
    n, m = g.vertex_count, g.edge_count
    inc: list[list[Any]] = [[0] * m for _ in range(n)]
    for k, ((pos, neg), w) in enumerate(zip(o.ends, g.weights)):
        inc[pos - 1][k] = w
        inc[neg - 1][k] = -w
    return inc


def laplacian(g: WeightedGraph) -> SquareMatrix:
    n = g.vertex_count
    lap: list[list[Any]] = [[0] * n for _ in range(n)]
    for (u, v), w in zip(g.edges, g.weights):
        i, j = u - 1, v - 1
        lap[i][i] = lap[i][i] + w
        lap[j][j] = lap[j][j] + w
        lap[i][j] = lap[i][j] - w
        lap[j][i] = lap[j][i] - w
    return SquareMatrix(lap)


# ---------------------------------------------------------------- families


def complete_graph(n: int, weight: Any = 1) -> WeightedGraph:
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return WeightedGraph.from_edges(n, edges, [as_fraction(weight)] * len(edges))


def cycle_graph(n: int, weights: Sequence[Any] | None = None) -> WeightedGraph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return WeightedGraph.from_edges(n, edges, weights)


def path_graph(n: int, weights: Sequence[Any] | None = None) -> WeightedGraph:
    edges = [(i, i + 1) for i in range(1, n)]
    return WeightedGraph.from_edges(n, edges, weights)


# ---------------------------------------------------------------- JSON codec


def dumps_graph(g: WeightedGraph) -> str:
    doc = {
        "vertex_count": g.vertex_count,
        "edges": [
            {"u": u - 1, "v": v - 1, "w": format_rational(w)}
            for (u, v), w in zip(g.edges, g.weights)
        ],
    }
    return json.dumps(doc, indent=2)


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos] in " \t\r\n":
        pos += 1
    return pos


def _edge_lines(text: str) -> list[int]:
    """Source line of each element of the top-level ``edges`` array."""
    dec = json.JSONDecoder()
    pos = _skip_ws(text, 0)
    if text[pos : pos + 1] != "{":
        return []
    pos += 1
    while True:
        pos = _skip_ws(text, pos)
        if text[pos : pos + 1] == "}":
            return []
        key, pos = dec.raw_decode(text, pos)
        pos = _skip_ws(text, pos) + 1  # ':'
        pos = _skip_ws(text, pos)
        if key == "edges" and text[pos : pos + 1] == "[":
            lines = []
            pos += 1
            while True:
                pos = _skip_ws(text, pos)
                if text[pos : pos + 1] == "]":
                    return lines
                lines.append(_line_of(text, pos))
                _, pos = dec.raw_decode(text, pos)
                pos = _skip_ws(text, pos)
                if text[pos : pos + 1] == ",":
                    pos += 1
        _, pos = dec.raw_decode(text, pos)
        pos = _skip_ws(text, pos)
        if text[pos : pos + 1] == ",":
            pos += 1


def loads_graph(text: str) -> WeightedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise GraphFormatError("top level must be an object", 1)
    n = doc.get("vertex_count")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError(f"vertex_count must be a non-negative integer, got {n!r}")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphFormatError("edges must be a list")
    lines = _edge_lines(text)

    def line(k):
        return lines[k] if k < len(lines) else None

    edges, weights, seen = [], [], {}
    for k, e in enumerate(raw_edges):
        if not isinstance(e, dict) or "u" not in e or "v" not in e:
            raise GraphFormatError(f"edge {k} must be an object with 'u' and 'v'", line(k))
        u, v = e["u"], e["v"]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
            raise GraphFormatError(f"edge {k} endpoints must be integers", line(k))
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {k} endpoint out of range 0..{n - 1}: ({u}, {v})", line(k))
        if u == v:
            raise GraphFormatError(f"edge {k} is a loop at vertex {u}", line(k))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"edge {k} duplicates edge {seen[key]} ({u}, {v})", line(k))
        seen[key] = k
        try:
            w = as_fraction(e.get("w", "1"))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise GraphFormatError(f"edge {k} weight: {exc}", line(k)) from None
        edges.append((u + 1, v + 1))
        weights.append(w)
    return WeightedGraph.from_edges(n, edges, weights)


def load_graph(path) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return loads_graph(fh.read())
