"""Undirected simple graphs, complements and blow-ups."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as a frozenset of ``(u, v)`` pairs with ``u < v``.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        return cls(n, frozenset(edges))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degree of each vertex, in vertex order (not sorted)."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class BlowUpParams:
    t: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"blow-up order must be >= 1, got {self.t}")


def complement(g: Graph) -> Graph:
    edges = (e for e in combinations(range(g.n), 2) if e not in g.edges)
    return Graph(g.n, frozenset(edges))


def blow_up(g: Graph, p: BlowUpParams | int) -> Graph:
    """Replace every vertex by ``t`` independent copies.

    Copy ``k`` of vertex ``v`` gets index ``k*n + v`` (copy-major), so the
    adjacency matrix of the result is ``kron(J_t, A(g))``. Every original edge
    ``{u, v}`` becomes a complete bipartite graph between the copy sets.
    """
    t = p.t if isinstance(p, BlowUpParams) else BlowUpParams(p).t
    n = g.n
    edges = set()
    for u, v in g.edges:
        for k in range(t):
            for l in range(t):
                a, b = k * n + u, l * n + v
                edges.add((min(a, b), max(a, b)))
    return Graph(n * t, frozenset(edges))


# Small named graphs used throughout the tests and the CLI docs.

def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` centered at vertex 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, frozenset(outer + spokes + inner))


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi G(n, p) drawn with a ``numpy.random.Generator``."""
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, frozenset(edges))


def labeled_graphs(n: int):
    """Every labeled graph on ``n`` vertices, one per subset of vertex pairs."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))
