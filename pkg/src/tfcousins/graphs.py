"""Simple graphs and mixed graphs on vertices ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .perm import Permutation

__all__ = ["Graph", "MixedGraph"]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``edges`` is normalised to a sorted tuple of pairs ``(u, v)`` with
    ``u < v``, so structurally equal graphs compare equal.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(n, tuple(edges))

    @cached_property
    def adj(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[u].append(v)
            out[v].append(u)
        for row in out:
            row.sort()
        return out

    @cached_property
    def masks(self) -> list[int]:
        """Neighbourhood of each vertex as an integer bitmask."""
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return out

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def relabel(self, p: Permutation) -> Graph:
        """Graph with vertex ``v`` renamed ``p(v)``."""
        if p.degree != self.n:
            raise ValueError("permutation degree differs from vertex count")
        return Graph(self.n, tuple((p(u), p(v)) for u, v in self.edges))

    def disjoint_union(self, other: Graph) -> Graph:
        k = self.n
        return Graph(k + other.n, self.edges + tuple((u + k, v + k) for u, v in other.edges))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return Graph(self.n, self.edges + tuple(edges))

    def add_vertices(self, count: int = 1) -> Graph:
        return Graph(self.n + count, self.edges)

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), tuple((index[u], index[v]) for u, v in self.edges if u in index and v in index))

    def to_mixed(self) -> MixedGraph:
        arcs = [(u, v) for u, v in self.edges] + [(v, u) for u, v in self.edges]
        return MixedGraph(self.n, tuple(arcs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class MixedGraph:
    """Arc-set graph; an undirected edge is the pair of arcs ``(u, v)``, ``(v, u)``.

    Loops ``(u, u)`` are rejected unless ``loops`` is set.  Folding a cover
    by a guide that is not strongly switching is the usual source of loops.
    """

    n: int
    arcs: tuple[tuple[int, int], ...] = ()
    loops: bool = field(default=False)

    def __post_init__(self):
        norm = set()
        for u, v in self.arcs:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={self.n}")
            if u == v and not self.loops:
                raise ValueError(f"loop at vertex {u} in a graph not flagged loop-carrying")
            norm.add((u, v))
        object.__setattr__(self, "arcs", tuple(sorted(norm)))

    @cached_property
    def out_masks(self) -> list[int]:
        out = [0] * self.n
        for u, v in self.arcs:
            out[u] |= 1 << v
        return out

    @cached_property
    def in_masks(self) -> list[int]:
        out = [0] * self.n
        for u, v in self.arcs:
            out[v] |= 1 << u
        return out

    @cached_property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (self.out_masks[u] >> v) & 1 == 1

    @property
    def loop_vertices(self) -> list[int]:
        return [u for u, v in self.arcs if u == v]

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.arcs)

    def is_symmetric(self) -> bool:
        s = self.arc_set
        return all((v, u) in s for u, v in s)

    def underlying(self) -> Graph:
        """Forget orientation and drop loops."""
        return Graph(self.n, tuple((u, v) for u, v in self.arcs if u != v))

    def as_graph(self) -> Graph:
        """The same object as a :class:`Graph`; requires symmetry and no loops."""
        if not self.is_symmetric() or self.has_loops():
            raise ValueError("mixed graph is not a simple undirected graph")
        return self.underlying()

    def relabel(self, p: Permutation) -> MixedGraph:
        return MixedGraph(self.n, tuple((p(u), p(v)) for u, v in self.arcs), self.loops)

    def weak_components(self) -> list[list[int]]:
        """Vertex sets of weakly connected components, each sorted."""
        nbr = [self.out_masks[v] | self.in_masks[v] for v in range(self.n)]
        return _components_from_masks(nbr)

    def __repr__(self) -> str:
        return f"MixedGraph(n={self.n}, arcs={len(self.arcs)}, loops={self.loops})"


def _components_from_masks(nbr: list[int]) -> list[list[int]]:
    n = len(nbr)
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= nbr[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append([v for v in range(n) if comp >> v & 1])
    return comps


def as_mixed(g: Graph | MixedGraph) -> MixedGraph:
    return g.to_mixed() if isinstance(g, Graph) else g
