"""Canonical and alternating double covers, and the index of instability.

Cover vertex ``(u, i)`` lives at index ``u + i * base_n``; ``V0`` is
``range(0, base_n)`` and ``V1`` is ``range(base_n, 2 * base_n)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .canon import automorphism_group_order
from .graphs import Graph, MixedGraph
from .perm import Permutation
from .structure import bipartition, has_twins, is_connected

__all__ = [
    "Cover",
    "AltCover",
    "TrivialReason",
    "InstabilityReport",
    "cdc",
    "adc",
    "instability_report",
]


@dataclass(frozen=True)
class Cover:
    base_n: int
    graph: Graph

    def vertex(self, u: int, i: int) -> int:
        return u + i * self.base_n

    def base_vertex(self, x: int) -> tuple[int, int]:
        return x % self.base_n, x // self.base_n

    @property
    def colour_classes(self) -> tuple[range, range]:
        n = self.base_n
        return range(0, n), range(n, 2 * n)

    def colouring(self) -> list[int]:
        return [0] * self.base_n + [1] * self.base_n

    def class_swap(self) -> Permutation:
        """``(u, i) -> (u, 1 - i)``, an automorphism of every canonical double cover."""
        n = self.base_n
        return Permutation(tuple(list(range(n, 2 * n)) + list(range(n))))

    def check(self) -> None:
        n = self.base_n
        for x, y in self.graph.edges:
            if (x < n) == (y < n):
                raise ValueError(f"cover edge ({x}, {y}) inside one colour class")
            u, v = (x, y - n) if x < n else (y, x - n)
            if not self.graph.has_edge(v, u + n):
                raise ValueError(f"cover edge ({x}, {y}) has no mirror")


@dataclass(frozen=True)
class AltCover:
    base_n: int
    digraph: MixedGraph


class TrivialReason(enum.Enum):
    NONE = "none"
    BIPARTITE = "bipartite"
    TWIN_VERTICES = "twin-vertices"


@dataclass(frozen=True)
class InstabilityReport:
    aut_cdc_order: int
    aut_g_order: int
    index: int
    unstable: bool
    trivial_reason: TrivialReason
    connected: bool


def cdc(g: Graph | MixedGraph) -> Cover:
    """Canonical double cover ``g x K2``.

    A symmetric mixed graph is accepted too; a loop at ``u`` lifts to the
    edge ``(u, 0) - (u, 1)``.
    """
    n = g.n
    if isinstance(g, Graph):
        edges = [(u, v + n) for u, v in g.edges] + [(v, u + n) for u, v in g.edges]
    else:
        if not g.is_symmetric():
            raise ValueError("cdc needs a symmetric arc set; use adc for digraphs")
        edges = [(u, v + n) for u, v in g.arcs]
    return Cover(n, Graph(2 * n, tuple(edges)))


def adc(g: Graph | MixedGraph) -> AltCover:
    """Alternating double cover: arc ``((u,0), (v,1))`` for each arc ``(u, v)``."""
    mg = g.to_mixed() if isinstance(g, Graph) else g
    n = mg.n
    return AltCover(n, MixedGraph(2 * n, tuple((u, v + n) for u, v in mg.arcs)))


def instability_report(g: Graph) -> InstabilityReport:
    aut_cdc = automorphism_group_order(cdc(g).graph)
    aut_g = automorphism_group_order(g)
    index, rem = divmod(aut_cdc, 2 * aut_g)
    assert rem == 0 and index >= 1, "Aut(G) x Z2 must embed in Aut(CDC(G))"
    if bipartition(g) is not None and aut_g > 1:
        reason = TrivialReason.BIPARTITE
    elif has_twins(g):
        reason = TrivialReason.TWIN_VERTICES
    else:
        reason = TrivialReason.NONE
    return InstabilityReport(
        aut_cdc_order=aut_cdc,
        aut_g_order=aut_g,
        index=index,
        unstable=index > 1,
        trivial_reason=reason,
        connected=is_connected(g),
    )
