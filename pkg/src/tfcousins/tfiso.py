"""Two-fold isomorphisms: search, verification, groups and entanglement.

Every search goes through the double cover.  A TF-isomorphism ``(alpha,
beta)`` from ``G`` to ``H`` is the same thing as an isomorphism of
alternating double covers sending ``(u, 0)`` to ``(alpha(u), 0)`` and
``(v, 1)`` to ``(beta(v), 1)``.  We search for such a map directly by
colouring ``V0`` and ``V1`` differently, which also covers bipartite bases
whose covers fall apart into components.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .canon import automorphism_group, certificate, find_isomorphism
from .cover import adc, cdc, instability_report
from .errors import TfPairError
from .graphs import Graph, MixedGraph
from .perm import PermGroup, Permutation
from .structure import is_connected

__all__ = [
    "TfPair",
    "TfGroup",
    "EntanglementReport",
    "verify_tf",
    "find_tf_isomorphism",
    "are_tf_cousins",
    "tf_automorphism_group",
    "is_unstable",
    "entanglement",
    "exhaustive_tf_isomorphism",
]


@dataclass(frozen=True)
class TfPair:
    alpha: Permutation
    beta: Permutation

    def __post_init__(self):
        if self.alpha.degree != self.beta.degree:
            raise TfPairError("alpha and beta have different degrees")

    @property
    def source_n(self) -> int:
        return self.alpha.degree

    @property
    def target_n(self) -> int:
        return self.beta.degree

    @classmethod
    def identity(cls, n: int) -> TfPair:
        e = Permutation.identity(n)
        return cls(e, e)

    @classmethod
    def from_cover_map(cls, rho: Permutation, n: int) -> TfPair:
        """Split a class-preserving cover permutation into its two halves."""
        img = rho.images
        alpha = img[:n]
        beta = tuple(x - n for x in img[n:])
        if max(alpha, default=-1) >= n or min(beta, default=0) < 0:
            raise TfPairError("cover map does not preserve the colour classes")
        return cls(Permutation(alpha), Permutation(beta))

    def to_cover_map(self) -> Permutation:
        n = self.source_n
        return Permutation(self.alpha.images + tuple(b + n for b in self.beta.images))

    @property
    def nontrivial(self) -> bool:
        return self.alpha != self.beta

    def inverse(self) -> TfPair:
        return TfPair(self.alpha.inverse(), self.beta.inverse())

    def __mul__(self, other: TfPair) -> TfPair:
        return TfPair(self.alpha * other.alpha, self.beta * other.beta)

    def describe(self, one_based: bool = False) -> str:
        return (
            f"alpha={self.alpha.cycle_notation(one_based)} "
            f"beta={self.beta.cycle_notation(one_based)}"
        )


@dataclass(frozen=True)
class TfGroup:
    """TF-automorphisms of one graph as the colour-preserving part of Aut(cover)."""

    n: int
    cover_group: PermGroup = field(repr=False)

    @property
    def order(self) -> int:
        return self.cover_group.order

    @property
    def generators(self) -> list[TfPair]:
        return [TfPair.from_cover_map(g, self.n) for g in self.cover_group.generators]

    def __contains__(self, p: TfPair) -> bool:
        if p.source_n != self.n:
            return False
        return p.to_cover_map() in self.cover_group

    def __len__(self) -> int:
        return self.order

    def elements(self, bound: int = 10**6):
        for rho in self.cover_group.elements(bound):
            yield TfPair.from_cover_map(rho, self.n)

    def has_nontrivial(self) -> bool:
        # the group is diagonal iff every generator is
        return any(p.nontrivial for p in self.generators)

    def nontrivial_witness(self) -> TfPair | None:
        for p in self.generators:
            if p.nontrivial:
                return p
        return None


@dataclass(frozen=True)
class EntanglementReport:
    pins: frozenset[int]
    entangled_pairs: frozenset[frozenset[int]]


def _arcs(g: Graph | MixedGraph) -> frozenset[tuple[int, int]]:
    if isinstance(g, Graph):
        return frozenset(g.edges) | frozenset((v, u) for u, v in g.edges)
    return g.arc_set


def verify_tf(g: Graph | MixedGraph, h: Graph | MixedGraph, p: TfPair) -> bool:
    """Check ``(u,v) in A(G) <=> (alpha(u), beta(v)) in A(H)`` for all pairs."""
    if p.source_n != g.n or p.target_n != h.n:
        raise TfPairError(
            f"pair of degree {p.source_n} does not match graphs with {g.n} and {h.n} vertices"
        )
    if g.n != h.n:
        raise TfPairError("graphs have different vertex counts")
    ag, ah = _arcs(g), _arcs(h)
    if len(ag) != len(ah):
        return False
    a, b = p.alpha, p.beta
    # bijections plus equal arc counts make the forward direction sufficient
    return all((a(u), b(v)) in ah for u, v in ag)


def _normalise(g: Graph | MixedGraph) -> Graph | MixedGraph:
    if isinstance(g, MixedGraph) and g.is_symmetric() and not g.has_loops():
        return g.as_graph()
    return g


def _cover_structure(g: Graph | MixedGraph):
    g = _normalise(g)
    if isinstance(g, Graph) or g.is_symmetric():
        return cdc(g).graph
    return adc(g).digraph


def find_tf_isomorphism(g: Graph | MixedGraph, h: Graph | MixedGraph) -> TfPair | None:
    if g.n != h.n:
        return None
    dg, dh = _cover_structure(g), _cover_structure(h)
    if type(dg) is not type(dh):
        # one symmetric, one not: compare alternating covers as digraphs
        dg, dh = adc(_normalise(g)).digraph, adc(_normalise(h)).digraph
    col = [0] * g.n + [1] * g.n
    rho = find_isomorphism(dg, dh, col, col)
    if rho is None:
        return None
    pair = TfPair.from_cover_map(rho, g.n)
    if not verify_tf(g, h, pair):
        raise AssertionError("cover isomorphism did not yield a TF-isomorphism")
    return pair


def _own_certificate(g: Graph | MixedGraph) -> bytes:
    return certificate(_normalise(g))


def are_tf_cousins(g: Graph | MixedGraph, h: Graph | MixedGraph) -> bool:
    if g.n != h.n:
        return False
    if _own_certificate(g) == _own_certificate(h):
        return False
    dg, dh = _cover_structure(g), _cover_structure(h)
    if isinstance(dg, Graph) and isinstance(dh, Graph):
        return certificate(dg) == certificate(dh)
    return find_tf_isomorphism(g, h) is not None


def tf_automorphism_group(g: Graph | MixedGraph) -> TfGroup:
    d = _cover_structure(g)
    col = [0] * g.n + [1] * g.n
    return TfGroup(g.n, automorphism_group(d, col))


def is_unstable(g: Graph | MixedGraph) -> bool:
    """Nontrivial TF-automorphism, or a disconnected cover with unexpected automorphisms.

    When the cover falls apart (bipartite or disconnected base) it can have
    automorphisms that switch colour classes on one component only; those
    are not TF-automorphisms, so the index decides.  ``K2`` is the smallest
    such case.
    """
    if tf_automorphism_group(g).has_nontrivial():
        return True
    g = _normalise(g)
    if isinstance(g, Graph) and not is_connected(cdc(g).graph):
        return instability_report(g).unstable
    return False


def entanglement(p: TfPair) -> EntanglementReport:
    if p.source_n != p.target_n:
        raise TfPairError("entanglement needs alpha and beta on the same vertex set")
    a, b = p.alpha, p.beta
    pins = frozenset(x for x in range(p.source_n) if a(x) == b(x))
    pairs = set()
    for x in range(p.source_n):
        if x in pins:
            continue
        for y in range(x + 1, p.source_n):
            if a(x) == b(y) and a(y) == b(x):
                pairs.add(frozenset((x, y)))
    return EntanglementReport(pins, frozenset(pairs))


def exhaustive_tf_isomorphism(g: Graph | MixedGraph, h: Graph | MixedGraph) -> TfPair | None:
    """Reference search straight from the definition, for tiny graphs.

    Runs over every ``alpha``; ``beta(v)`` is then forced to be a vertex of
    ``H`` whose in-neighbourhood is ``alpha`` of the in-neighbourhood of
    ``v``, and we backtrack over those candidates.  No covers are involved.
    """
    n = g.n
    if n != h.n:
        return None
    ag, ah = _arcs(g), _arcs(h)
    if len(ag) != len(ah):
        return None
    in_g = [frozenset(u for u, w in ag if w == v) for v in range(n)]
    in_h = [frozenset(u for u, w in ah if w == v) for v in range(n)]
    for alpha in itertools.permutations(range(n)):
        options = []
        for v in range(n):
            want = frozenset(alpha[u] for u in in_g[v])
            options.append([w for w in range(n) if in_h[w] == want])
        if not all(options):
            continue
        beta = _distinct_choice(options)
        if beta is not None:
            pair = TfPair(Permutation(alpha), Permutation(tuple(beta)))
            assert verify_tf(g, h, pair)
            return pair
    return None


def _distinct_choice(options: list[list[int]]) -> list[int] | None:
    chosen: list[int] = []
    used: set[int] = set()

    def rec(i: int) -> bool:
        if i == len(options):
            return True
        for w in options[i]:
            if w not in used:
                used.add(w)
                chosen.append(w)
                if rec(i + 1):
                    return True
                chosen.pop()
                used.discard(w)
        return False

    return chosen if rec(0) else None
