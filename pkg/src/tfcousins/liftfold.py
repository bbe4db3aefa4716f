"""Lifting through a TF-pair, guides of a cover, folding, and fold censuses.

A guide is a class-switching involution of the cover's automorphism group.
Folding collapses each guide orbit ``{x, phi(x)}`` to one vertex; the
folded vertex keeps the index of the orbit's ``V0`` member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .canon import _Engine, automorphism_group, certificate
from .cover import AltCover, Cover, adc, cdc
from .errors import CapacityError, InvalidGuideError
from .graphs import Graph, MixedGraph
from .perm import Permutation
from .structure import connected_components
from .tfiso import TfPair, verify_tf

__all__ = [
    "Lift",
    "Guide",
    "FoldResult",
    "FoldClass",
    "lift",
    "lift_component_count",
    "make_guide",
    "enumerate_guides",
    "trivial_guide",
    "fold",
    "base_graph_census",
    "guides_conjugate",
]

GuideMode = Literal["auto", "exhaustive", "bipartite"]


@dataclass(frozen=True)
class Lift:
    """``digraph`` holds arc ``(u, v + n)`` for every arc ``(u, v)`` of the source.

    Vertex ``u`` carries the label ``alpha(u)`` and vertex ``u + n`` the
    label ``beta(u)``; both labels name vertices of the target.
    """

    pair: TfPair
    digraph: MixedGraph

    @property
    def base_n(self) -> int:
        return self.pair.source_n

    def label(self, x: int) -> tuple[str, int, int]:
        n = self.base_n
        if x < n:
            return ("alpha", x, self.pair.alpha(x))
        return ("beta", x - n, self.pair.beta(x - n))

    @property
    def labels(self) -> list[tuple[str, int, int]]:
        return [self.label(x) for x in range(2 * self.base_n)]

    def as_alt_cover(self) -> AltCover:
        return AltCover(self.base_n, self.digraph)


@dataclass(frozen=True)
class Guide:
    involution: Permutation
    strongly_switching: bool

    @property
    def images(self) -> tuple[int, ...]:
        return self.involution.images


@dataclass(frozen=True)
class FoldResult:
    graph: Graph | MixedGraph
    vertex_map: tuple[int, ...]
    loopless: bool


@dataclass(frozen=True)
class FoldClass:
    certificate: bytes
    graph: Graph | MixedGraph
    guide: Guide
    loopless: bool


def lift(g: Graph | MixedGraph, p: TfPair, h: Graph | MixedGraph | None = None) -> Lift:
    """Lift ``g`` through ``p``; when a target ``h`` is given the pair is checked first."""
    if p.source_n != g.n:
        raise ValueError(f"pair of degree {p.source_n} for a graph on {g.n} vertices")
    if h is not None and not verify_tf(g, h, p):
        raise ValueError("pair is not a TF-isomorphism onto the given target")
    return Lift(p, adc(g).digraph)


def lift_component_count(l: Lift) -> int:
    return len(l.digraph.weak_components())


def _check_guide(d: Cover, phi: Permutation) -> None:
    n = d.base_n
    if phi.degree != 2 * n:
        raise InvalidGuideError("degree", f"guide acts on {phi.degree} points, cover has {2 * n}")
    img = phi.images
    if any(img[img[x]] != x for x in range(2 * n)):
        raise InvalidGuideError("not-involution", "guide is not an involution")
    if any((x < n) == (img[x] < n) for x in range(2 * n)):
        raise InvalidGuideError("not-class-switching", "guide does not exchange V0 and V1")
    es = d.graph.edge_set
    for u, v in d.graph.edges:
        a, b = img[u], img[v]
        if (min(a, b), max(a, b)) not in es:
            raise InvalidGuideError("not-automorphism", f"edge ({u}, {v}) is not preserved")


def _strong(d: Cover, img: tuple[int, ...]) -> bool:
    return not any(d.graph.has_edge(x, img[x]) for x in range(d.base_n))


def make_guide(d: Cover, phi: Permutation) -> Guide:
    _check_guide(d, phi)
    return Guide(phi, _strong(d, phi.images))


def trivial_guide(d: Cover) -> Guide:
    """``(u, 0) <-> (u, 1)``; folds a canonical double cover back to its base."""
    return make_guide(d, d.class_swap())


def _is_class_switching_involution(img: tuple[int, ...], n: int) -> bool:
    for x in range(n):
        y = img[x]
        if y < n or img[y] != x:
            return False
    return True


def _exhaustive_guides(d: Cover, element_bound: int) -> list[Guide]:
    n = d.base_n
    group = automorphism_group(d.graph)
    out = []
    for p in group.elements(element_bound):
        img = p.images
        if _is_class_switching_involution(img, n):
            out.append(Guide(p, _strong(d, img)))
    return out


def _two_copy_split(d: Cover) -> tuple[list[int], list[int]] | None:
    """Components ``(A, B)`` when the cover is two copies exchanged by the class swap."""
    comps = connected_components(d.graph)
    if len(comps) != 2:
        return None
    a, b = comps
    n = d.base_n
    swapped = sorted((x + n) % (2 * n) for x in a)
    if swapped != sorted(b):
        return None
    return a, b


def _bipartite_guides(d: Cover, element_bound: int) -> list[Guide]:
    # Guides that keep each copy: a polarity sigma of copy A, transported to B by the swap.
    split = _two_copy_split(d)
    if split is None:
        raise CapacityError("bipartite shortcut needs a cover made of two swapped copies")
    a, _ = split
    n = d.base_n
    pos = {x: i for i, x in enumerate(a)}
    copy = d.graph.induced_subgraph(a)
    swap = d.class_swap().images
    out = []
    for sigma in automorphism_group(copy).elements(element_bound):
        s = sigma.images
        img = [0] * (2 * n)
        for x in a:
            y = a[s[pos[x]]]
            img[x] = y
            img[swap[x]] = swap[y]
        t = tuple(img)
        if _is_class_switching_involution(t, n):
            phi = Permutation(t)
            _check_guide(d, phi)
            out.append(Guide(phi, _strong(d, t)))
    return out


def enumerate_guides(
    d: Cover, element_bound: int = 10**6, mode: GuideMode = "auto"
) -> list[Guide]:
    """All guides of ``d`` in lexicographic order of their image arrays.

    ``mode="bipartite"`` (also chosen by ``"auto"`` when ``Aut(d)`` exceeds
    ``element_bound`` and the shortcut applies) keeps only the guides that
    preserve each of the two copies of a bipartite base.
    """
    if element_bound < 1:
        raise ValueError("element_bound must be positive")
    if mode not in ("auto", "exhaustive", "bipartite"):
        raise ValueError(f"unknown guide mode {mode!r}")
    use_shortcut = mode == "bipartite"
    if mode == "auto":
        order = automorphism_group(d.graph).order
        if order > element_bound:
            if _two_copy_split(d) is None:
                raise CapacityError(
                    f"|Aut(cover)| = {order} exceeds element bound {element_bound} "
                    "and the bipartite shortcut does not apply"
                )
            use_shortcut = True
    guides = _bipartite_guides(d, element_bound) if use_shortcut else _exhaustive_guides(d, element_bound)
    guides.sort(key=lambda gd: gd.images)
    return guides


def fold(d: Cover, phi: Guide | Permutation) -> FoldResult:
    perm = phi.involution if isinstance(phi, Guide) else phi
    _check_guide(d, perm)
    n = d.base_n
    img = perm.images
    vmap = tuple(x if x < n else img[x] for x in range(2 * n))
    edges = set()
    for x, y in d.graph.edges:
        a, b = vmap[x], vmap[y]
        edges.add((min(a, b), max(a, b)))
    loops = sorted(a for a, b in edges if a == b)
    if not loops:
        return FoldResult(Graph(n, tuple(sorted(edges))), vmap, True)
    arcs = set()
    for a, b in edges:
        arcs.add((a, b))
        arcs.add((b, a))
    return FoldResult(MixedGraph(n, tuple(sorted(arcs)), loops=True), vmap, False)


def base_graph_census(
    d: Cover,
    element_bound: int = 10**6,
    mode: GuideMode = "auto",
    include_loops: bool = False,
) -> list[FoldClass]:
    """Distinct folds of ``d``, one witness guide each, in order of first guide.

    Loopless classes come first; loop-carrying ones follow when asked for.
    """
    target = certificate(d.graph)
    loopless: dict[bytes, FoldClass] = {}
    loopy: dict[bytes, FoldClass] = {}
    for gd in enumerate_guides(d, element_bound, mode):
        if not gd.strongly_switching and not include_loops:
            continue
        res = fold(d, gd)
        cert = certificate(res.graph)
        bucket = loopless if res.loopless else loopy
        if cert in bucket:
            continue
        if res.loopless:
            if certificate(cdc(res.graph).graph) != target:
                raise AssertionError("fold does not recover the cover")
        bucket[cert] = FoldClass(cert, res.graph, gd, res.loopless)
    return list(loopless.values()) + list(loopy.values())


def _guide_structure(d: Cover, phi: Permutation) -> _Engine:
    masks = d.graph.masks
    pm = [1 << y for y in phi.images]
    return _Engine(d.graph.n, [(masks, masks), (pm, pm)], [0] * d.graph.n)


def guides_conjugate(d: Cover, g1: Guide, g2: Guide, element_bound: int = 10**6) -> bool:
    """Is there ``rho`` in ``Aut(d)`` with ``rho g1 rho^-1 = g2``?

    Decided by canonical forms of the cover decorated with each guide's
    orbit pairs, so the group is never listed.  ``element_bound`` is kept for
    interface symmetry with :func:`enumerate_guides`.
    """
    del element_bound
    p1 = g1.involution if isinstance(g1, Guide) else g1
    p2 = g2.involution if isinstance(g2, Guide) else g2
    _check_guide(d, p1)
    _check_guide(d, p2)
    e1, e2 = _guide_structure(d, p1), _guide_structure(d, p2)
    lab1, lab2 = e1.canonical(), e2.canonical()
    if e1.rows(lab1) != e2.rows(lab2):
        return False
    rho = [0] * d.graph.n
    for a, b in zip(lab1, lab2):
        rho[a] = b
    r = Permutation(tuple(rho))
    if r * p1 != p2 * r:
        raise AssertionError("canonical match without a conjugating automorphism")
    return True
