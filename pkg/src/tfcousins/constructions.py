"""Constructive families of TF-isomorphic pairs and a few reference graphs.

Labeling conventions
--------------------
Seed pair of order ``k``: ``g`` is ``C_k`` on ``0..k-1`` plus ``C_k`` on
``k..2k-1``; ``h`` is ``C_2k`` on ``0..2k-1``.  Vertices ``j`` and ``j + k``
of ``g`` form an entangled pair.

Claw graph ``CG(n)`` with width ``k``: circuit vertices ``0..2kn-1``; claw
``i`` has centre ``2kn + i(k+1)`` followed by its leaves ``j = 0..k-1``.
Leaf ``(i, j)`` is joined to circuit vertices ``i + jn`` and ``i + jn + kn``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConstructionError
from .graphs import Graph, MixedGraph
from .perm import Permutation
from .tfiso import TfPair, entanglement, verify_tf

__all__ = [
    "SeedState",
    "ClawParams",
    "seed_pair",
    "add_entangled_edge",
    "add_split_image_edges",
    "split_image_complement",
    "add_pin",
    "substitute",
    "claw_graph",
    "claw_companion",
    "claw_tf_pair",
    "named_graph",
    "NAMED_GRAPHS",
]


def _arcs_of(g: Graph | MixedGraph) -> set[tuple[int, int]]:
    if isinstance(g, Graph):
        return {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}
    return set(g.arcs)


def _from_arcs(n: int, arcs: set[tuple[int, int]]) -> Graph | MixedGraph:
    """A graph when the arc set is symmetric and loop-free, else a mixed graph."""
    if any(u == v for u, v in arcs):
        return MixedGraph(n, tuple(sorted(arcs)), loops=True)
    if all((v, u) in arcs for u, v in arcs):
        return Graph(n, tuple(sorted((u, v) for u, v in arcs if u < v)))
    return MixedGraph(n, tuple(sorted(arcs)))


@dataclass(frozen=True)
class SeedState:
    """``pair`` is a TF-isomorphism from ``g`` to ``h``; every operation returns a new state."""

    g: Graph
    h: Graph | MixedGraph
    pair: TfPair
    history: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not verify_tf(self.g, self.h, self.pair):
            raise ConstructionError("state pair is not a TF-isomorphism")

    @property
    def entangled_pairs(self) -> list[tuple[int, int]]:
        rep = entanglement(self.pair)
        return sorted(tuple(sorted(p)) for p in rep.entangled_pairs)

    @property
    def pins(self) -> list[int]:
        return sorted(entanglement(self.pair).pins)

    def image_arcs(self, u: int, v: int) -> tuple[tuple[int, int], tuple[int, int]]:
        a, b = self.pair.alpha, self.pair.beta
        return (a(u), b(v)), (a(v), b(u))

    def _with_edges(self, edges: list[tuple[int, int]], note: str) -> SeedState:
        for u, v in edges:
            if u == v:
                raise ConstructionError(f"loop ({u}, {u}) is not a valid edge")
            if self.g.has_edge(u, v):
                raise ConstructionError(f"edge ({u}, {v}) already present")
        if len({(min(e), max(e)) for e in edges}) != len(edges):
            raise ConstructionError("repeated edge in one operation")
        harcs = _arcs_of(self.h)
        new = set()
        for u, v in edges:
            new.update(self.image_arcs(u, v))
        if new & harcs:
            raise ConstructionError("image edge already present in the target")
        h = _from_arcs(self.h.n, harcs | new)
        if isinstance(h, MixedGraph) and not h.is_symmetric():
            raise ConstructionError("image arcs are not closed under reversal")
        return SeedState(self.g.add_edges(edges), h, self.pair, self.history + (note,))


@dataclass(frozen=True)
class ClawParams:
    n: int
    k: int = 3

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ConstructionError("claw count n must be a positive integer")
        if not isinstance(self.k, int) or self.k < 2:
            raise ConstructionError("claw width k must be an integer >= 2")

    @property
    def circuit_length(self) -> int:
        return 2 * self.k * self.n

    @property
    def order(self) -> int:
        return self.circuit_length + self.n * (self.k + 1)

    def centre(self, i: int) -> int:
        return self.circuit_length + i * (self.k + 1)

    def leaf(self, i: int, j: int) -> int:
        return self.centre(i) + 1 + j


def _antipodal_pair(half: int, extra: int) -> TfPair:
    """Seed-pattern pair on ``2*half`` circuit vertices, identity on ``extra`` more."""
    size = 2 * half + extra
    a = list(range(size))
    b = list(range(size))
    for j in range(half):
        even, odd = (j, j + half) if j % 2 == 0 else (j + half, j)
        a[j], b[j] = even, odd
        a[j + half], b[j + half] = odd, even
    return TfPair(Permutation(tuple(a)), Permutation(tuple(b)))


def _cycle_edges(vertices: list[int]) -> list[tuple[int, int]]:
    m = len(vertices)
    return [(vertices[i], vertices[(i + 1) % m]) for i in range(m)]


def seed_pair(k: int) -> SeedState:
    if not isinstance(k, int) or k < 3 or k % 2 == 0:
        raise ConstructionError(f"seed order must be an odd integer >= 3, got {k!r}")
    g = Graph.from_edges(2 * k, _cycle_edges(list(range(k))) + _cycle_edges(list(range(k, 2 * k))))
    h = Graph.from_edges(2 * k, _cycle_edges(list(range(2 * k))))
    return SeedState(g, h, _antipodal_pair(k, 0), (f"seed k={k}",))


def add_entangled_edge(s: SeedState, x: int, y: int) -> SeedState:
    """Join an entangled pair.

    Both image arcs of ``{x, y}`` are loops, at ``alpha(x)`` and
    ``alpha(y)``, so the target becomes a loop-carrying mixed graph.
    """
    if (min(x, y), max(x, y)) not in s.entangled_pairs:
        raise ConstructionError(f"vertices {x} and {y} are not an entangled pair")
    return s._with_edges([(x, y)], f"entangled {x}-{y}")


def split_image_complement(s: SeedState, e1: tuple[int, int]) -> tuple[int, int] | None:
    """The edge whose image arcs reverse those of ``e1``, if it is a legal partner."""
    a, b = s.pair.alpha, s.pair.beta
    ai, bi = a.inverse(), b.inverse()
    u, v = e1
    # arcs (b(v), a(u)) and (b(u), a(v)) must be images (a(c), b(d)) and (a(d), b(c))
    c, d = ai(b(v)), bi(a(u))
    if (ai(b(u)), bi(a(v))) != (d, c):
        return None
    if c == d:
        return None
    return (min(c, d), max(c, d))


def add_split_image_edges(
    s: SeedState, e1: tuple[int, int], e2: tuple[int, int] | None = None
) -> SeedState:
    """Add two edges whose image arcs together form two undirected target edges."""
    if e2 is None:
        raise ConstructionError("split-image edges must be added in complementary pairs")
    ents = set(s.entangled_pairs)
    for e in (e1, e2):
        if (min(e), max(e)) in ents:
            raise ConstructionError(f"edge {e} joins an entangled pair")
    if split_image_complement(s, e1) != (min(e2), max(e2)):
        raise ConstructionError(f"edges {e1} and {e2} are not complementary")
    return s._with_edges([tuple(e1), tuple(e2)], f"split {e1[0]}-{e1[1]} + {e2[0]}-{e2[1]}")


def add_pin(s: SeedState, attach_to: list[tuple[int, int]]) -> SeedState:
    """Append a vertex fixed by both maps and join it to each listed entangled pair."""
    if not attach_to:
        raise ConstructionError("a pin needs at least one entangled pair to attach to")
    ents = set(s.entangled_pairs)
    for pr in attach_to:
        if (min(pr), max(pr)) not in ents:
            raise ConstructionError(f"{tuple(pr)} is not an entangled pair")
    x = s.g.n
    y = s.h.n
    alpha = Permutation(s.pair.alpha.images + (y,))
    beta = Permutation(s.pair.beta.images + (y,))
    g = s.g.add_vertices(1)
    h: Graph | MixedGraph
    h = s.h.add_vertices(1) if isinstance(s.h, Graph) else MixedGraph(y + 1, s.h.arcs, loops=s.h.has_loops())
    grown = SeedState(g, h, TfPair(alpha, beta), s.history)
    edges = [e for pr in attach_to for e in ((pr[0], x), (pr[1], x))]
    note = "pin on " + ", ".join(f"{p[0]}-{p[1]}" for p in attach_to)
    return grown._with_edges(edges, note)


def substitute(g: Graph, h: Graph, p: TfPair, u: int, v: int) -> tuple[Graph, Graph | MixedGraph, TfPair]:
    """Replace an entangled pair of odd degree ``k`` by two ``k``-circuits.

    Layout of the result: retained vertices keep their relative order
    (``u`` and ``v`` removed from ``g``, ``alpha(u)`` and ``alpha(v)``
    from ``h``), then the new circuit vertices ``u_1..u_2k`` are appended.
    Neighbour ``i`` of ``v`` is chosen as ``alpha^-1(beta(x_i))`` where
    ``x_i`` is neighbour ``i`` of ``u``, which is what makes the target
    arc set symmetric.
    """
    if not verify_tf(g, h, p):
        raise ConstructionError("input pair is not a TF-isomorphism")
    a, b = p.alpha, p.beta
    if u == v or not (a(u) == b(v) and a(v) == b(u)):
        raise ConstructionError(f"{u} and {v} are not an entangled pair")
    k = g.degree(u)
    if g.degree(v) != k:
        raise ConstructionError(f"degrees differ: deg({u}) = {k}, deg({v}) = {g.degree(v)}")
    if k % 2 == 0:
        raise ConstructionError(f"entangled vertices have even degree {k}")
    if k < 3:
        raise ConstructionError("substitution needs degree at least 3")
    if g.has_edge(u, v):
        raise ConstructionError("adjacent entangled pairs are not supported")
    nu = list(g.adj[u])
    ai = a.inverse()
    nv = [ai(b(x)) for x in nu]
    if sorted(nv) != list(g.adj[v]):
        raise ConstructionError("neighbourhoods of the pair are not matched by the pair")

    keep_g = [w for w in range(g.n) if w not in (u, v)]
    gone_h = {a(u), a(v)}
    keep_h = [w for w in range(h.n) if w not in gone_h]
    gpos = {w: i for i, w in enumerate(keep_g)}
    hpos = {w: i for i, w in enumerate(keep_h)}
    base = len(keep_g)
    circ = [base + i for i in range(2 * k)]  # u_1..u_2k

    edges = [(gpos[x], gpos[y]) for x, y in g.edges if x in gpos and y in gpos]
    edges += _cycle_edges(circ[:k]) + _cycle_edges(circ[k:])
    edges += [(circ[i], gpos[nu[i]]) for i in range(k)]
    edges += [(circ[k + i], gpos[nv[i]]) for i in range(k)]
    g2 = Graph.from_edges(base + 2 * k, edges)

    alpha = [0] * g2.n
    beta = [0] * g2.n
    for w in keep_g:
        alpha[gpos[w]] = hpos[a(w)]
        beta[gpos[w]] = hpos[b(w)]
    for i in range(2 * k):
        alpha[circ[i]] = base + i
        beta[circ[i]] = base + (i + k) % (2 * k)
    p2 = TfPair(Permutation(tuple(alpha)), Permutation(tuple(beta)))
    arcs = set()
    for x, y in g2.edges:
        arcs.add((alpha[x], beta[y]))
        arcs.add((alpha[y], beta[x]))
    h2 = _from_arcs(g2.n, arcs)
    if not isinstance(h2, Graph):
        raise ConstructionError("substituted target is not a simple graph")
    if not verify_tf(g2, h2, p2):
        raise AssertionError("substitution broke the TF-isomorphism")
    return g2, h2, p2


# -- claw graphs -------------------------------------------------------------

def _claw_edges(params: ClawParams) -> list[tuple[int, int]]:
    n, k = params.n, params.k
    length = params.circuit_length
    out = []
    for i in range(n):
        c = params.centre(i)
        for j in range(k):
            leaf = params.leaf(i, j)
            m = i + j * n
            out += [(c, leaf), (leaf, m % length), (leaf, (m + k * n) % length)]
    return out


def claw_graph(params: ClawParams) -> Graph:
    circuit = _cycle_edges(list(range(params.circuit_length)))
    return Graph.from_edges(params.order, circuit + _claw_edges(params))


def claw_companion(params: ClawParams) -> Graph:
    half = params.k * params.n
    circuits = _cycle_edges(list(range(half))) + _cycle_edges(list(range(half, 2 * half)))
    return Graph.from_edges(params.order, circuits + _claw_edges(params))


def claw_tf_pair(params: ClawParams) -> TfPair:
    """TF-isomorphism from the companion to the claw graph (valid when ``kn`` is odd).

    On the circuit it is the seed pattern: ``alpha(u_j)`` and ``beta(u_j)``
    are the two members of ``{u_j, u_{j+kn}}``, ``alpha`` taking the even
    one.  Every claw vertex is a pin.
    """
    if (params.k * params.n) % 2 == 0:
        raise ConstructionError("no TF-isomorphism of this shape when k*n is even")
    half = params.k * params.n
    return _antipodal_pair(half, params.order - 2 * half)


# -- named graphs ------------------------------------------------------------

def _cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, _cycle_edges(list(range(n))))


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``0..a-1`` and ``a..a+b-1``."""
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _generalized_petersen(n: int, j: int) -> Graph:
    """Outer cycle ``0..n-1``, spokes ``i -- n+i``, inner edges ``n+i -- n+(i+j mod n)``."""
    if n < 3 or not 1 <= j < n / 2:
        raise ConstructionError(f"GP({n},{j}) needs n >= 3 and 1 <= j < n/2")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + j) % n) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def _hypercube(d: int) -> Graph:
    """Vertex labels are the integers ``0..2^d-1``; edges flip one bit."""
    if d < 0:
        raise ConstructionError("hypercube dimension must be non-negative")
    n = 1 << d
    return Graph.from_edges(n, [(x, x ^ (1 << b)) for x in range(n) for b in range(d) if x < x ^ (1 << b)])


# 1-based edge list of the smallest known unstable asymmetric graph (12 vertices)
_ASYMMETRIC_UNSTABLE_12 = [
    (6, 7), (7, 12), (12, 6), (6, 1), (6, 3), (1, 5), (3, 4), (5, 10), (4, 9),
    (9, 10), (4, 2), (5, 2), (4, 11), (5, 8), (11, 8), (1, 12), (2, 11), (3, 10),
]


def _asymmetric_unstable_12() -> Graph:
    """Vertices ``0..11`` are the drawing's labels ``1..12`` shifted down by one."""
    return Graph.from_edges(12, [(u - 1, v - 1) for u, v in _ASYMMETRIC_UNSTABLE_12])


NAMED_GRAPHS = {
    "petersen": lambda: _generalized_petersen(5, 2),
    "desargues": lambda: _generalized_petersen(10, 3),
    "asymmetric-unstable-12": _asymmetric_unstable_12,
}

_PARAMETRIC = {
    "cycle": (_cycle, 1),
    "path": (_path, 1),
    "complete": (_complete, 1),
    "complete_bipartite": (_complete_bipartite, 2),
    "generalized_petersen": (_generalized_petersen, 2),
    "hypercube": (_hypercube, 1),
}


def named_graph(name: str, *params: int) -> Graph:
    """Reference graphs by name.

    Parametric names take integers, either as arguments or inline:
    ``named_graph("cycle", 6)``, ``named_graph("cycle6")``,
    ``named_graph("generalized_petersen(10,3)")`` and
    ``named_graph("hypercube5")`` all work.
    """
    key = name.strip().lower().replace(" ", "")
    if not params:
        key, params = _split_inline(key)
    if key in NAMED_GRAPHS:
        if params:
            raise ConstructionError(f"{key} takes no parameters")
        return NAMED_GRAPHS[key]()
    if key in _PARAMETRIC:
        fn, arity = _PARAMETRIC[key]
        if len(params) != arity:
            raise ConstructionError(f"{key} takes {arity} parameter(s), got {len(params)}")
        return fn(*params)
    raise ConstructionError(f"unknown graph name {name!r}")


def _split_inline(key: str) -> tuple[str, tuple[int, ...]]:
    if key in NAMED_GRAPHS or key in _PARAMETRIC:
        return key, ()
    if key.endswith(")") and "(" in key:
        head, _, rest = key.partition("(")
        try:
            return head, tuple(int(x) for x in rest[:-1].split(",") if x)
        except ValueError as exc:
            raise ConstructionError(f"bad parameters in {key!r}") from exc
    i = len(key)
    while i > 0 and key[i - 1].isdigit():
        i -= 1
    head, digits = key[:i].rstrip("_"), key[i:]
    if digits and head in _PARAMETRIC:
        return head, (int(digits),)
    return key, ()
