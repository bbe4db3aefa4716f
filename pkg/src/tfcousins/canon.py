"""Canonical labeling, isomorphism and automorphism groups.

The engine works on a vertex-coloured structure with one or more arc
relations.  An ordered partition is refined to an equitable one by
splitting each cell on neighbour counts into splitter cells; leaves of the
individualization tree are discrete partitions, and the canonical leaf is
the maximum of (refinement trace, relabeled adjacency) over the tree.

Two searches share the refinement code:

* :meth:`_Engine.canonical` prunes by comparing traces with the best leaf,
  by orbits of automorphisms discovered on the way, and by jumping back to
  the common ancestor whenever a leaf repeats the first or best leaf.
* :meth:`_Engine.automorphisms` walks the first path bottom-up and, for
  each level, looks for automorphisms mapping the base point to every
  other vertex of its cell.  The generators found at levels ``>= i`` then
  generate the pointwise stabilizer of the first ``i`` base points, which
  gives a base and strong generating set and the exact order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph6 import write_graph6
from .graphs import Graph, MixedGraph
from .perm import PermGroup, Permutation

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "certificate",
    "are_isomorphic",
    "automorphism_group",
    "find_isomorphism",
]


@dataclass(frozen=True)
class CanonicalForm:
    """``relabeling`` sends each input vertex to its canonical position."""

    relabeling: Permutation
    certificate: bytes


class _State:
    __slots__ = ("lab", "ends", "cstart", "ncells")

    def __init__(self, lab, ends, cstart, ncells):
        self.lab = lab
        self.ends = ends
        self.cstart = cstart
        self.ncells = ncells

    def copy(self) -> _State:
        return _State(self.lab[:], self.ends[:], self.cstart[:], self.ncells)


class _Engine:
    def __init__(self, n: int, relations: Sequence[tuple[list[int], list[int]]], colours: Sequence):
        self.n = n
        self.relations = list(relations)
        self.colours = list(colours)
        self.symmetric = all(out is inn for out, inn in self.relations)
        if len(self.relations) == 1 and self.symmetric:
            masks = self.relations[0][0]
            self._key = lambda v, w: (masks[v] & w).bit_count()
        else:
            rels = self.relations

            def key(v, w):
                out = []
                for o, i in rels:
                    out.append((o[v] & w).bit_count())
                    if o is not i:
                        out.append((i[v] & w).bit_count())
                return tuple(out)

            self._key = key

    # -- partitions ------------------------------------------------------
    def initial_state(self) -> _State:
        n = self.n
        order = sorted(range(n), key=lambda v: (self.colours[v], v))
        lab = order
        ends = [0] * n
        cstart = [0] * n
        ncells = 0
        i = 0
        while i < n:
            j = i
            while j < n and self.colours[lab[j]] == self.colours[lab[i]]:
                j += 1
            ends[i] = j
            for k in range(i, j):
                cstart[lab[k]] = i
            ncells += 1
            i = j
        state = _State(lab, ends, cstart, ncells)
        starts = []
        i = 0
        while i < n:
            starts.append(i)
            i = ends[i]
        self.refine(state, starts)
        return state

    def refine(self, st: _State, splitters: list[int]) -> tuple:
        n = self.n
        lab, ends, cstart = st.lab, st.ends, st.cstart
        key = self._key
        trace = []
        queue = deque(splitters)
        inq = set(splitters)
        while queue and st.ncells < n:
            ws = queue.popleft()
            inq.discard(ws)
            wmask = 0
            for v in lab[ws:ends[ws]]:
                wmask |= 1 << v
            s = 0
            while s < n:
                e = ends[s]
                if e - s > 1:
                    cell = lab[s:e]
                    keys = [key(v, wmask) for v in cell]
                    k0 = keys[0]
                    for k in keys:
                        if k != k0:
                            break
                    else:
                        s = e
                        continue
                    groups: dict = {}
                    for v, k in zip(cell, keys):
                        groups.setdefault(k, []).append(v)
                    order = sorted(groups)
                    pos = s
                    new_starts = []
                    sizes = []
                    for k in order:
                        grp = groups[k]
                        m = len(grp)
                        lab[pos:pos + m] = grp
                        ends[pos] = pos + m
                        for v in grp:
                            cstart[v] = pos
                        new_starts.append(pos)
                        sizes.append(m)
                        pos += m
                    st.ncells += len(order) - 1
                    trace.append((s, tuple(zip(order, sizes))))
                    if s in inq:
                        for p in new_starts[1:]:
                            queue.append(p)
                            inq.add(p)
                    else:
                        big = sizes.index(max(sizes))
                        for idx, p in enumerate(new_starts):
                            if idx != big:
                                queue.append(p)
                                inq.add(p)
                s = e
        return tuple(trace)

    def individualize(self, st: _State, v: int) -> tuple:
        s = st.cstart[v]
        e = st.ends[s]
        lab = st.lab
        i = lab.index(v, s, e)
        lab[s], lab[i] = lab[i], lab[s]
        st.ends[s] = s + 1
        st.ends[s + 1] = e
        for k in range(s + 1, e):
            st.cstart[lab[k]] = s + 1
        st.ncells += 1
        return (s,) + self.refine(st, [s])

    def target_cell(self, st: _State) -> int:
        s = 0
        ends = st.ends
        while s < self.n:
            if ends[s] - s > 1:
                return s
            s = ends[s]
        raise AssertionError("partition is discrete")

    def rows(self, lab: list[int]) -> tuple:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        out = []
        for o, _ in self.relations:
            for v in lab:
                m = o[v]
                r = 0
                while m:
                    low = m & -m
                    r |= 1 << pos[low.bit_length() - 1]
                    m ^= low
                out.append(r)
        return tuple(out)

    # -- canonical search --------------------------------------------------
    def canonical(self) -> list[int]:
        root = self.initial_state()
        self._first = None
        self._best = None
        self._autos: list[list[int]] = []
        if root.ncells == self.n:
            return root.lab
        self._canon_dfs(root, [], [])
        return self._best[2]

    def _leaf(self, lab, seq, traces) -> int | None:
        rows = self.rows(lab)
        key = (traces, rows)
        if self._first is None:
            self._first = self._best = (key, seq, lab)
            return None
        for ref in (self._first, self._best):
            if key == ref[0]:
                gamma = [0] * self.n
                for a, b in zip(ref[2], lab):
                    gamma[a] = b
                self._autos.append(gamma)
                k = 0
                other = ref[1]
                while k < len(seq) and seq[k] == other[k]:
                    k += 1
                return k
        if key > self._best[0]:
            self._best = (key, seq, lab)
        return None

    def _canon_dfs(self, st: _State, seq: list[int], traces: list) -> int | None:
        level = len(seq)
        s = self.target_cell(st)
        cell = sorted(st.lab[s:st.ends[s]])
        explored: list[int] = []
        for v in cell:
            if explored and self._in_explored_orbit(v, explored, seq):
                continue
            child = st.copy()
            t = self.individualize(child, v)
            ntraces = traces + [t]
            explored.append(v)
            if not self._worth_exploring(ntraces):
                continue
            cseq = seq + [v]
            if child.ncells == self.n:
                r = self._leaf(child.lab, cseq, ntraces)
            else:
                r = self._canon_dfs(child, cseq, ntraces)
            if r is not None and r < level:
                return r
        return None

    def _worth_exploring(self, traces: list) -> bool:
        if self._best is None:
            return True
        depth = len(traces)
        first_t = self._first[0][0]
        if first_t[:depth] == traces:
            return True
        return traces >= self._best[0][0][:depth]

    def _in_explored_orbit(self, v: int, explored: list[int], seq: list[int]) -> bool:
        gens = [g for g in self._autos if all(g[x] == x for x in seq)]
        if not gens:
            return False
        orbit = {v}
        queue = [v]
        targets = set(explored)
        for x in queue:
            if x in targets:
                return True
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        return False

    # -- automorphism group --------------------------------------------------
    def automorphisms(self) -> tuple[list[list[int]], list[int], list[int]]:
        """Return (generators, base, orbit sizes of the base points)."""
        root = self.initial_state()
        path = []  # (state before individualizing, cell, base point)
        st = root
        traces = []
        while st.ncells < self.n:
            s = self.target_cell(st)
            cell = sorted(st.lab[s:st.ends[s]])
            b = cell[0]
            path.append((st, cell, b))
            st = st.copy()
            traces.append(self.individualize(st, b))
        zeta_lab = st.lab
        zeta_rows = self.rows(zeta_lab)
        gens: list[list[int]] = []
        orbit_sizes = [1] * len(path)
        for i in range(len(path) - 1, -1, -1):
            node, cell, b = path[i]
            tested = [b]
            for v in cell:
                if v == b or self._orbit_hits(v, tested, gens):
                    continue
                gamma = self._find_equivalent(node, v, i, traces, zeta_lab, zeta_rows)
                if gamma is not None:
                    gens.append(gamma)
                tested.append(v)
            orbit_sizes[i] = len(self._orbit(b, gens))
        base = [b for _, _, b in path]
        return gens, base, orbit_sizes

    @staticmethod
    def _orbit(x: int, gens: list[list[int]]) -> set[int]:
        orbit = {x}
        queue = [x]
        for y in queue:
            for g in gens:
                z = g[y]
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        return orbit

    def _orbit_hits(self, v: int, targets: list[int], gens: list[list[int]]) -> bool:
        if not gens:
            return False
        orb = self._orbit(v, gens)
        return any(t in orb for t in targets)

    def _find_equivalent(self, node: _State, v: int, level: int, traces, zeta_lab, zeta_rows):
        st = node.copy()
        t = self.individualize(st, v)
        if t != traces[level]:
            return None
        if st.ncells == self.n:
            return self._match(st.lab, zeta_lab, zeta_rows)
        s = self.target_cell(st)
        for w in sorted(st.lab[s:st.ends[s]]):
            got = self._find_equivalent(st, w, level + 1, traces, zeta_lab, zeta_rows)
            if got is not None:
                return got
        return None

    def _match(self, lab, zeta_lab, zeta_rows):
        if self.rows(lab) != zeta_rows:
            return None
        gamma = [0] * self.n
        for a, b in zip(zeta_lab, lab):
            gamma[a] = b
        return gamma


# -- structure builders ------------------------------------------------------

def _engine_for(g: Graph | MixedGraph, colouring: Sequence | None = None) -> _Engine:
    n = g.n
    base = list(colouring) if colouring is not None else [0] * n
    if len(base) != n:
        raise ValueError("colouring length differs from vertex count")
    if isinstance(g, Graph):
        masks = g.masks
        return _Engine(n, [(masks, masks)], base)
    out, inn = g.out_masks, g.in_masks
    if g.is_symmetric():
        # loops are a vertex property; the relation keeps them so relabeled rows see them
        colours = [(c, out[v] >> v & 1) for v, c in enumerate(base)]
        return _Engine(n, [(out, out)], colours)
    colours = [(c, out[v] >> v & 1) for v, c in enumerate(base)]
    return _Engine(n, [(out, inn)], colours)


def _cert_bytes(g: Graph | MixedGraph, engine: _Engine, lab: list[int]) -> bytes:
    n = g.n
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    relabel = Permutation(tuple(pos))
    colour_part = b""
    if any(c != engine.colours[0] for c in engine.colours):
        colour_part = b"|" + repr([engine.colours[v] for v in lab]).encode()
    if isinstance(g, Graph):
        return write_graph6(g.relabel(relabel)).encode("ascii") + colour_part
    h = g.relabel(relabel)
    bits = 0
    for u, v in h.arcs:
        bits |= 1 << (u * n + v)
    nbytes = (n * n + 7) // 8
    return b"D" + n.to_bytes(4, "big") + bits.to_bytes(nbytes, "big") + colour_part


def canonical_form(g: Graph | MixedGraph, colouring: Sequence | None = None) -> CanonicalForm:
    """Canonical relabeling and certificate.

    ``colouring`` assigns each vertex a comparable colour that isomorphisms
    must preserve; it becomes part of the certificate.
    """
    eng = _engine_for(g, colouring)
    lab = eng.canonical()
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    return CanonicalForm(Permutation(tuple(pos)), _cert_bytes(g, eng, lab))


def certificate(g: Graph | MixedGraph, colouring: Sequence | None = None) -> bytes:
    return canonical_form(g, colouring).certificate


def find_isomorphism(
    g: Graph | MixedGraph,
    h: Graph | MixedGraph,
    colouring_g: Sequence | None = None,
    colouring_h: Sequence | None = None,
) -> Permutation | None:
    """Bijection ``V(g) -> V(h)`` carrying arcs to arcs (and colours to colours)."""
    if g.n != h.n or type(g) is not type(h):
        return None
    if isinstance(g, Graph) and g.num_edges != h.num_edges:
        return None
    cg = canonical_form(g, colouring_g)
    ch = canonical_form(h, colouring_h)
    if cg.certificate != ch.certificate:
        return None
    iso = ch.relabeling.inverse() * cg.relabeling
    if not _is_isomorphism(g, h, iso):
        raise AssertionError("certificate match without a valid isomorphism")
    return iso


def _is_isomorphism(g, h, p: Permutation) -> bool:
    if isinstance(g, Graph):
        target = h.edge_set
        return all(((p(u), p(v)) if p(u) < p(v) else (p(v), p(u))) in target for u, v in g.edges)
    target = h.arc_set
    return len(g.arcs) == len(h.arcs) and all((p(u), p(v)) in target for u, v in g.arcs)


def are_isomorphic(g: Graph, h: Graph) -> Permutation | None:
    return find_isomorphism(g, h)


def automorphism_group(g: Graph | MixedGraph, colouring: Sequence | None = None) -> PermGroup:
    eng = _engine_for(g, colouring)
    gens, base, _ = eng.automorphisms()
    perms = [Permutation(tuple(x)) for x in gens]
    for p in perms:
        if not _is_isomorphism(g, g, p):
            raise AssertionError("search produced a non-automorphism")
    return PermGroup(g.n, perms, base_hint=base)


def automorphism_group_order(g: Graph | MixedGraph, colouring: Sequence | None = None) -> int:
    """Order read straight off the orbit sizes of the base points."""
    eng = _engine_for(g, colouring)
    _, _, sizes = eng.automorphisms()
    out = 1
    for s in sizes:
        out *= s
    return out
