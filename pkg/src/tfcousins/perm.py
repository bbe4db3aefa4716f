"""Permutations and permutation groups.

Permutations act on ``0..n-1`` and are stored as image tuples.  Products
follow function composition: ``(p * q)(x) == p(q(x))``.

:class:`PermGroup` keeps a stabilizer chain built by the deterministic
Schreier-Sims algorithm, which gives the exact order, membership testing
and enumeration of elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError

__all__ = ["Permutation", "PermGroup"]


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]], one_based: bool = False) -> Permutation:
        """Build from disjoint cycles, e.g. ``[(0, 1, 2), (3, 4)]``."""
        images = list(range(n))
        seen: set[int] = set()
        shift = 1 if one_based else 0
        for cyc in cycles:
            cyc = [c - shift for c in cyc]
            for a in cyc:
                if a in seen or not 0 <= a < n:
                    raise ValueError(f"bad cycle entry {a + shift}")
                seen.add(a)
            for i, a in enumerate(cyc):
                images[a] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        a = self.images
        return Permutation(tuple(a[b] for b in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles(include_fixed=True))) if self.degree else 1

    def cycle_notation(self, one_based: bool = False) -> str:
        shift = 1 if one_based else 0
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(c + shift) for c in cyc) + ")" for cyc in cycs)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_notation()}, n={self.degree})"


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # a after b
    return tuple(a[x] for x in b)


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


class _Level:
    """One stabilizer-chain level: base point, generators, Schreier vector."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[tuple[int, ...]] = []
        # orbit point -> element mapping ``point`` to it
        self.transversal: dict[int, tuple[int, ...]] = {}

    def rebuild(self, identity: tuple[int, ...]) -> None:
        trans = {self.point: identity}
        queue = [self.point]
        for x in queue:
            tx = trans[x]
            for g in self.gens:
                y = g[x]
                if y not in trans:
                    trans[y] = _mul(g, tx)
                    queue.append(y)
        self.transversal = trans


class PermGroup:
    """Permutation group given by generators.

    ``base_hint`` lets callers that already know a good base (for
    instance the individualized points of a canonical search) pass it in
    so the chain is short.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), base_hint: Sequence[int] = ()):
        self.degree = degree
        gens = []
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in group of degree {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.generators: list[Permutation] = gens
        self._identity = tuple(range(degree))
        self._levels: list[_Level] = []
        self._build(list(base_hint))

    # -- Schreier-Sims -------------------------------------------------
    def _sift(self, g: tuple[int, ...], start: int = 0) -> tuple[tuple[int, ...], int]:
        for i in range(start, len(self._levels)):
            lev = self._levels[i]
            b = g[lev.point]
            t = lev.transversal.get(b)
            if t is None:
                return g, i
            g = _mul(_inv(t), g)
        return g, len(self._levels)

    def _moved_point(self, g: tuple[int, ...], hint: list[int]) -> int:
        for b in hint:
            if g[b] != b:
                return b
        for i, x in enumerate(g):
            if i != x:
                return i
        raise AssertionError("identity has no moved point")

    def _build(self, hint: list[int]) -> None:
        ident = self._identity
        for g in self.generators:
            self._insert(g.images, 0, hint)
        # Schreier generators at every level must sift to the identity.
        i = len(self._levels) - 1
        while i >= 0:
            lev = self._levels[i]
            changed = None
            for x, tx in list(lev.transversal.items()):
                for s in list(lev.gens):
                    sx = _mul(s, tx)
                    t = lev.transversal[sx[lev.point]]
                    schreier = _mul(_inv(t), sx)
                    if schreier == ident:
                        continue
                    h, j = self._sift(schreier, i + 1)
                    if h != ident:
                        self._insert(h, i + 1, hint, known_level=j)
                        changed = j
                        break
                if changed is not None:
                    break
            if changed is not None:
                i = min(changed, len(self._levels) - 1)
            else:
                i -= 1

    def _insert(self, g: tuple[int, ...], start: int, hint: list[int], known_level: int | None = None) -> None:
        h, j = self._sift(g, start) if known_level is None else (g, known_level)
        if h == self._identity:
            return
        if j == len(self._levels):
            self._levels.append(_Level(self._moved_point(h, hint)))
        for k in range(start, j + 1):
            lev = self._levels[k]
            lev.gens.append(h)
            lev.rebuild(self._identity)

    # -- queries -------------------------------------------------------
    @cached_property
    def order(self) -> int:
        result = 1
        for lev in self._levels:
            result *= len(lev.transversal)
        assert factorial(self.degree) % result == 0
        return result

    @property
    def base(self) -> list[int]:
        return [lev.point for lev in self._levels]

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        h, _ = self._sift(p.images)
        return h == self._identity

    def orbit(self, x: int) -> list[int]:
        seen = {x}
        queue = [x]
        for y in queue:
            for g in self.generators:
                z = g.images[y]
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        done: set[int] = set()
        out = []
        for x in range(self.degree):
            if x not in done:
                orb = self.orbit(x)
                done.update(orb)
                out.append(orb)
        return out

    def elements(self, bound: int = 10**6) -> Iterator[Permutation]:
        """Yield every element; refuses groups larger than ``bound``."""
        if self.order > bound:
            raise CapacityError(f"group order {self.order} exceeds element bound {bound}")
        levels = self._levels

        # every element factors uniquely as t0 * t1 * ... with t_i from level i
        def walk(i: int, acc: tuple[int, ...]):
            if i == len(levels):
                yield acc
                return
            for t in levels[i].transversal.values():
                yield from walk(i + 1, _mul(acc, t))

        for el in walk(0, self._identity):
            yield Permutation(el)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, ngens={len(self.generators)})"
