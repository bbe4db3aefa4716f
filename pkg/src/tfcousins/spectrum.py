"""Exact characteristic polynomials of adjacency matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, MixedGraph

__all__ = ["CharPoly", "char_poly", "adjacency_matrix"]


@dataclass(frozen=True)
class CharPoly:
    """``det(xI - A)``; ``coefficients[i]`` multiplies ``x**(n - i)``."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        n = self.degree
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            p = n - i
            mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
            else:
                coef = f"{'-' if c < 0 else '+'}{abs(c)}"
            terms.append(f"{coef}{mono}")
        s = " ".join(terms) or "0"
        return s[1:] if s.startswith("+") else s


def adjacency_matrix(g: Graph | MixedGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    if isinstance(g, Graph):
        for u, v in g.edges:
            a[u, v] = a[v, u] = 1
    else:
        for u, v in g.arcs:
            a[u, v] = 1
    return a


def char_poly(g: Graph | MixedGraph) -> CharPoly:
    """Faddeev-LeVerrier over Python integers.

    Every division ``tr(A M_k) / k`` is exact for an integer matrix, so no
    rationals are needed.
    """
    n = g.n
    if n == 0:
        return CharPoly((1,))
    a = adjacency_matrix(g).astype(object)
    coeffs = [1]
    m = np.zeros((n, n), dtype=object)
    ident = np.identity(n, dtype=object)
    c = 1
    for k in range(1, n + 1):
        m = a.dot(m) + c * ident
        am = a.dot(m)
        tr = int(np.trace(am))
        assert tr % k == 0
        c = -tr // k
        coeffs.append(c)
    return CharPoly(tuple(int(x) for x in coeffs))
