"""Structural queries: connectivity, bipartition, girth, diameter, cycles."""

from __future__ import annotations

import math
from collections import deque

from .graphs import Graph, _components_from_masks

__all__ = [
    "connected_components",
    "is_connected",
    "bipartition",
    "is_bipartite",
    "girth",
    "diameter",
    "count_cycles",
    "contains_cycle",
    "has_twins",
    "twin_pairs",
]


def connected_components(g: Graph) -> list[list[int]]:
    return _components_from_masks(g.masks)


def is_connected(g: Graph) -> bool:
    # no vertices counts as connected
    return g.n == 0 or len(connected_components(g)) == 1


def bipartition(g: Graph) -> list[int] | None:
    """Proper 2-colouring with colour 0 on the lowest vertex of each component, or ``None``."""
    colour = [-1] * g.n
    adj = g.adj
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def _bfs_dist(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    adj = g.adj
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    adj = g.adj
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def diameter(g: Graph) -> float:
    """Maximum eccentricity; ``math.inf`` when disconnected."""
    if g.n == 0:
        return 0
    best = 0
    for s in range(g.n):
        dist = _bfs_dist(g, s)
        if min(dist) < 0:
            return math.inf
        best = max(best, max(dist))
    return best


def _cycles(g: Graph, length: int, stop_at_first: bool) -> int:
    # Each cycle is counted once: its minimum vertex is the anchor and the
    # anchor's two cycle-neighbours appear in increasing order along the walk.
    masks = g.masks
    n = g.n
    count = 0
    for anchor in range(n):
        allowed = ~((1 << (anchor + 1)) - 1)  # vertices > anchor
        first_choices = masks[anchor] & allowed
        stack = []
        f = first_choices
        while f:
            low = f & -f
            f ^= low
            v = low.bit_length() - 1
            stack.append((v, v, (1 << anchor) | low, 1))
        while stack:
            first, u, used, depth = stack.pop()
            if depth == length - 1:
                # close the cycle back to the anchor, orienting by first < last
                if masks[u] >> anchor & 1 and u > first:
                    count += 1
                    if stop_at_first:
                        return count
                continue
            nxt = masks[u] & allowed & ~used
            while nxt:
                low = nxt & -nxt
                nxt ^= low
                w = low.bit_length() - 1
                stack.append((first, w, used | low, depth + 1))
    return count


def count_cycles(g: Graph, length: int) -> int:
    """Number of distinct cycle subgraphs of the given length."""
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if length > g.n:
        return 0
    return _cycles(g, length, stop_at_first=False)


def contains_cycle(g: Graph, length: int) -> bool:
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if length > g.n:
        return False
    return _cycles(g, length, stop_at_first=True) > 0


def twin_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pairs of distinct vertices with identical open neighbourhoods."""
    by_nbhd: dict[int, list[int]] = {}
    for v, m in enumerate(g.masks):
        by_nbhd.setdefault(m, []).append(v)
    out = []
    for vs in by_nbhd.values():
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                out.append((vs[i], vs[j]))
    return sorted(out)


def has_twins(g: Graph) -> bool:
    return len(set(g.masks)) < g.n
