"""Folding a cover back down to its possible base graphs.

A strongly switching involution of a bipartite graph picks out one base
graph whose double cover is the graph we started from. The hexagon folds
two ways; the Desargues graph folds to two non-isomorphic cubic graphs.
"""
from tfcousins import (
    Permutation,
    base_graph_census,
    cdc,
    certificate,
    enumerate_guides,
    fold,
    make_guide,
    named_graph,
    trivial_guide,
    write_graph6,
)

c6 = named_graph("cycle", 6)
d = cdc(c6)
print("guides on cdc(C6):", len(enumerate_guides(d)))
print("trivial guide folds to C6:", certificate(fold(d, trivial_guide(d)).graph) == certificate(c6))
anti = Permutation(tuple(((x % 6) + 3) % 6 + (0 if x >= 6 else 6) for x in range(12)))
res = fold(d, make_guide(d, anti))
c3 = named_graph("cycle", 3)
print("antipodal guide folds to two triangles:", certificate(res.graph) == certificate(c3.disjoint_union(c3)))

print("\nbase graphs of the Desargues graph")
for c in base_graph_census(cdc(named_graph("petersen"))):
    print(" ", write_graph6(c.graph), "via", c.guide.involution.cycle_notation())

print("\nbase graphs of Q5 u Q5 (bipartite shortcut)")
q5 = named_graph("hypercube", 5)
for c in base_graph_census(cdc(q5), mode="bipartite"):
    print(" ", write_graph6(c.graph))
