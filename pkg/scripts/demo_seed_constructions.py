"""Growing cousin pairs from two triangles and a hexagon.

We start from the seed pair (C3 u C3, C6) and add edges that the
TF-isomorphism carries along: entangled edges keep the pair non-isomorphic,
split-image edges collapse it into an isomorphic but unstable pair, and
pins add new vertices.
"""
from tfcousins import (
    Permutation,
    TfPair,
    add_entangled_edge,
    add_pin,
    add_split_image_edges,
    are_isomorphic,
    are_tf_cousins,
    is_unstable,
    named_graph,
    seed_pair,
    substitute,
    verify_tf,
)

s = seed_pair(3)
print("seed entangled pairs:", s.entangled_pairs)

t = s
for x, y in s.entangled_pairs:
    t = add_entangled_edge(t, x, y)
    print(f"entangled edge {x}-{y}: cousins = {are_tf_cousins(t.g, t.h)}, witness ok = {verify_tf(t.g, t.h, t.pair)}")

t = add_split_image_edges(s, (2, 4), (1, 5))
print("\nsplit-image edges (2,4)/(1,5):",
      "isomorphic =", are_isomorphic(t.g, t.h) is not None, "| unstable =", is_unstable(t.g))

t = add_pin(add_pin(s, [(0, 3)]), [(1, 4)])
print("two pins:", t.g.n, "vertices, cousins =", are_tf_cousins(t.g, t.h))

k23 = named_graph("complete_bipartite", 2, 3)
swap = TfPair(Permutation.identity(5), Permutation.from_cycles(5, [(0, 1)]))
g, h, p = substitute(k23, k23, swap, 0, 1)
print("\nK_{2,3} substitution:", g.n, "vertices, cousins =", are_tf_cousins(g, h))
