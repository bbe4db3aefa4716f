"""Petersen graph and its claw-graph cousin.

Both share the Desargues graph as canonical double cover, yet they are not
isomorphic. We build the pair, exhibit the TF-isomorphism and then show
how the parity of n decides whether the claw-graph pair stays related.
"""
from tfcousins import (
    ClawParams,
    are_tf_cousins,
    cdc,
    certificate,
    claw_companion,
    claw_graph,
    claw_tf_pair,
    entanglement,
    named_graph,
    verify_tf,
)

p = ClawParams(1)
g, h = claw_graph(p), claw_companion(p)
print("CG(1) is the Petersen graph:", certificate(g) == certificate(named_graph("petersen")))
print("cdc(CG(1)) is the Desargues graph:", certificate(cdc(g).graph) == certificate(named_graph("desargues")))
print("CG(1) and CG'(1) isomorphic:", certificate(g) == certificate(h))

pair = claw_tf_pair(p)
print("\nwitness for CG'(1) -> CG(1)")
print("  alpha =", pair.alpha.cycle_notation())
print("  beta  =", pair.beta.cycle_notation())
print("  verified:", verify_tf(h, g, pair))
print("  pins:", sorted(entanglement(pair).pins))

print("\nparity of n")
for n in range(1, 5):
    q = ClawParams(n)
    print(f"  n={n}: {q.order:3d} vertices, cousins = {are_tf_cousins(claw_graph(q), claw_companion(q))}")
