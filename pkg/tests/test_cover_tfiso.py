import random

import networkx as nx
import pytest

from tfcousins import (
    ClawParams,
    Graph,
    MixedGraph,
    Permutation,
    TfPair,
    TfPairError,
    TrivialReason,
    adc,
    are_tf_cousins,
    automorphism_group,
    cdc,
    certificate,
    claw_companion,
    claw_graph,
    claw_tf_pair,
    entanglement,
    exhaustive_tf_isomorphism,
    find_tf_isomorphism,
    instability_report,
    is_unstable,
    named_graph,
    seed_pair,
    tf_automorphism_group,
    verify_tf,
)
from tfcousins.structure import bipartition, is_bipartite, is_connected

from conftest import connected_graphs, random_perm

C3 = named_graph("cycle", 3)
C4 = named_graph("cycle", 4)
C6 = named_graph("cycle", 6)
C3C3 = C3.disjoint_union(C3)
K2 = named_graph("complete", 2)
FIG2 = named_graph("asymmetric-unstable-12")


def one_based(n, cycles):
    return Permutation.from_cycles(n, cycles, one_based=True)


# -- covers ---------------------------------------------------------------------

def test_cdc_examples():
    d = cdc(K2)
    assert d.graph == Graph.from_edges(4, [(0, 3), (1, 2)])
    assert certificate(cdc(C3).graph) == certificate(C6)
    assert certificate(cdc(named_graph("petersen")).graph) == certificate(named_graph("desargues"))


def test_cdc_layout_and_invariants():
    rng = random.Random(0)
    for g in rng.sample(connected_graphs(7), 50):
        d = cdc(g)
        d.check()
        n = g.n
        assert d.graph.num_edges == 2 * g.num_edges
        for u, v in g.edges:
            assert d.graph.has_edge(d.vertex(u, 0), d.vertex(v, 1))
            assert d.graph.has_edge(d.vertex(v, 0), d.vertex(u, 1))
        assert d.base_vertex(n + 3) == (3, 1)
        assert bipartition(d.graph) is not None


def test_cdc_matches_networkx_tensor_product():
    for g in connected_graphs(6)[:40]:
        ng = nx.Graph(list(g.edges))
        ref = nx.tensor_product(ng, nx.complete_graph(2))
        ours = nx.Graph(list(cdc(g).graph.edges))
        assert nx.is_isomorphic(ref, ours)


def test_cdc_connectivity_law_and_two_copies():
    for n in range(2, 7):
        for g in connected_graphs(n):
            d = cdc(g).graph
            assert is_connected(d) == (not is_bipartite(g))
            if is_bipartite(g):
                assert certificate(d) == certificate(g.disjoint_union(g))


def test_adc_examples():
    assert adc(K2).digraph.arcs == ((0, 3), (1, 2))
    alt = adc(C3).digraph
    assert len(alt.arcs) == 6
    assert len(alt.weak_components()) == 1
    single = adc(MixedGraph(2, ((0, 1),))).digraph
    assert single.arcs == ((0, 3),)


def test_adc_sources_and_sinks():
    g = named_graph("petersen")
    alt = adc(g).digraph
    assert all(u < g.n <= v for u, v in alt.arcs)
    und = {(min(a), max(a)) for a in alt.arcs}
    assert und == set(cdc(g).graph.edges)


def test_instability_examples():
    r = instability_report(C3)
    assert (r.index, r.unstable, r.aut_cdc_order, r.aut_g_order) == (1, False, 12, 6)
    r = instability_report(C4)
    assert (r.index, r.unstable, r.trivial_reason) == (8, True, TrivialReason.BIPARTITE)
    assert r.aut_cdc_order == 128
    r = instability_report(FIG2)
    assert r.unstable and r.index >= 2 and r.aut_g_order == 1
    assert r.trivial_reason is TrivialReason.NONE
    r = instability_report(named_graph("complete_bipartite", 2, 3))
    assert r.unstable


def test_instability_flags_disconnected_input():
    r = instability_report(C3C3)
    assert not r.connected
    assert r.index >= 1


def test_index_is_integral_on_small_graphs():
    for n in range(1, 7):
        for g in connected_graphs(n):
            r = instability_report(g)
            assert r.index >= 1
            assert r.aut_cdc_order == 2 * r.aut_g_order * r.index
            assert r.unstable == (r.index > 1)


# -- TF pairs -------------------------------------------------------------------

def test_verify_tf_small_cousin_pair():
    g = Graph.from_edges(7, [(a - 1, b - 1) for a, b in [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7), (7, 4)]])
    p = TfPair(one_based(7, [(2, 5)]), one_based(7, [(1, 4), (3, 6)]))
    # target read off as the image of g under the pair and frozen
    h = Graph.from_edges(7, [(0, 1), (0, 2), (0, 6), (1, 2), (3, 4), (3, 5), (3, 6), (4, 5)])
    assert verify_tf(g, h, p)
    assert are_tf_cousins(g, h)


def test_verify_tf_trivial_cases():
    assert verify_tf(C6, C6, TfPair.identity(6))
    assert not verify_tf(C6, C6, TfPair(Permutation.identity(6), Permutation.from_cycles(6, [(0, 1)])))
    with pytest.raises(TfPairError):
        verify_tf(C6, C3, TfPair.identity(6))


def test_find_tf_examples():
    p = find_tf_isomorphism(C3C3, C6)
    assert p is not None and verify_tf(C3C3, C6, p)
    assert find_tf_isomorphism(C4, C6) is None
    params = ClawParams(1)
    p = find_tf_isomorphism(claw_companion(params), claw_graph(params))
    assert p is not None and verify_tf(claw_companion(params), claw_graph(params), p)


def test_literal_translation_pair_is_not_a_witness():
    # identity and shift-by-3 on the circuit: the pair as usually stated does not verify
    params = ClawParams(1)
    shift = Permutation(tuple((i + 3) % 6 for i in range(6)) + tuple(range(6, 10)))
    assert not verify_tf(claw_companion(params), claw_graph(params), TfPair(Permutation.identity(10), shift))
    assert verify_tf(claw_companion(params), claw_graph(params), claw_tf_pair(params))


def test_tf_cousin_examples():
    assert are_tf_cousins(claw_graph(ClawParams(1)), claw_companion(ClawParams(1)))
    assert not are_tf_cousins(claw_graph(ClawParams(2)), claw_companion(ClawParams(2)))
    assert not are_tf_cousins(C6, C6)


def test_tf_group_examples():
    grp = tf_automorphism_group(C3)
    assert grp.order == 6 and not grp.has_nontrivial()
    grp = tf_automorphism_group(FIG2)
    gamma = one_based(12, [(1, 2, 3), (4, 5, 6), (7, 8, 9), (10, 11, 12)])
    assert grp.order >= 3
    assert TfPair(gamma, gamma.inverse()) in grp
    k23 = named_graph("complete_bipartite", 2, 3)
    grp = tf_automorphism_group(k23)
    assert TfPair(Permutation.from_cycles(5, [(0, 1)]), Permutation.identity(5)) in grp


def test_is_unstable_examples():
    assert is_unstable(FIG2)
    assert not is_unstable(C3)
    assert is_unstable(C4)


def test_is_unstable_agrees_with_index():
    for n in range(1, 7):
        for g in connected_graphs(n):
            assert is_unstable(g) == instability_report(g).unstable


def test_diagonal_inclusion_and_group_law():
    for g in connected_graphs(6):
        grp = tf_automorphism_group(g)
        for s in automorphism_group(g).generators:
            assert TfPair(s, s) in grp
        for p in grp.generators:
            assert verify_tf(g, g, p)
        gens = grp.generators
        if len(gens) >= 2:
            assert (gens[0] * gens[1]) in grp


def test_order_law_on_6_vertices():
    for g in connected_graphs(6):
        if is_bipartite(g):
            continue
        assert automorphism_group(cdc(g).graph).order == 2 * tf_automorphism_group(g).order


def test_cousin_symmetry_and_inversion():
    g, h = claw_companion(ClawParams(1)), claw_graph(ClawParams(1))
    assert are_tf_cousins(g, h) == are_tf_cousins(h, g)
    p = find_tf_isomorphism(g, h)
    inv = p.inverse()
    assert verify_tf(h, g, inv)


def test_witness_soundness_random_relabelings():
    rng = random.Random(21)
    for g in rng.sample(connected_graphs(7), 60):
        h = g.relabel(random_perm(rng, g.n))
        p = find_tf_isomorphism(g, h)
        assert p is not None and verify_tf(g, h, p)


def test_mixed_graph_targets():
    s = seed_pair(3)
    p = find_tf_isomorphism(s.g, s.h)
    assert p is not None and verify_tf(s.g, s.h, p)
    looped = MixedGraph(2, ((0, 0), (0, 1), (1, 0)), loops=True)
    assert find_tf_isomorphism(looped, K2) is None


# -- entanglement ---------------------------------------------------------------

def test_entanglement_examples():
    e = entanglement(seed_pair(3).pair)
    assert e.pins == frozenset()
    assert e.entangled_pairs == {frozenset(p) for p in [(0, 3), (1, 4), (2, 5)]}
    e = entanglement(TfPair.identity(4))
    assert e.pins == frozenset(range(4)) and not e.entangled_pairs
    params = ClawParams(3)
    e = entanglement(claw_tf_pair(params))
    circuit = params.circuit_length
    assert e.pins == frozenset(range(circuit, params.order))
    assert e.entangled_pairs == {frozenset((m, m + circuit // 2)) for m in range(circuit // 2)}


def test_entanglement_disjointness():
    for pair in (seed_pair(5).pair, claw_tf_pair(ClawParams(1))):
        e = entanglement(pair)
        members = [x for p in e.entangled_pairs for x in p]
        assert len(members) == len(set(members))
        assert not set(members) & e.pins


# -- oracle ---------------------------------------------------------------------

def test_exhaustive_oracle_on_known_cases():
    assert exhaustive_tf_isomorphism(C3C3, C6) is not None
    assert exhaustive_tf_isomorphism(C3, named_graph("path", 3)) is None
    p = exhaustive_tf_isomorphism(named_graph("complete_bipartite", 2, 3), named_graph("complete_bipartite", 2, 3))
    assert p is not None
