"""Acceptance suite.

Every test carries a ``criterion`` marker. The terminal summary prints one
PASS/FAIL line per criterion; a criterion fails if any of its tests fail.
Targets that exact enumeration does not reproduce are strict xfails and show
as FAIL*.
"""

import itertools
import random
import time

import numpy as np
import pytest

from tfcousins import (
    ClawParams,
    Permutation,
    TfPair,
    add_entangled_edge,
    add_split_image_edges,
    adjacency_matrix,
    are_isomorphic,
    are_tf_cousins,
    automorphism_group,
    base_graph_census,
    cdc,
    certificate,
    char_poly,
    claw_companion,
    claw_graph,
    enumerate_guides,
    find_tf_isomorphism,
    fold,
    is_unstable,
    named_graph,
    seed_pair,
    tf_automorphism_group,
    make_guide,
    trivial_guide,
    verify_conjecture,
    verify_tf,
)
from tfcousins.structure import count_cycles, diameter, girth, is_bipartite

from conftest import SPLIT_VARIANTS, census, census_timed, connected_graphs

criterion = pytest.mark.criterion


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


# 1 ------------------------------------------------------------------------------

@criterion(1, "claw identity: CG(1) = Petersen, cdc(CG(1)) = GP(10,3); exact, < 1 s")
def test_claw_identity():
    with Budget(1.0):
        cg1 = claw_graph(ClawParams(1, 3))
        assert certificate(cg1) == certificate(named_graph("petersen"))
        assert certificate(cdc(cg1).graph) == certificate(named_graph("generalized_petersen", 10, 3))


# 2 ------------------------------------------------------------------------------

@criterion(2, "parity: CG(n), CG'(n) cousins iff n odd, n in 1..4; exact, < 10 s")
def test_parity_dichotomy():
    with Budget(10.0):
        got = {n: are_tf_cousins(claw_graph(ClawParams(n)), claw_companion(ClawParams(n))) for n in (1, 2, 3, 4)}
    assert got == {1: True, 2: False, 3: True, 4: False}


# 3 ------------------------------------------------------------------------------

CG3 = claw_graph(ClawParams(3))
CG3P = claw_companion(ClawParams(3))
C3_TITLE = "CG(3) invariants: 30/45, cubic, girth 6, diam 5, 18 six-cycles, spectra; exact, < 30 s"


@criterion(3, C3_TITLE)
@pytest.mark.parametrize("which", ["CG", "CG'"])
def test_cg3_structure(which):
    g = CG3 if which == "CG" else CG3P
    assert (g.n, g.num_edges) == (30, 45)
    assert set(g.degrees()) == {3}
    assert girth(g) == 6
    assert diameter(g) == 5


@criterion(3, C3_TITLE)
@pytest.mark.xfail(strict=True, reason="claw graph on 30 vertices has 9 six-cycles, not 18")
@pytest.mark.parametrize("which", ["CG", "CG'"])
def test_cg3_six_cycles(which):
    g = CG3 if which == "CG" else CG3P
    assert count_cycles(g, 6) == 18, f"{which}(3) has {count_cycles(g, 6)} six-cycles"


@criterion(3, C3_TITLE)
def test_cg3_spectra_and_covers():
    with Budget(30.0):
        assert char_poly(CG3) != char_poly(CG3P)
        assert char_poly(cdc(CG3).graph) == char_poly(cdc(CG3P).graph)
        assert certificate(cdc(CG3).graph) == certificate(cdc(CG3P).graph)


# 4 ------------------------------------------------------------------------------

@criterion(4, "hexagon folds: trivial guide -> C6, antipodal -> C3 u C3; exact, < 1 s")
def test_hexagon_folds():
    with Budget(1.0):
        c6 = named_graph("cycle", 6)
        d = cdc(c6)
        assert certificate(fold(d, trivial_guide(d)).graph) == certificate(c6)
        # (u, i) -> (u + 3, 1 - i)
        anti = Permutation(tuple(((x % 6) + 3) % 6 + (0 if x >= 6 else 6) for x in range(12)))
        res = fold(d, make_guide(d, anti))
        c3 = named_graph("cycle", 3)
        assert res.loopless
        assert certificate(res.graph) == certificate(c3.disjoint_union(c3))
        assert certificate(res.graph) != certificate(c6)


# 5 ------------------------------------------------------------------------------

@criterion(5, "asymmetric unstable 12-vertex graph: |Aut| = 1, (gamma, gamma^-1) TF-auto; exact, < 1 s")
def test_asymmetric_unstable_self_check():
    with Budget(1.0):
        g = named_graph("asymmetric-unstable-12")
        assert (g.n, g.num_edges) == (12, 18)
        assert automorphism_group(g).order == 1
        gamma = Permutation.from_cycles(12, [(1, 2, 3), (4, 5, 6), (7, 8, 9), (10, 11, 12)], one_based=True)
        pair = TfPair(gamma, gamma.inverse())
        assert pair.nontrivial
        assert verify_tf(g, g, pair)
        assert pair in tf_automorphism_group(g)
        assert is_unstable(g)


# 6 ------------------------------------------------------------------------------

@criterion(6, "Q5 two-copy cover: 3 loopless folds, distinct char polys, cdc = Q5 u Q5; exact, < 2 min")
def test_q5_triple():
    with Budget(120.0):
        q5 = named_graph("hypercube", 5)
        d = cdc(q5)
        classes = [c for c in base_graph_census(d, mode="bipartite") if c.loopless]
        assert len(classes) == 3
        assert len({char_poly(c.graph) for c in classes}) == 3
        target = certificate(q5.disjoint_union(q5))
        assert all(certificate(cdc(c.graph).graph) == target for c in classes)


# 7 ------------------------------------------------------------------------------

EXPECTED_PAIRS = {6: 0, 7: 4, 8: 39, 9: 469}

# exact enumeration finds 3 / 24 / 255 pairs and counterexamples to the
# circuit conjecture; see the README for the cross-checks behind this
SHORTFALL = pytest.mark.xfail(strict=True, reason="target not reproduced by exact enumeration")


def _census_param(n):
    marks = [SHORTFALL] if n >= 7 else []
    if n == 9:
        marks.append(pytest.mark.slow)
    return pytest.param(n, marks=marks)


@criterion(7, "connected census pairs 0/4/39/469 for n=6..9; exact, n <= 8 under 1 min, n = 9 under 30 min")
@pytest.mark.parametrize("n", [_census_param(n) for n in (6, 7, 8, 9)])
def test_census_counts(n):
    recs, seconds = census_timed(n)
    budget = 1800.0 if n == 9 else 60.0
    assert seconds < budget, f"census took {seconds:.0f}s"
    got = sum(r.pair_count for r in recs)
    assert got == EXPECTED_PAIRS[n], f"n={n}: {got} pairs, expected {EXPECTED_PAIRS[n]}"


# 8 ------------------------------------------------------------------------------

@criterion(8, "circuit conjecture holds on every census record, n=6..9; exact")
@pytest.mark.parametrize("n", [_census_param(n) for n in (6, 7, 8, 9)])
def test_conjecture_on_census(n):
    recs = census(n)
    failing = [r.members for r in recs if not verify_conjecture(r).holds]
    assert not failing, f"n={n}: fails on {len(failing)}/{len(recs)} groups, e.g. {failing[0]}"


# 9 ------------------------------------------------------------------------------

def _brute_force_tf(g, h):
    # every (alpha, beta) pair, vectorised over beta: need B[alpha(u), beta(v)] == A[u, v]
    n = g.n
    a, b = adjacency_matrix(g), adjacency_matrix(h)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    for alpha in perms:
        rows = b[alpha]                      # rows[u] = B[alpha(u)]
        cand = rows[:, perms]                # (n, |S_n|, n)
        ok = (cand == a[:, None, :]).all(axis=(0, 2))
        if ok.any():
            return True
    return False


@criterion(9, "find_tf_isomorphism agrees with brute-force (alpha, beta) search, connected n <= 5; exact, < 5 min")
def test_oracle_equivalence():
    with Budget(300.0):
        checked = 0
        for n in range(1, 6):
            gs = connected_graphs(n)
            for g, h in itertools.product(gs, repeat=2):
                found = find_tf_isomorphism(g, h)
                assert (found is not None) == _brute_force_tf(g, h), (g, h)
                if found is not None:
                    assert verify_tf(g, h, found)
                checked += 1
    assert checked == 1 + 1 + 4 + 36 + 441


# 10 -----------------------------------------------------------------------------

@criterion(10, "|Aut(cdc g)| = 2 |Aut_TF(g)|, connected non-bipartite n <= 7 (1000 sample on 7); exact, < 10 min")
def test_order_identity():
    rng = random.Random(2010)
    with Budget(600.0):
        for n in range(1, 8):
            gs = [g for g in connected_graphs(n) if not is_bipartite(g)]
            if n == 7 and len(gs) > 1000:
                gs = rng.sample(gs, 1000)
            for g in gs:
                assert automorphism_group(cdc(g).graph).order == 2 * tf_automorphism_group(g).order, g


# 11 -----------------------------------------------------------------------------

@criterion(11, "cdc(fold(d, phi)) = d for 200 random strongly switching guides on census covers; exact")
def test_cover_recovery():
    pool = []
    for n in (7, 8):
        for rec in census(n):
            for g in rec.graphs():
                d = cdc(g)
                pool.extend((d, gd) for gd in enumerate_guides(d) if gd.strongly_switching)
    assert len(pool) >= 200
    rng = random.Random(2011)
    for d, gd in rng.sample(pool, 200):
        res = fold(d, gd)
        assert res.loopless
        assert certificate(cdc(res.graph).graph) == certificate(d.graph)


# 12 -----------------------------------------------------------------------------

@criterion(12, "seed constructions: 3 entangled-edge cousins, 3 split-image isomorphic unstable pairs; exact, < 5 s")
def test_seed_constructions():
    with Budget(5.0):
        for count in (1, 2, 3):
            s = seed_pair(3)
            for x, y in s.entangled_pairs[:count]:
                s = add_entangled_edge(s, x, y)
            assert verify_tf(s.g, s.h, s.pair)
            assert are_tf_cousins(s.g, s.h)
        for pairs in SPLIT_VARIANTS.values():
            s = seed_pair(3)
            for e1, e2 in pairs:
                s = add_split_image_edges(s, e1, e2)
            assert verify_tf(s.g, s.h, s.pair)
            assert are_isomorphic(s.g, s.h) is not None
            assert is_unstable(s.g)
