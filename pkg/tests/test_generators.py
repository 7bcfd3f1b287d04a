import itertools
import math
from statistics import mean

import networkx as nx
import pytest

from acyclic.generators import (
    GenerationFailure,
    gen_bipartite_random,
    gen_named,
    gen_one_subdivision,
    gen_projective_incidence,
    gen_random_ktree,
    gen_random_regular_girth,
    gen_subdivision_complete,
)
from acyclic.graph import degeneracy_order, girth, max_degree
from oracles import corpus, to_nx


def sparse_regime_density(n):
    return 4 * (math.log(n) / n) ** 0.25


def test_subdivision_sizes():
    assert nx.is_isomorphic(to_nx(gen_subdivision_complete(3)), to_nx(gen_named("cycle 6")))
    k4 = gen_subdivision_complete(4)
    assert (k4.n, k4.m) == (10, 12)
    k5 = gen_subdivision_complete(5)
    assert (k5.n, k5.m) == (15, 20)
    with pytest.raises(ValueError):
        gen_subdivision_complete(1)


def test_subdivision_structure():
    for name, g in corpus().items():
        s = gen_one_subdivision(g)
        h = to_nx(s)
        assert nx.is_bipartite(h), name
        assert sum(nx.triangles(h).values()) == 0
        assert (s.n, s.m) == (g.n + g.m, 2 * g.m)
        assert max_degree(s) == max(max_degree(g), 2 if g.m else 0)
        for i, (u, v) in enumerate(g.edges()):
            assert set(s.neighbours(g.n + i)) == {u, v}


def test_bipartite_random_edge_cases():
    g0 = gen_bipartite_random(7, 0.0, seed=1)
    assert (g0.n, g0.m) == (14, 0)
    g1 = gen_bipartite_random(7, 1.0, seed=1)
    assert nx.is_isomorphic(to_nx(g1), to_nx(gen_named("complete_bipartite 7 7")))
    with pytest.raises(ValueError):
        gen_bipartite_random(7, 1.5)
    for u, v in gen_bipartite_random(10, 0.5, seed=3).edges():
        assert u < 10 <= v


def test_bipartite_random_mean_degree_statistics():
    nside, p = 100, 0.3
    sigma = math.sqrt(p * (1 - p))  # sd of m / nside
    degrees = [gen_bipartite_random(nside, p, seed=s).m / nside for s in range(50)]
    for d in degrees:
        assert abs(d - nside * p) <= 3 * sigma
    assert abs(mean(degrees) - nside * p) <= 3 * sigma / math.sqrt(50)


def test_sparse_regime_density_exceeds_one_at_desk_scale():
    assert sparse_regime_density(100) > 1
    assert sparse_regime_density(10**4) < 1
    # the clipped value produces the complete bipartite graph
    g = gen_bipartite_random(100, min(1.0, sparse_regime_density(100)), seed=0)
    assert g.m == 100 * 100


def test_random_regular_girth():
    hits = 0
    for seed in range(10):
        try:
            g = gen_random_regular_girth(10, 3, 5, seed=seed)
        except GenerationFailure:
            continue
        hits += 1
        assert all(g.degree(v) == 3 for v in range(10))
        assert girth(g) >= 5
        assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())
    assert hits >= 5
    h = gen_random_regular_girth(12, 4, 3, seed=1)
    assert all(h.degree(v) == 4 for v in range(12)) and h.m == 24
    with pytest.raises(ValueError):
        gen_random_regular_girth(5, 3, 3, seed=0)
    with pytest.raises(GenerationFailure):
        # the Petersen graph is the only cubic girth-5 graph on 10 vertices; girth 6 needs 14
        gen_random_regular_girth(10, 3, 6, seed=0, max_tries=50)


def test_projective_plane_q2_is_heawood():
    g = gen_projective_incidence(2)
    assert (g.n, g.m) == (14, 21)
    assert all(g.degree(v) == 3 for v in range(14))
    assert girth(g) == 6
    gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(gen_named("heawood")))
    assert gm.is_isomorphic()
    mapping = gm.mapping
    heawood = gen_named("heawood")
    assert all(heawood.has_edge(mapping[u], mapping[v]) for u, v in g.edges())


def test_projective_plane_q3():
    g = gen_projective_incidence(3)
    assert g.n == 26 and all(g.degree(v) == 4 for v in range(26))
    assert girth(g) == 6
    with pytest.raises(ValueError):
        gen_projective_incidence(4)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_projective_codegree_one(q):
    g = gen_projective_incidence(q)
    half = q * q + q + 1
    for side in (range(half), range(half, 2 * half)):
        for u, v in itertools.combinations(side, 2):
            assert len(set(g.neighbours(u)) & set(g.neighbours(v))) == 1


def test_named_graphs():
    assert nx.is_isomorphic(to_nx(gen_named("cycle 6")), nx.cycle_graph(6))
    cube = gen_named("hypercube 3")
    assert (cube.n, cube.m) == (8, 12)
    assert nx.is_isomorphic(to_nx(gen_named("petersen")), nx.petersen_graph())
    assert nx.is_isomorphic(to_nx(gen_named("heawood")), nx.heawood_graph())
    assert gen_named("complete-bipartite 2 3").m == 6
    for bad in ("dodecahedron", "cycle", "cycle x", "cycle 2", ""):
        with pytest.raises(ValueError):
            gen_named(bad)


def test_random_ktree():
    for seed in range(5):
        g = gen_random_ktree(50, 2, seed)
        assert g.m == 2 * 50 - 3
        assert degeneracy_order(g)[1] == 2
        assert nx.is_chordal(to_nx(g))


def test_seeded_generators_reproducible():
    def same(make):
        return list(make().edges()) == list(make().edges())

    assert same(lambda: gen_bipartite_random(30, 0.2, seed=5))
    assert same(lambda: gen_random_regular_girth(16, 3, 4, seed=2))
    assert same(lambda: gen_random_ktree(30, 2, 9))
    assert list(gen_random_ktree(30, 2, 9).edges()) != list(gen_random_ktree(30, 2, 10).edges())
