import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acyclic.colouring import Colouring
from acyclic.constraints import ConstraintSet, heavy_in_codegree_constraints
from acyclic.cycles import (
    CycleFamily,
    EnumerationBudgetExceeded,
    canonical_cycle,
    count_cycles_through,
    cycle_degree_profile,
    enumerate_even_cycles,
    family_from_cycles,
    filter_antidirected,
    filter_gamma_free,
    is_antidirected,
    is_bicoloured,
)
from acyclic.generators import gen_named, gen_random_ktree
from acyclic.graph import Graph, degeneracy_order, girth, max_degree, orient_by_order
from acyclic.obstructions import contains_subgraph
from oracles import brute_even_cycles, corpus, small_graphs, to_nx


def _hamiltonian_cycles(g: Graph, verts: tuple[int, ...]) -> int:
    """Number of Hamiltonian cycles of the induced subgraph on ``verts`` (naive)."""
    first, rest = verts[0], verts[1:]
    count = 0
    for perm in itertools.permutations(rest):
        if perm[0] > perm[-1]:
            continue
        seq = (first,) + perm
        if all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))):
            count += 1
    return count


@settings(max_examples=60, deadline=None)
@given(small_graphs(min_n=1, max_n=8))
def test_enumeration_matches_subset_oracle(g):
    fam = enumerate_even_cycles(g, 8)
    by_set = {}
    for c in fam:
        by_set[frozenset(c)] = by_set.get(frozenset(c), 0) + 1
    for size in range(4, g.n + 1, 2):
        for verts in itertools.combinations(range(g.n), size):
            assert by_set.get(frozenset(verts), 0) == _hamiltonian_cycles(g, verts)
    assert len(set(fam.cycles)) == len(fam)
    assert all(canonical_cycle(c) == c for c in fam)


@settings(max_examples=60, deadline=None)
@given(small_graphs(min_n=1, max_n=9))
def test_enumeration_matches_networkx(g):
    assert set(enumerate_even_cycles(g, 10).cycles) == brute_even_cycles(g)


def test_enumeration_examples():
    assert len(enumerate_even_cycles(gen_named("cycle 6"), 8)) == 1
    assert len(enumerate_even_cycles(gen_named("complete 4"), 4)) == 3
    assert len(enumerate_even_cycles(gen_named("star 5"), 10)) == 0
    for bad in (3, 2, 7):
        with pytest.raises(ValueError):
            enumerate_even_cycles(gen_named("cycle 6"), bad)


def test_enumeration_budget():
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_even_cycles(gen_named("heawood"), 14, budget=100)


def test_girth_agrees_with_enumeration():
    for g in corpus().values():
        if g.n > 10:
            continue
        lengths = [len(c) for c in nx.simple_cycles(to_nx(g))]
        assert girth(g) == (min(lengths) if lengths else math.inf)


def test_canonical_form():
    assert canonical_cycle([3, 1, 2, 0]) == (0, 2, 1, 3)
    assert canonical_cycle([0, 3, 2, 1]) == (0, 1, 2, 3)


def test_filter_gamma_free_examples():
    c4 = gen_named("cycle 4")
    fam = enumerate_even_cycles(c4, 4)
    assert len(filter_gamma_free(fam, ConstraintSet.from_pairs(4, [(0, 2)]))) == 0
    assert len(filter_gamma_free(fam, ConstraintSet.from_pairs(4, c4.edges()))) == 1
    c6 = enumerate_even_cycles(gen_named("cycle 6"), 6)
    assert len(filter_gamma_free(c6, ConstraintSet.from_pairs(6, [(0, 2)]))) == 0


def _oriented(g, arcs):
    from acyclic.graph import Orientation

    out = [[] for _ in range(g.n)]
    inn = [[] for _ in range(g.n)]
    for u, v in arcs:
        out[u].append(v)
        inn[v].append(u)
    return Orientation(g, tuple(tuple(sorted(x)) for x in out), tuple(tuple(sorted(x)) for x in inn))


def test_filter_antidirected_examples():
    c4 = gen_named("cycle 4")
    fam = enumerate_even_cycles(c4, 4)
    alternating = _oriented(c4, [(0, 1), (2, 1), (2, 3), (0, 3)])
    cyclic = _oriented(c4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert len(filter_antidirected(fam, alternating)) == 1
    assert len(filter_antidirected(fam, cyclic)) == 0
    c6 = gen_named("cycle 6")
    # one directed 2-subpath 0 -> 1 -> 2, alternating elsewhere
    o = _oriented(c6, [(0, 1), (1, 2), (3, 2), (3, 4), (5, 4), (0, 5)])
    assert not is_antidirected((0, 1, 2, 3, 4, 5), o)
    assert len(filter_antidirected(enumerate_even_cycles(c6, 6), o)) == 0


def test_profile_examples():
    assert cycle_degree_profile(enumerate_even_cycles(gen_named("complete 4"), 4)) == {4: 3}
    heawood = enumerate_even_cycles(gen_named("heawood"), 6)
    assert cycle_degree_profile(heawood) == {6: 12}
    assert (3 / 2) * 2 ** 3 == 12
    assert cycle_degree_profile(CycleFamily(3, ())) == {}


def test_is_bicoloured_examples():
    c = (0, 1, 2, 3)
    assert is_bicoloured(c, Colouring((0, 1, 0, 1), 3))
    assert not is_bicoloured(c, Colouring((0, 1, 0, 2), 3))
    assert is_bicoloured((0, 1, 2, 3, 4, 5), Colouring((0, 1) * 3, 2))
    with pytest.raises(ValueError):
        is_bicoloured(c, Colouring((0, 1, -1, 1), 2))


def test_count_cycles_through_examples():
    assert all(count_cycles_through(gen_named("cycle 6"), v, 6) == 1 for v in range(6))
    assert count_cycles_through(gen_named("complete 4"), 0, 4) == 3
    h = gen_named("heawood")
    assert all(count_cycles_through(h, v, 6) == 12 for v in range(14))


@settings(max_examples=60, deadline=None)
@given(small_graphs(min_n=4, max_n=8), st.sampled_from([4, 6, 8]))
def test_count_through_matches_family(g, length):
    fam = enumerate_even_cycles(g, 8)
    for v in range(g.n):
        expected = sum(1 for c in fam.of_length(length) if v in c)
        assert count_cycles_through(g, v, length) == expected


def test_c4free_cycle_counts_below_bound():
    c4 = gen_named("cycle 4")
    hosts = [g for g in corpus().values() if g.m and contains_subgraph(g, c4) is None]
    hosts.append(gen_named("heawood"))
    for g in hosts:
        d = max_degree(g)
        for ell in (3, 4):
            bound = (d / 2) * (d - 1) ** (2 * ell - 3)
            for v in range(g.n):
                assert count_cycles_through(g, v, 2 * ell) <= bound


def test_one_acyclic_free_profile_below_bound():
    # hosts without K_{2,3} (t = 5): Delta_{2l} <= 2(t-3) Delta^(2l-2)
    k23 = gen_named("complete_bipartite 2 3")
    t = 5
    hosts = [g for g in corpus().values() if g.m and g.n <= 16 and contains_subgraph(g, k23) is None]
    assert len(hosts) >= 5
    for g in hosts:
        d = max_degree(g)
        prof = cycle_degree_profile(enumerate_even_cycles(g, 8))
        for length, count in prof.items():
            assert count <= 2 * (t - 3) * d ** (length - 2)


@pytest.mark.parametrize("seed", range(6))
def test_pipeline_cycle_profile_below_bound(seed):
    # antidirected, heavy-pair-free cycles in a degeneracy orientation
    g = gen_random_ktree(10, 2, seed)
    order, t = degeneracy_order(g)
    o = orient_by_order(g, order)
    d = max_degree(g)
    gamma1 = heavy_in_codegree_constraints(o, (t * d) ** (1 / 3))
    assert gamma1.max_degree() <= (t * d) ** (2 / 3)
    fam = filter_antidirected(filter_gamma_free(enumerate_even_cycles(g, 10), gamma1), o)
    for length, count in cycle_degree_profile(fam).items():
        ell = length // 2
        assert count <= 0.5 * (t * d) ** (ell - 2 / 3)


@settings(max_examples=60, deadline=None)
@given(small_graphs(min_n=4, max_n=8), st.data())
def test_filters_idempotent_and_commute(g, data):
    fam = enumerate_even_cycles(g, 8)
    pairs = list(itertools.combinations(range(g.n), 2))
    chosen = data.draw(st.lists(st.sampled_from(pairs), max_size=6))
    cs = ConstraintSet.from_pairs(g.n, chosen)
    perm = data.draw(st.permutations(range(g.n)))
    o = orient_by_order(g, perm)
    once = filter_gamma_free(fam, cs)
    assert filter_gamma_free(once, cs) == once
    assert filter_antidirected(filter_antidirected(fam, o), o) == filter_antidirected(fam, o)
    assert filter_antidirected(once, o) == filter_gamma_free(filter_antidirected(fam, o), cs)


def test_antidirected_cycles_are_even():
    # an odd cycle can never alternate
    c5 = gen_named("cycle 5")
    for perm in itertools.permutations(range(5)):
        assert not is_antidirected(tuple(range(5)), orient_by_order(c5, perm))


def test_family_serialisation():
    fam = family_from_cycles(4, [(3, 2, 1, 0), (0, 1, 2, 3)])
    assert len(fam) == 1
    assert fam.to_lines() == "0,1,2,3\n"
    assert fam.through(2) == [(0, 1, 2, 3)]
