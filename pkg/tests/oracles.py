"""Shared corpus and independent brute-force oracles for the tests."""

from __future__ import annotations

import itertools

import networkx as nx
from hypothesis import strategies as st

from acyclic.generators import gen_named, gen_subdivision_complete
from acyclic.graph import Graph

CORPUS_NAMES = [
    "path 4",
    "cycle 4",
    "cycle 5",
    "cycle 6",
    "complete 4",
    "complete_bipartite 2 3",
    "complete_bipartite 3 3",
    "petersen",
    "heawood",
    "hypercube 3",
    "star 4",
    "star 5",
]


def tree_graphs():
    """A few small trees beyond paths and stars."""
    return {
        "spider": Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
        "caterpillar": Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]),
    }


def corpus() -> dict[str, Graph]:
    out = {name: gen_named(name) for name in CORPUS_NAMES}
    out.update(tree_graphs())
    out["K5 subdivided"] = gen_subdivision_complete(5)
    return out


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(mapping), [(mapping[u], mapping[v]) for u, v in h.edges()])


def brute_is_acyclic(g: Graph, colours) -> bool:
    """Proper and every two colour classes induce a forest (networkx oracle)."""
    h = to_nx(g)
    if any(colours[u] == colours[v] for u, v in g.edges()):
        return False
    used = sorted(set(colours))
    for a, b in itertools.combinations(used, 2):
        sub = h.subgraph([v for v in range(g.n) if colours[v] in (a, b)])
        if not nx.is_forest(sub) and sub.number_of_nodes() > 0:
            return False
    return True


def fast_is_acyclic(edges, colours) -> bool:
    """Union-find version of the same test, for exhaustive loops."""
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for u, v in edges:
        a, b = colours[u], colours[v]
        if a == b:
            return False
        key = (a, b) if a < b else (b, a)
        ru, rv = find((key, u)), find((key, v))
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def brute_count(g: Graph, k: int) -> int:
    edges = list(g.edges())
    return sum(1 for c in itertools.product(range(k), repeat=g.n) if fast_is_acyclic(edges, c))


def brute_chi_a(g: Graph) -> int:
    edges = list(g.edges())
    for k in range(1, g.n + 1):
        if any(fast_is_acyclic(edges, c) for c in itertools.product(range(k), repeat=g.n)):
            return k
    return 0


def brute_even_cycles(g: Graph) -> set[tuple[int, ...]]:
    """Every even cycle via networkx, canonicalised."""
    from acyclic.cycles import canonical_cycle

    out = set()
    for cyc in nx.simple_cycles(to_nx(g)):
        if len(cyc) >= 4 and len(cyc) % 2 == 0:
            out.add(canonical_cycle(cyc))
    return out


@st.composite
def small_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


def all_forests(max_n):
    """Every forest on 1..max_n vertices up to isomorphism (multisets of trees)."""
    trees = {1: [nx.empty_graph(1)]}
    for size in range(2, max_n + 1):
        trees[size] = list(nx.nonisomorphic_trees(size))
    catalogue = [(size, i) for size in trees for i in range(len(trees[size]))]
    out = []

    def build(start, remaining, chosen):
        if chosen:
            out.append(nx.disjoint_union_all([trees[s][i] for s, i in chosen]))
        for j in range(start, len(catalogue)):
            size, _ = catalogue[j]
            if size <= remaining:
                build(j, remaining - size, chosen + [catalogue[j]])

    build(0, max_n, [])
    return [from_nx(f) for f in out]


def oracle_subdivided(f: Graph) -> bool:
    """Forest with every branch-vertex pair at even distance (networkx distances)."""
    h = to_nx(f)
    if not nx.is_forest(h):
        return False
    branch = [v for v in h if h.degree(v) >= 3]
    for u, v in itertools.combinations(branch, 2):
        if nx.has_path(h, u, v) and nx.shortest_path_length(h, u, v) % 2:
            return False
    return True
