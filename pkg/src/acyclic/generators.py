"""Graph generators: subdivisions, random models, incidence graphs, named classics."""

from __future__ import annotations

import random
from itertools import combinations, product

from .graph import Graph


class GenerationFailure(RuntimeError):
    def __init__(self, tries: int, reason: str):
        super().__init__(f"no valid graph after {tries} tries ({reason})")
        self.tries = tries
        self.reason = reason


def gen_one_subdivision(g: Graph) -> Graph:
    """Replace every edge by a path of length 2.

    Original vertices keep their ids; the midpoint of the i-th edge of
    ``g.edges()`` gets id ``n + i``.
    """
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        mid = g.n + i
        edges.append((u, mid))
        edges.append((mid, v))
    return Graph.from_edges(g.n + g.m, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def gen_subdivision_complete(nv: int) -> Graph:
    if nv < 2:
        raise ValueError("need at least 2 vertices")
    return gen_one_subdivision(complete_graph(nv))


def gen_bipartite_random(nside: int, p: float, seed=None) -> Graph:
    """G(n, n, p): parts 0..n-1 and n..2n-1, each cross pair kept with probability p."""
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if nside < 0:
        raise ValueError("nside must be non-negative")
    rng = random.Random(seed)
    edges = [(i, nside + j) for i in range(nside) for j in range(nside) if rng.random() < p]
    return Graph.from_edges(2 * nside, edges)


def gen_random_regular_girth(nv: int, d: int, g: int = 3, seed=None, max_tries: int = 10000) -> Graph:
    """Uniform simple d-regular graph of girth >= g by configuration-model rejection."""
    if nv * d % 2:
        raise ValueError("nv * d must be even")
    if g < 3:
        raise ValueError("girth bound must be >= 3")
    if d >= nv:
        raise ValueError("degree must be below the vertex count")
    rng = random.Random(seed)
    points = [v for v in range(nv) for _ in range(d)]
    reason = "no attempt"
    for _ in range(max_tries):
        rng.shuffle(points)
        adj = [set() for _ in range(nv)]
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v or v in adj[u]:
                ok = False
                reason = "loop or multi-edge"
                break
            # a short cycle now survives into the finished pairing, so reject early
            if g > 3 and _within(adj, u, v, g - 2):
                ok = False
                reason = "girth too small"
                break
            adj[u].add(v)
            adj[v].add(u)
        if ok:
            return Graph.from_edges(nv, [(u, v) for u in range(nv) for v in adj[u] if u < v])
    raise GenerationFailure(max_tries, reason)


def _within(adj, u: int, v: int, radius: int) -> bool:
    """Is v at distance <= radius from u?"""
    seen = {u}
    frontier = [u]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return False


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


def gen_projective_incidence(q: int) -> Graph:
    """Point-line incidence graph of PG(2, q) over the prime field: points first, then lines."""
    if not _is_prime(q):
        raise ValueError(f"q={q} is not prime (prime powers unsupported)")
    reps = []
    for x in product(range(q), repeat=3):
        if any(x):
            # normalised representative: first non-zero coordinate equals 1
            lead = next(c for c in x if c)
            if lead == 1:
                reps.append(x)
    n = len(reps)
    edges = []
    for i, p in enumerate(reps):
        for j, line in enumerate(reps):
            if sum(a * b for a, b in zip(p, line)) % q == 0:
                edges.append((i, n + j))
    return Graph.from_edges(2 * n, edges)


def _lcf(n: int, shifts: list[int]) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges.append((i, (i + shifts[i % len(shifts)]) % n))
    return Graph.from_edges(n, {(min(u, v), max(u, v)) for u, v in edges})


def gen_random_ktree(n: int, k: int, seed=None) -> Graph:
    """Random k-tree: a (k+1)-clique, then each new vertex joins a random existing k-clique."""
    if k < 1 or n < k + 1:
        raise ValueError("need k >= 1 and n >= k + 1")
    rng = random.Random(seed)
    edges = list(combinations(range(k + 1), 2))
    cliques = [c for c in combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = rng.choice(cliques)
        edges.extend((u, v) for u in base)
        for drop in range(k):
            cliques.append(tuple(sorted(base[:drop] + base[drop + 1:] + (v,))))
    return Graph.from_edges(n, edges)


NAMED = ("path", "cycle", "complete", "complete_bipartite", "hypercube", "petersen", "heawood", "star")


def gen_named(name: str) -> Graph:
    """Named classic: "path n", "cycle n", "complete n", "complete_bipartite a b",
    "hypercube k", "star k", "petersen", "heawood"."""
    parts = name.replace("-", "_").split()
    if not parts:
        raise ValueError("empty graph name")
    kind, args = parts[0].lower(), parts[1:]
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ValueError(f"bad parameters in {name!r}") from None
    arity = {"path": 1, "cycle": 1, "complete": 1, "complete_bipartite": 2, "hypercube": 1,
             "star": 1, "petersen": 0, "heawood": 0}
    if kind not in arity:
        raise ValueError(f"unknown graph name {kind!r}; known: {', '.join(NAMED)}")
    if len(nums) != arity[kind]:
        raise ValueError(f"{kind} takes {arity[kind]} integer parameter(s)")
    if any(x < 0 for x in nums):
        raise ValueError("parameters must be non-negative")
    if kind == "path":
        (n,) = nums
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        (n,) = nums
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        return complete_graph(nums[0])
    if kind == "complete_bipartite":
        a, b = nums
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "star":
        (k,) = nums
        return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
    if kind == "hypercube":
        (k,) = nums
        return Graph.from_edges(1 << k, [(v, v ^ (1 << b)) for v in range(1 << k) for b in range(k) if v < v ^ (1 << b)])
    if kind == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, outer + spokes + inner)
    return _lcf(14, [5, -5])
