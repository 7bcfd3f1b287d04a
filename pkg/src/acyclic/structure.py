"""Structural extraction: dense bipartite halves, min-degree cores, tree embeddings."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, components, is_forest


@dataclass(frozen=True)
class BipartiteHalf:
    left: tuple[int, ...]
    right: tuple[int, ...]
    graph: Graph  # cut edges only, on the original vertex set


@dataclass(frozen=True)
class InducedSubgraph:
    vertices: tuple[int, ...]  # original ids, sorted
    graph: Graph  # relabelled to 0..len(vertices)-1

    @property
    def min_degree(self) -> int:
        return self.graph.min_degree()


def bipartite_half(g: Graph) -> BipartiteHalf:
    """Local-search max cut keeping at least half of the edges.

    At a local optimum every vertex has at least half of its neighbours on
    the other side, so the cut subgraph has average degree >= d/2.
    """
    if g.m == 0:
        raise ValueError("bipartite_half needs at least one edge")
    side = [0] * g.n
    for v in range(g.n):
        placed = [u for u in g.adj[v] if u < v]
        same0 = sum(1 for u in placed if side[u] == 0)
        side[v] = 1 if same0 > len(placed) - same0 else 0
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            same = sum(1 for u in g.adj[v] if side[u] == side[v])
            if 2 * same > len(g.adj[v]):
                side[v] = 1 - side[v]
                improved = True
                break
    cut = [(u, v) for u, v in g.edges() if side[u] != side[v]]
    left = tuple(v for v in range(g.n) if side[v] == 0)
    right = tuple(v for v in range(g.n) if side[v] == 1)
    return BipartiteHalf(left, right, Graph.from_edges(g.n, cut))


def min_degree_core(g: Graph) -> InducedSubgraph:
    """Peel vertices of degree <= floor(d/2) and return one surviving component.

    ``d`` is the average degree of ``g``.  Peeling such a vertex never lowers
    the average degree, so the remainder is non-empty with minimum degree at
    least floor(d/2)+1; any component of it keeps that minimum degree.
    """
    if g.m == 0:
        raise ValueError("min_degree_core needs at least one edge")
    # floor(d/2) with d = 2m/n is exactly m // n
    threshold = g.m // g.n
    deg = [len(nb) for nb in g.adj]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] <= threshold]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for u in g.adj[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] == threshold:
                    stack.append(u)
    core, old = g.induced(v for v in range(g.n) if alive[v])
    first = components(core)[0]
    comp, ids = core.induced(first)
    return InducedSubgraph(tuple(old[i] for i in ids), comp)


def _is_tree(t: Graph) -> bool:
    return t.n >= 1 and t.m == t.n - 1 and is_forest(t)


def embed_rooted_tree(g: Graph, t: Graph, root: int, v0: int) -> dict[int, int] | None:
    """Greedy copy of the rooted tree ``t`` in ``g`` with ``root`` sent to ``v0``.

    Tree vertices are placed in DFS order (children by increasing id), each
    one on the smallest-id unused neighbour of its parent's image.  Succeeds
    whenever ``g`` has minimum degree >= |V(t)|-1; returns None on a dead end.
    """
    if not _is_tree(t):
        raise ValueError("pattern is not a tree")
    if not 0 <= root < t.n:
        raise ValueError(f"root {root} not a vertex of the tree")
    if not 0 <= v0 < g.n:
        raise ValueError(f"vertex {v0} out of range")
    image = {root: v0}
    used = {v0}
    stack = [(root, -1)]
    while stack:
        x, parent = stack.pop()
        if parent >= 0:
            target = next((w for w in g.adj[image[parent]] if w not in used), None)
            if target is None:
                return None
            image[x] = target
            used.add(target)
        for child in reversed(t.adj[x]):
            if child != parent:
                stack.append((child, x))
    return image


def branching_edge_count(h: Graph, x_part, y_part, d: int) -> int:
    """Number of edges xy (x in X, y in Y) whose Y-endpoint has degree >= d."""
    xs, ys = set(x_part), set(y_part)
    if xs & ys or xs | ys != set(range(h.n)):
        raise ValueError("parts do not partition the vertex set")
    if any((u in xs) == (v in xs) for u, v in h.edges()):
        raise ValueError("an edge lies inside one part")
    if len(xs) > len(ys):
        raise ValueError("X must be the smaller part")
    if d < 1:
        raise ValueError("d must be >= 1")
    return sum(h.degree(y) for y in ys if h.degree(y) >= d)


def max_average_degree(g: Graph, limit: int = 16) -> float:
    """Maximum of 2|E(S)|/|S| over non-empty vertex subsets S (exhaustive)."""
    if g.n > limit:
        raise ValueError(f"exhaustive maximum average degree limited to {limit} vertices")
    best = 0.0
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            s = set(subset)
            e = sum(1 for v in subset for u in g.adj[v] if u in s and u > v)
            best = max(best, 2 * e / size)
    return best
