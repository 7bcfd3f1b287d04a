"""Forbidden-pattern analysis: containment, feedback vertex sets, family dispatch."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import bounds as _bounds
from .graph import Graph, bipartition, components, is_forest

MAX_PATTERN_VERTICES = 12
MAX_FEEDBACK_VERTICES = 16


class PatternGraph:
    """A pattern F with lazily computed structural facts."""

    def __init__(self, graph: Graph):
        self.graph = graph

    @classmethod
    def coerce(cls, f) -> "PatternGraph":
        return f if isinstance(f, PatternGraph) else cls(f)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @cached_property
    def is_forest(self) -> bool:
        return is_forest(self.graph)

    @cached_property
    def is_bipartite(self) -> bool:
        return bipartition(self.graph) is not None

    @cached_property
    def components(self) -> list[list[int]]:
        return components(self.graph)

    @cached_property
    def feedback_vertex_set(self) -> tuple[int, ...]:
        return minimum_feedback_vertex_set(self.graph)

    @cached_property
    def feedback_vertex_number(self) -> int:
        return len(self.feedback_vertex_set)

    @cached_property
    def subdivision_verdict(self) -> "SubdivisionVerdict":
        return is_subdivided_tree_subgraph(self)

    @property
    def is_subdivided_tree_subgraph(self) -> bool:
        return self.subdivision_verdict.ok


# -- containment ------------------------------------------------------------------


def _pattern_order(f: Graph) -> list[int]:
    """Highest degree first, then always the vertex with the most placed neighbours."""
    order: list[int] = []
    placed = [False] * f.n
    links = [0] * f.n
    for _ in range(f.n):
        v = max((u for u in range(f.n) if not placed[u]), key=lambda u: (links[u], f.degree(u), -u))
        placed[v] = True
        order.append(v)
        for u in f.adj[v]:
            links[u] += 1
    return order


def contains_subgraph(g: Graph, f) -> dict[int, int] | None:
    """An injective edge-preserving map V(f) -> V(g), or None (not necessarily induced)."""
    f = PatternGraph.coerce(f).graph
    if f.n > MAX_PATTERN_VERTICES:
        raise ValueError(f"pattern has {f.n} vertices; containment search limited to {MAX_PATTERN_VERTICES}")
    if f.n > g.n or f.m > g.m:
        return None
    order = _pattern_order(f)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in f.adj[v] if pos[u] < pos[v]] for v in order]
    image: dict[int, int] = {}
    used = set()

    def place(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        need = f.degree(x)
        back = earlier[i]
        pool = g.adj[image[back[0]]] if back else range(g.n)
        for w in pool:
            if w in used or g.degree(w) < need:
                continue
            if any(not g.has_edge(image[p], w) for p in back[1:]):
                continue
            image[x] = w
            used.add(w)
            if place(i + 1):
                return True
            del image[x]
            used.discard(w)
        return False

    return dict(sorted(image.items())) if place(0) else None


# -- feedback vertex sets ------------------------------------------------------------


def minimum_feedback_vertex_set(f: Graph) -> tuple[int, ...]:
    """Smallest X with f - X a forest, enumerating subsets by size (lexicographic within a size)."""
    if f.n > MAX_FEEDBACK_VERTICES:
        raise ValueError(f"feedback search limited to {MAX_FEEDBACK_VERTICES} vertices")
    for size in range(f.n + 1):
        for xs in combinations(range(f.n), size):
            rest = set(range(f.n)) - set(xs)
            sub, _ = f.induced(rest)
            if is_forest(sub):
                return xs
    return tuple(range(f.n))


def feedback_vertex_number(f) -> int:
    return PatternGraph.coerce(f).feedback_vertex_number


def is_k_acyclic(f, k: int) -> bool:
    return feedback_vertex_number(f) <= k


# -- 1-subdivided trees -----------------------------------------------------------------


@dataclass
class SubdivisionVerdict:
    ok: bool
    tree: Graph | None = None  # T with f inside T's 1-subdivision
    embedding: dict[int, int] | None = None  # f-vertex -> vertex of subdivide(T)
    cycle: tuple[int, ...] | None = None
    odd_path: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        return {
            "subdivided_tree_subgraph": self.ok,
            "tree_edges": [list(e) for e in self.tree.edges()] if self.tree else None,
            "tree_vertices": self.tree.n if self.tree else None,
            "embedding": {str(k): v for k, v in self.embedding.items()} if self.embedding else None,
            "cycle": list(self.cycle) if self.cycle else None,
            "odd_path": list(self.odd_path) if self.odd_path else None,
        }


def _find_cycle(g: Graph) -> tuple[int, ...] | None:
    parent = [-2] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if parent[s] != -2:
            continue
        parent[s] = -1
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y == parent[x]:
                    continue
                if parent[y] == -2:
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    stack.append(y)
                else:
                    # non-tree edge: walk both ends up to their meeting point
                    a, b = x, y
                    left, right = [a], [b]
                    while a != b:
                        if depth[a] >= depth[b]:
                            a = parent[a]
                            left.append(a)
                        else:
                            b = parent[b]
                            right.append(b)
                    return tuple(left[:-1] + right[::-1])
    return None


def _tree_path(g: Graph, s: int, t: int) -> tuple[int, ...]:
    parent = {s: -1}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def is_subdivided_tree_subgraph(f) -> SubdivisionVerdict:
    """Is f a subgraph of the 1-subdivision of some tree?

    True exactly for forests in which every path joining two vertices of
    degree >= 3 has even length.  On success a witness tree and an explicit
    embedding into its subdivision are built and checked; otherwise a cycle
    or a shortest odd path between two branch vertices is returned.
    """
    from .generators import gen_one_subdivision

    pf = PatternGraph.coerce(f)
    g = pf.graph
    if not pf.is_forest:
        return SubdivisionVerdict(False, cycle=_find_cycle(g))
    side = bipartition(g)
    branch = [v for v in range(g.n) if g.degree(v) >= 3]
    # an odd path between two branch vertices exists iff two of them in one tree have opposite sides
    best = None
    for comp in pf.components:
        cb = [v for v in comp if g.degree(v) >= 3]
        for u, v in combinations(cb, 2):
            if side[u] != side[v]:
                path = _tree_path(g, u, v)
                if best is None or len(path) < len(best):
                    best = path
    if best is not None:
        return SubdivisionVerdict(False, odd_path=best)

    # choose the "original" side of each tree: the side holding its branch vertices
    original = [False] * g.n
    for comp in pf.components:
        cb = [v for v in comp if g.degree(v) >= 3]
        anchor = cb[0] if cb else comp[0]
        for v in comp:
            original[v] = side[v] == side[anchor]
    t_index = {}
    for v in range(g.n):
        if original[v]:
            t_index[v] = len(t_index)
    t_edges: list[tuple[int, int]] = []
    midpoint_of: dict[int, int] = {}  # f-midpoint -> index into t_edges
    n_t = len(t_index)
    for m in range(g.n):
        if original[m]:
            continue
        nb = g.adj[m]  # at most two neighbours, all original
        if len(nb) == 2:
            a, b = t_index[nb[0]], t_index[nb[1]]
        else:
            a, b = t_index[nb[0]], n_t  # pendant tree vertex, unused by f
            n_t += 1
        midpoint_of[m] = len(t_edges)
        t_edges.append((a, b))
    # join the per-component trees into one tree
    roots = []
    for comp in pf.components:
        roots.append(next(t_index[v] for v in comp if original[v]))
    for r0, r1 in zip(roots, roots[1:]):
        t_edges.append((r0, r1))
    tree = Graph.from_edges(max(n_t, 1), t_edges)
    sub = gen_one_subdivision(tree)
    # the subdivision numbers midpoints after the tree vertices, in tree.edges() order
    mid_id = {e: tree.n + i for i, e in enumerate(tree.edges())}
    embedding = {}
    for v in range(g.n):
        if original[v]:
            embedding[v] = t_index[v]
        else:
            a, b = t_edges[midpoint_of[v]]
            embedding[v] = mid_id[(min(a, b), max(a, b))]
    if not _is_embedding(g, sub, embedding):
        raise AssertionError("witness embedding failed verification")
    if g.n <= MAX_PATTERN_VERTICES and contains_subgraph(sub, g) is None:
        raise AssertionError("containment search rejects the witness tree")
    return SubdivisionVerdict(True, tree=tree, embedding=embedding)


def _is_embedding(f: Graph, g: Graph, phi: dict[int, int]) -> bool:
    if len(set(phi.values())) != f.n:
        return False
    return all(g.has_edge(phi[u], phi[v]) for u, v in f.edges())


# -- classification ------------------------------------------------------------------------

# ascending asymptotic growth of the dispatched bound
_GROWTH = {
    "subdivided_tree": 0,
    "forest": 1,
    "c4free": 2,
    "c2t": 2,
    "one_acyclic": 3,
    "two_acyclic": 4,
    "bipartite_other": 5,
    "dense": 6,
}

DENSE_REGIME = "Omega(d^(4/3) / (ln d)^(1/3))"


@dataclass
class ComponentReport:
    vertices: tuple[int, ...]
    family: str
    t: int
    edges: int
    operation: str | None = None
    bound: _bounds.BoundReport | None = None
    note: str = ""
    skipped: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "family": self.family,
            "t": self.t,
            "edges": self.edges,
            "operation": self.operation,
            "K": self.bound.K if self.bound else None,
            "bound": self.bound.to_json() if self.bound else None,
            "note": self.note,
            "skipped": self.skipped,
        }


@dataclass
class Classification:
    family: str
    t: int
    components: list[ComponentReport]
    delta: int | None = None
    K: int | None = None
    slack: int = 0
    lower_bounds: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "t": self.t,
            "delta": self.delta,
            "K": self.K,
            "slack": self.slack,
            "K_with_slack": self.K + self.slack if self.K is not None else None,
            "lower_bounds": self.lower_bounds,
            "components": [c.to_json() for c in self.components],
        }


def _cycle_length(g: Graph) -> int | None:
    if g.n >= 3 and g.m == g.n and all(g.degree(v) == 2 for v in range(g.n)):
        return g.n
    return None


def _try(rep: ComponentReport, family: str, op: str, fn, *args) -> bool:
    """Record family/op; with a delta, keep it only if the bound accepts the parameters."""
    if args and args[0] is None:
        rep.family, rep.operation = family, op
        return True
    try:
        rep.bound = fn(*args)
    except ValueError as exc:
        rep.skipped.append(f"{family}: {exc}")
        return False
    rep.family, rep.operation = family, op
    return True


def _classify_component(comp: Graph, vertices, delta: int | None) -> ComponentReport:
    pf = PatternGraph(comp)
    t = comp.n
    rep = ComponentReport(tuple(vertices), "", t, comp.m)
    if pf.is_subdivided_tree_subgraph:
        rep.family = "subdivided_tree"
        rep.note = "constant bound (value not computed)"
        if t >= 2 and delta is not None:
            try:
                rep.bound = _bounds.bound_forest(delta, t)
                rep.operation = "bound_forest"
                rep.note += "; explicit forest bound attached"
            except ValueError as exc:
                rep.skipped.append(f"forest: {exc}")
        return rep
    if pf.is_forest:
        if _try(rep, "forest", "bound_forest", _bounds.bound_forest, delta, t):
            return rep
    length = _cycle_length(comp)
    if length is not None and length % 2 == 0:
        if length == 4:
            if _try(rep, "c4free", "bound_c4free", _bounds.bound_c4free, delta):
                rep.t = 2
                return rep
        elif _try(rep, "c2t", "bound_c2t", _bounds.bound_c2t, delta, length // 2):
            rep.t = length // 2
            return rep
    if pf.is_bipartite:
        fvn = pf.feedback_vertex_number if t <= MAX_FEEDBACK_VERTICES else None
        if fvn is not None and fvn <= 1 and t >= 4:
            if _try(rep, "one_acyclic", "bound_1acyclic", _bounds.bound_1acyclic, delta, t):
                return rep
        if fvn is not None and fvn <= 2 and t >= 2:
            if _try(rep, "two_acyclic", "bound_2acyclic", _bounds.bound_2acyclic, delta, t):
                return rep
        if comp.m <= 4 * comp.n:
            rep.family = "bipartite_other"
            rep.t = t
            rep.note = "bipartite sparse pattern outside the tabulated families; no bound"
            return rep
    rep.family = "dense"
    rep.t = t
    rep.note = f"non-bipartite or |E| > 4|V|: lower-bound regime {DENSE_REGIME}; no upper bound"
    return rep


def classify_obstruction(f, delta: int | None = None) -> Classification:
    """Strongest applicable bound family for each component and for the whole pattern.

    Families are tried in order of increasing growth of their bound; with a
    maximum degree ``delta`` a family is only kept when its bound accepts
    the parameters.  Excluding F is at most as hard as excluding its worst
    component, up to an additive |V(F)| for several components.
    """
    pf = PatternGraph.coerce(f)
    g = pf.graph
    if g.n == 0:
        raise ValueError("empty pattern")
    reports = []
    for comp_vertices in pf.components:
        sub, old = g.induced(comp_vertices)
        reports.append(_classify_component(sub, old, delta))
    worst = max(
        reports,
        key=lambda r: (_GROWTH[r.family], r.bound.K if r.bound else -1, r.t, r.edges),
    )
    slack = g.n if len(reports) > 1 else 0
    lower = {}
    if delta is not None and delta >= 1:
        if not pf.subdivision_verdict.ok:
            lower["subdivision"] = _bounds.lower_bound_subdivision(delta)
        if worst.family == "dense":
            lower["dense_regime"] = DENSE_REGIME
    return Classification(
        family=worst.family,
        t=worst.t,
        components=reports,
        delta=delta,
        K=worst.bound.K if worst.bound else None,
        slack=slack,
        lower_bounds=lower,
    )
