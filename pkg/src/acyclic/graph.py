"""Immutable simple graphs, edge-list ingestion and elementary queries."""

from __future__ import annotations

import heapq
import logging
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

log = logging.getLogger(__name__)

INFINITY = math.inf


class EdgeListParseError(ValueError):
    """Malformed edge-list document."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the strictly increasing tuple of neighbours of ``v``.
    Build instances with :meth:`from_edges`; the constructor trusts its input.
    """

    adj: tuple[tuple[int, ...], ...]
    _sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_sets", tuple(frozenset(nb) for nb in self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def neighbour_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nb in enumerate(self.adj):
            for v in nb:
                if u < v:
                    yield (u, v)

    def average_degree(self) -> float:
        if self.n == 0:
            raise ValueError("average degree of the empty graph is undefined")
        return 2 * self.m / self.n

    def min_degree(self) -> int:
        return min((len(nb) for nb in self.adj), default=0)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the old ids."""
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u in keep for v in self.adj[u] if v in index and u < v]
        return Graph.from_edges(len(keep), edges), keep

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def is_bipartite(self) -> bool:
        return bipartition(self) is not None

    def to_edge_list(self) -> str:
        lines = [f"n={self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EdgeList:
    n: int
    edges: tuple[tuple[int, int], ...]
    duplicates: int


def parse_edge_list(text: str) -> EdgeList:
    """Parse the whitespace edge-list format.

    One edge ``u v`` per line, ``#`` starts a comment, and an optional first
    line ``n=<count>`` declares trailing isolated vertices.  Repeated edges
    (in either orientation) are collapsed and counted.
    """
    declared_n = None
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    duplicates = 0
    max_id = -1
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if first and line.replace(" ", "").startswith("n="):
            first = False
            try:
                declared_n = int(line.replace(" ", "")[2:])
            except ValueError:
                raise EdgeListParseError(lineno, f"bad header {line!r}") from None
            if declared_n < 0:
                raise EdgeListParseError(lineno, "negative vertex count")
            continue
        first = False
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(lineno, "negative vertex id")
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append(key)
        max_id = max(max_id, u, v)
    n = max_id + 1
    if declared_n is not None:
        if declared_n < n:
            raise EdgeListParseError(1, f"header n={declared_n} but vertex {max_id} used")
        n = declared_n
    return EdgeList(n, tuple(edges), duplicates)


def load_graph(text: str) -> Graph:
    parsed = parse_edge_list(text)
    if parsed.duplicates:
        log.warning("collapsed %d duplicate edge(s)", parsed.duplicates)
    return Graph.from_edges(parsed.n, parsed.edges)


def max_degree(g: Graph) -> int:
    return max((len(nb) for nb in g.adj), default=0)


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Minimum-degree peeling order and the degeneracy it certifies.

    Ties go to the smallest vertex id.  Every vertex has at most ``t``
    neighbours that come later in the returned order.
    """
    deg = [len(nb) for nb in g.adj]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    t = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        t = max(t, d)
        for u in g.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order, t


@dataclass(frozen=True)
class Orientation:
    """Orientation of every edge of ``graph``; ``out[v]`` / ``inn[v]`` sorted."""

    graph: Graph
    out: tuple[tuple[int, ...], ...]
    inn: tuple[tuple[int, ...], ...]
    _out_sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_out_sets", tuple(frozenset(o) for o in self.out))

    def arc(self, u: int, v: int) -> bool:
        """True iff the edge uv is directed u -> v."""
        return v in self._out_sets[u]

    def out_degree(self, v: int) -> int:
        return len(self.out[v])

    def in_degree(self, v: int) -> int:
        return len(self.inn[v])

    def max_out_degree(self) -> int:
        return max((len(o) for o in self.out), default=0)

    def is_acyclic(self) -> bool:
        indeg = [len(i) for i in self.inn]
        queue = deque(v for v, d in enumerate(indeg) if d == 0)
        seen = 0
        while queue:
            v = queue.popleft()
            seen += 1
            for w in self.out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == self.graph.n


def orient_by_order(g: Graph, order: Sequence[int]) -> Orientation:
    """Direct every edge from the earlier to the later vertex of ``order``."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    out = tuple(tuple(u for u in g.adj[v] if pos[u] > pos[v]) for v in range(g.n))
    inn = tuple(tuple(u for u in g.adj[v] if pos[u] < pos[v]) for v in range(g.n))
    return Orientation(g, out, inn)


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, or ``INFINITY`` for forests."""
    best = INFINITY
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            # any cycle closed from depth d has length >= 2d
            if 2 * dist[x] >= best:
                break
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def bfs_layers(g: Graph, v0: int) -> list[set[int]]:
    if not 0 <= v0 < g.n:
        raise ValueError(f"vertex {v0} out of range")
    layers = [{v0}]
    seen = {v0}
    while True:
        nxt = {u for x in layers[-1] for u in g.adj[x] if u not in seen}
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)


def codegree(g: Graph, u: int, v: int) -> int:
    """Number of common neighbours, by merging the sorted neighbour lists."""
    if u == v:
        raise ValueError("codegree needs two distinct vertices")
    a, b = g.adj[u], g.adj[v]
    i = j = count = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            count += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return count


def bipartition(g: Graph) -> list[int] | None:
    """A proper 2-colouring as a side list, or None when an odd cycle exists."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return side


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))
