"""Constraint sets: vertex pairs that must receive distinct colours."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .colouring import Colouring
from .graph import Graph, Orientation, degeneracy_order, max_degree


@dataclass(frozen=True)
class ConstraintSet:
    """Set of unordered pairs over vertices ``0..n-1``, stored as ``(low, high)``."""

    n: int
    pairs: frozenset[tuple[int, int]]
    _nbrs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.pairs:
            if not u < v:
                raise ValueError(f"pair {(u, v)} is not canonical")
            if v >= self.n:
                raise ValueError(f"pair {(u, v)} outside vertex range")
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "_nbrs", tuple(tuple(sorted(x)) for x in nbrs))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "ConstraintSet":
        canon = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"pair ({u}, {v}) is a single vertex")
            canon.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(canon))

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        u, v = pair
        return ((u, v) if u < v else (v, u)) in self.pairs

    def __iter__(self):
        return iter(sorted(self.pairs))

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def max_degree(self) -> int:
        return max((len(x) for x in self._nbrs), default=0)

    def as_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.pairs)

    def to_edge_list(self) -> str:
        return self.as_graph().to_edge_list()


def edge_constraints(g: Graph) -> ConstraintSet:
    return ConstraintSet(g.n, frozenset(g.edges()))


def directed_2path_constraints(o: Orientation) -> ConstraintSet:
    """Pairs joined by a directed path of length 1 or 2."""
    pairs = set()
    for u in range(o.graph.n):
        for w in o.out[u]:
            pairs.add((u, w))
            for v in o.out[w]:
                pairs.add((u, v))
    return ConstraintSet.from_pairs(o.graph.n, pairs)


def heavy_in_codegree_constraints(o: Orientation, threshold: float) -> ConstraintSet:
    """Pairs with at least ``threshold`` common in-neighbours."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    common: Counter = Counter()
    for w in range(o.graph.n):
        outs = o.out[w]
        for i, u in enumerate(outs):
            for v in outs[i + 1:]:
                common[(u, v)] += 1
    return ConstraintSet(o.graph.n, frozenset(p for p, c in common.items() if c >= threshold))


def common_neighbour_counts(g: Graph) -> Counter:
    """Codegree of every pair with at least one common neighbour."""
    common: Counter = Counter()
    for w in range(g.n):
        nb = g.adj[w]
        for i, u in enumerate(nb):
            for v in nb[i + 1:]:
                common[(u, v)] += 1
    return common


def gamma_special_pairs(g: Graph, gamma: float) -> ConstraintSet:
    """Pairs whose codegree is at least Delta(g)**gamma (real comparison)."""
    if not 0 < gamma < 1:
        raise ValueError("gamma must lie in (0, 1)")
    delta = max_degree(g)
    if delta < 2:
        raise ValueError("gamma-special pairs need maximum degree >= 2")
    threshold = delta ** gamma
    return ConstraintSet(g.n, frozenset(p for p, c in common_neighbour_counts(g).items() if c >= threshold))


def union(a: ConstraintSet, b: ConstraintSet) -> ConstraintSet:
    if a.n != b.n:
        raise ValueError(f"vertex counts differ: {a.n} vs {b.n}")
    return ConstraintSet(a.n, a.pairs | b.pairs)


def greedy_proper_colouring(cs: ConstraintSet) -> Colouring:
    """Smallest-available colouring along the reverse peeling order.

    Uses at most degeneracy(constraint graph) + 1 colours.
    """
    order, _ = degeneracy_order(cs.as_graph())
    colour = [-1] * cs.n
    for v in reversed(order):
        taken = {colour[u] for u in cs.neighbours(v)}
        c = 0
        while c in taken:
            c += 1
        colour[v] = c
    return Colouring.of(colour, max(colour, default=-1) + 1)
