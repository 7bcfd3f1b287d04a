"""Exhaustive search at desk scale: acyclic chromatic number and colouring counts."""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

from .constraints import ConstraintSet
from .cycles import CycleFamily
from .graph import Graph, degeneracy_order

MAX_SEARCH_VERTICES = 20
COUNT_BUDGET = 10**8


@dataclass
class ExactResult:
    value: int | None  # None when the answer exceeds k_max
    nodes_expanded: int
    runtime_ms: float
    k_max: int | None = None
    colouring: tuple[int, ...] | None = None  # optimal assignment found by the search

    @property
    def exceeded(self) -> bool:
        return self.value is None

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "exceeds_k_max": self.value is None,
            "k_max": self.k_max,
            "nodes_expanded": self.nodes_expanded,
            "runtime_ms": round(self.runtime_ms, 3),
            "colouring": list(self.colouring) if self.colouring is not None else None,
        }


def search_order(g: Graph) -> list[int]:
    """Reverse peeling order, rearranged so each vertex has many earlier neighbours.

    Starts from the last-peeled vertex and repeatedly takes the vertex with the
    most already-placed neighbours (ties by reverse peeling position).
    """
    if g.n == 0:
        return []
    order, _ = degeneracy_order(g)
    rank = {v: i for i, v in enumerate(reversed(order))}
    placed = [False] * g.n
    weight = [0] * g.n
    out = []
    for _ in range(g.n):
        v = min((u for u in range(g.n) if not placed[u]), key=lambda u: (-weight[u], rank[u]))
        placed[v] = True
        out.append(v)
        for u in g.adj[v]:
            weight[u] += 1
    return out


def _closes_bicoloured_cycle(g: Graph, col, v: int) -> bool:
    """Would the colour just given to v create a cycle through v in two colour classes?

    For each colour b seen on v's neighbours, search the coloured a/b subgraph
    minus v from v's b-neighbours; two different starts meeting means a cycle.
    """
    a = col[v]
    seen_b = set()
    for w in g.adj[v]:
        b = col[w]
        if b < 0 or b in seen_b:
            continue
        seen_b.add(b)
        starts = [u for u in g.adj[v] if col[u] == b]
        if len(starts) < 2:
            continue
        label = {u: i for i, u in enumerate(starts)}
        queue = deque(starts)
        while queue:
            x = queue.popleft()
            want = a if col[x] == b else b
            for y in g.adj[x]:
                if y == v or col[y] != want:
                    continue
                if y not in label:
                    label[y] = label[x]
                    queue.append(y)
                elif label[y] != label[x]:
                    return True
    return False


def _colour_search(g: Graph, k: int, acyclic: bool, counter: list[int]) -> tuple[int, ...] | None:
    order = search_order(g)
    col = [-1] * g.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        forbidden = {col[u] for u in g.adj[v]}
        # colours 0..used-1 are open, plus the first unused one (symmetry breaking)
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            counter[0] += 1
            col[v] = c
            if not (acyclic and _closes_bicoloured_cycle(g, col, v)):
                if place(i + 1, max(used, c + 1)):
                    return True
            col[v] = -1
        return False

    return tuple(col) if place(0, 0) else None


def _min_colours(g: Graph, k_max: int, acyclic: bool) -> ExactResult:
    if g.n > MAX_SEARCH_VERTICES:
        raise ValueError(f"exact search limited to {MAX_SEARCH_VERTICES} vertices, got {g.n}")
    start = time.perf_counter()
    counter = [0]
    value = None
    witness = None
    if g.n == 0:
        value, witness = 0, ()
    else:
        for k in range(1, k_max + 1):
            witness = _colour_search(g, k, acyclic, counter)
            if witness is not None:
                value = k
                break
    return ExactResult(value, counter[0], (time.perf_counter() - start) * 1000, k_max, witness)


def chi_a_exact(g: Graph, k_max: int | None = None) -> ExactResult:
    """Acyclic chromatic number by backtracking with incremental cycle pruning."""
    return _min_colours(g, g.n if k_max is None else k_max, acyclic=True)


def chi_exact(g: Graph, k_max: int | None = None) -> ExactResult:
    """Ordinary chromatic number by the same search, without the cycle pruning."""
    return _min_colours(g, g.n if k_max is None else k_max, acyclic=False)


def count_acyclic_colourings(g: Graph, cs: ConstraintSet, fam: CycleFamily | None, k: int) -> ExactResult:
    """Number of labelled k-colourings that are ``cs``-proper with no bicoloured cycle of ``fam``.

    Both conditions are blind to the names of the colours, so the search runs
    over colourings up to renaming (colours introduced in increasing order)
    and weights each one by the number of labelled colourings it stands for.
    Constraint pairs and cycles are checked once their last vertex (in id
    order) is coloured.  The k^n budget guards the size of the labelled space.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if cs.n != g.n or (fam is not None and fam.n != g.n):
        raise ValueError("graph, constraints and cycle family disagree on the vertex count")
    if k ** g.n > COUNT_BUDGET:
        raise ValueError(f"k^n = {k}^{g.n} exceeds the enumeration budget {COUNT_BUDGET}")
    start = time.perf_counter()
    n = g.n
    earlier = [[u for u in cs.neighbours(v) if u < v] for v in range(n)]
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for cyc in fam or ():
        closing[max(cyc)].append(cyc)
    col = [-1] * n
    nodes = 0

    def bicoloured(cyc) -> bool:
        L = len(cyc)
        return all(col[cyc[i]] == col[cyc[(i + 2) % L]] for i in range(L))

    def extend(v: int, used: int) -> int:
        nonlocal nodes
        if v == n:
            return 1
        total = 0
        for c in range(min(used + 1, k)):
            nodes += 1
            if any(col[u] == c for u in earlier[v]):
                continue
            col[v] = c
            if not any(bicoloured(cyc) for cyc in closing[v]):
                # a fresh colour can be any of the k - used unused names
                weight = k - used if c == used else 1
                total += weight * extend(v + 1, max(used, c + 1))
            col[v] = -1
        return total

    value = extend(0, 0)
    return ExactResult(value, nodes, (time.perf_counter() - start) * 1000, None)
