"""Even-cycle families: enumeration, filters and per-vertex length statistics."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .colouring import UNSET, Colouring
from .constraints import ConstraintSet
from .graph import Graph, Orientation, max_degree

Cycle = tuple[int, ...]


class EnumerationBudgetExceeded(RuntimeError):
    pass


def canonical_cycle(seq: Sequence[int]) -> Cycle:
    """Rotate to the smallest vertex, then walk toward its smaller cycle-neighbour."""
    i = min(range(len(seq)), key=seq.__getitem__)
    rot = tuple(seq[i:]) + tuple(seq[:i])
    if rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


@dataclass(frozen=True)
class CycleFamily:
    """Explicit, duplicate-free list of canonical cycles in a graph on ``n`` vertices."""

    n: int
    cycles: tuple[Cycle, ...]
    length_index: dict[int, tuple[int, ...]] = field(init=False, repr=False, compare=False)
    vertex_index: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_len: dict[int, list[int]] = defaultdict(list)
        by_vertex: list[list[int]] = [[] for _ in range(self.n)]
        for i, c in enumerate(self.cycles):
            by_len[len(c)].append(i)
            for v in c:
                by_vertex[v].append(i)
        object.__setattr__(self, "length_index", {L: tuple(ids) for L, ids in sorted(by_len.items())})
        object.__setattr__(self, "vertex_index", tuple(tuple(ids) for ids in by_vertex))

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def through(self, v: int) -> list[Cycle]:
        return [self.cycles[i] for i in self.vertex_index[v]]

    def of_length(self, length: int) -> list[Cycle]:
        return [self.cycles[i] for i in self.length_index.get(length, ())]

    def filter(self, keep: Callable[[Cycle], bool]) -> "CycleFamily":
        return CycleFamily(self.n, tuple(c for c in self.cycles if keep(c)))

    def to_lines(self) -> str:
        return "".join(",".join(map(str, c)) + "\n" for c in self.cycles)


@dataclass(frozen=True)
class ImplicitCycles:
    """All even cycles of the host graph, optionally restricted.

    ``gamma_free`` keeps only cycles none of whose second-neighbour pairs lie
    in that constraint set; ``orientation`` keeps only antidirected cycles.
    Never materialized: samplers and verifiers search it on demand.
    """

    gamma_free: ConstraintSet | None = None
    orientation: Orientation | None = None

    @property
    def trivial(self) -> bool:
        return self.gamma_free is None and self.orientation is None

    def admits(self, cycle: Sequence[int]) -> bool:
        if len(cycle) % 2 or len(cycle) < 4:
            return False
        if self.gamma_free is not None and not is_gamma_free(cycle, self.gamma_free):
            return False
        if self.orientation is not None and not is_antidirected(cycle, self.orientation):
            return False
        return True


def _path_budget_check(count: int, budget: int | None):
    if budget is not None and count > budget:
        raise EnumerationBudgetExceeded(f"more than {budget} partial paths explored")


def enumerate_even_cycles(g: Graph, max_len: int, budget: int | None = None) -> CycleFamily:
    """Every simple even cycle of length <= ``max_len``, each once, canonical form.

    A cycle is grown from its smallest vertex ``s`` through larger vertices
    only, and recorded in the direction whose second vertex is smaller than
    its last, so each cycle is produced exactly once.
    """
    if max_len < 4 or max_len % 2:
        raise ValueError("max_len must be an even integer >= 4")
    max_len = min(max_len, g.n - g.n % 2)
    found: list[Cycle] = []
    explored = 0
    for s in range(g.n):
        path = [s]
        on_path = {s}
        # iterative DFS over (vertex, iterator of candidate neighbours)
        stack = [iter(g.adj[s])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if nxt <= s or nxt in on_path:
                continue
            explored += 1
            _path_budget_check(explored, budget)
            path.append(nxt)
            L = len(path)
            if L >= 4 and L % 2 == 0 and g.has_edge(nxt, s) and path[1] < nxt:
                found.append(tuple(path))
            if L < max_len:
                on_path.add(nxt)
                stack.append(iter(g.adj[nxt]))
            else:
                path.pop()
        # the loop pops s itself when the root iterator is exhausted
    found.sort(key=lambda c: (len(c), c))
    return CycleFamily(g.n, tuple(found))


def is_gamma_free(cycle: Sequence[int], cs: ConstraintSet) -> bool:
    L = len(cycle)
    return all((cycle[i], cycle[(i + 2) % L]) not in cs for i in range(L))


def is_antidirected(cycle: Sequence[int], o: Orientation) -> bool:
    """No directed subpath of length 2: at every vertex both cycle edges point in, or both out."""
    L = len(cycle)
    for i in range(L):
        prev, cur, nxt = cycle[i - 1], cycle[i], cycle[(i + 1) % L]
        if o.arc(prev, cur) != o.arc(nxt, cur):
            return False
    return True


def filter_gamma_free(fam: CycleFamily, cs: ConstraintSet) -> CycleFamily:
    if fam.n != cs.n:
        raise ValueError("cycle family and constraint set live on different vertex sets")
    return fam.filter(lambda c: is_gamma_free(c, cs))


def filter_antidirected(fam: CycleFamily, o: Orientation) -> CycleFamily:
    if fam.n != o.graph.n:
        raise ValueError("cycle family and orientation live on different graphs")
    return fam.filter(lambda c: is_antidirected(c, o))


def cycle_degree_profile(fam: CycleFamily) -> dict[int, int]:
    """For each length present, the largest number of member cycles through one vertex."""
    profile = {}
    for length, ids in fam.length_index.items():
        per_vertex: Counter = Counter()
        for i in ids:
            per_vertex.update(fam.cycles[i])
        profile[length] = max(per_vertex.values())
    return profile


def is_bicoloured(cycle: Sequence[int], phi: Colouring) -> bool:
    """Both alternation classes of the (even) cycle are monochromatic."""
    if any(phi[v] == UNSET for v in cycle):
        raise ValueError("cycle contains an uncoloured vertex")
    L = len(cycle)
    if L % 2:
        return False
    return all(phi[cycle[i]] == phi[cycle[(i + 2) % L]] for i in range(L))


def count_cycles_through(g: Graph, v0: int, length: int) -> int:
    """Number of simple cycles of the given even length through ``v0``.

    Counts simple paths of ``length - 1`` edges from ``v0`` that close back to
    it; each cycle is seen once per direction, hence the halving.
    """
    if length < 4 or length % 2:
        raise ValueError("length must be an even integer >= 4")
    closed = 0
    on_path = [False] * g.n
    on_path[v0] = True

    def extend(x: int, depth: int):
        nonlocal closed
        if depth == length - 1:
            if g.has_edge(x, v0):
                closed += 1
            return
        for y in g.adj[x]:
            if not on_path[y]:
                on_path[y] = True
                extend(y, depth + 1)
                on_path[y] = False

    extend(v0, 0)
    return closed // 2


def path_count_estimate(g: Graph, max_len: int) -> int:
    """Crude Delta**max_len estimate of the partial paths an enumeration visits."""
    return max_degree(g) ** max_len


def family_from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> CycleFamily:
    canon = sorted({canonical_cycle(c) for c in cycles}, key=lambda c: (len(c), c))
    return CycleFamily(n, tuple(canon))
