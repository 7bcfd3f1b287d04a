"""Randomized local correction for Gamma-proper Pi-acyclic colourings.

Vertices are coloured in id order with uniform random colours.  A clash
with a constraint partner is repaired by resampling the vertex; a bicoloured
cycle (v0, ..., v_{2l-1}) through the newly coloured vertex v0 is repaired
by uncolouring v0, ..., v_{2l-3} and restarting from the lowest uncoloured
id.  The cycle family is either explicit or searched on demand inside the
union of the two implicated colour classes.
"""

from __future__ import annotations

import heapq
import math
import random
from collections import defaultdict, deque
from dataclasses import dataclass, field

from . import bounds as _bounds
from .colouring import UNSET, Colouring
from .constraints import (
    ConstraintSet,
    directed_2path_constraints,
    edge_constraints,
    gamma_special_pairs,
    greedy_proper_colouring,
    heavy_in_codegree_constraints,
    union,
)
from .cycles import CycleFamily, ImplicitCycles, canonical_cycle, is_bicoloured
from .graph import Graph, degeneracy_order, max_degree, orient_by_order

ALL_EVEN_CYCLES = ImplicitCycles()


class SamplerFailure(RuntimeError):
    def __init__(self, result: "SampleResult"):
        super().__init__(
            f"sampler gave up after {result.steps} recolourings (last flaw: {result.last_flaw})"
        )
        self.result = result


@dataclass
class SampleResult:
    success: bool
    colouring: Colouring | None
    steps: int
    flaws_a: int = 0
    flaws_b: int = 0
    last_flaw: tuple | None = None

    def to_json(self) -> dict:
        return {
            "success": self.success,
            "steps": self.steps,
            "flaws_a": self.flaws_a,
            "flaws_b": self.flaws_b,
            "last_flaw": list(self.last_flaw) if self.last_flaw else None,
        }


@dataclass
class Verdict:
    valid: bool
    conflicts: list[tuple[int, int]] = field(default_factory=list)
    witness_cycle: tuple[int, ...] | None = None
    witness_pair: tuple[int, int] | None = None

    @property
    def proper(self) -> bool:
        return not self.conflicts

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "proper": self.proper,
            "conflicts": [list(p) for p in self.conflicts],
            "witness_cycle": list(self.witness_cycle) if self.witness_cycle else None,
            "witness_pair": list(self.witness_pair) if self.witness_pair else None,
        }


# -- bicoloured cycle search ---------------------------------------------------


def _bfs_cycle_through(g: Graph, col, v: int, a: int, b: int):
    """Shortest cycle through v alternating colours a, b (a != b), any length."""
    other = {a: b, b: a}
    dist = {v: 0}
    parent = {v: -1}
    branch = {v: -1}
    queue = deque([v])
    best = None
    best_len = math.inf
    while queue:
        x = queue.popleft()
        if 2 * dist[x] >= best_len:
            break
        want = other[col[x]]
        for y in g.adj[x]:
            if col[y] != want or y == v:
                continue
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                branch[y] = y if x == v else branch[x]
                queue.append(y)
            elif y != parent[x] and branch[y] != branch[x]:
                length = dist[x] + dist[y] + 1
                if length < best_len:
                    best_len = length
                    best = (x, y)
    if best is None:
        return None
    x, y = best
    left = []
    while x != -1:
        left.append(x)
        x = parent[x]
    right = []
    while y != v:
        right.append(y)
        y = parent[y]
    return tuple(reversed(left)) + tuple(right)


def _dfs_cycle_through(g: Graph, col, v: int, a: int, b: int, pi: ImplicitCycles, limit: int):
    """Shortest even cycle through v with colours a, b alternating and admitted by ``pi``.

    Iterative deepening; the admission tests are applied incrementally on
    consecutive triples of the growing path.
    """
    cs = pi.gamma_free
    o = pi.orientation

    def triple_ok(p, q, r):
        # q is the middle vertex of the consecutive triple p, q, r
        if cs is not None and (p, r) in cs:
            return False
        if o is not None and o.arc(p, q) != o.arc(r, q):
            return False
        return True

    path = [v]
    on_path = {v}

    def grow(length: int):
        j = len(path)
        want = a if j % 2 == 0 else b
        last = j == length - 1
        for y in g.adj[path[-1]]:
            if y in on_path or col[y] != want:
                continue
            if j >= 2 and not triple_ok(path[-2], path[-1], y):
                continue
            if last:
                if not g.has_edge(y, v):
                    continue
                if not (triple_ok(path[-1], y, v) and triple_ok(y, v, path[1])):
                    continue
                return tuple(path) + (y,)
            path.append(y)
            on_path.add(y)
            found = grow(length)
            path.pop()
            on_path.discard(y)
            if found:
                return found
        return None

    for length in range(4, limit + 1, 2):
        found = grow(length)
        if found:
            return found
    return None


def find_bicoloured_cycle(g: Graph, col, v: int, pi):
    """A shortest cycle of ``pi`` through v that is bicoloured under the partial colouring ``col``.

    Only fully coloured cycles count.  Returns the cycle starting at v, or None.
    """
    a = col[v]
    if a == UNSET or pi is None:
        return None
    if isinstance(pi, CycleFamily):
        best = None
        for cyc in pi.through(v):
            if best is not None and len(cyc) >= len(best):
                continue
            if any(col[x] == UNSET for x in cyc):
                continue
            L = len(cyc)
            if all(col[cyc[i]] == col[cyc[(i + 2) % L]] for i in range(L)):
                best = cyc
        if best is None:
            return None
        i = best.index(v)
        return best[i:] + best[:i]
    best = None
    size = defaultdict(int)
    for c in col:
        size[c] += 1
    for b in sorted({col[u] for u in g.adj[v] if col[u] != UNSET}):
        if pi.trivial and b != a:
            cyc = _bfs_cycle_through(g, col, v, a, b)
        else:
            limit = size[a] + size[b] if a != b else size[a]
            if best is not None:
                limit = min(limit, len(best) - 2)
            cyc = _dfs_cycle_through(g, col, v, a, b, pi, limit)
        if cyc and (best is None or len(cyc) < len(best)):
            best = cyc
    return best


# -- sampler ---------------------------------------------------------------------


def sample_colouring(
    g: Graph,
    cs: ConstraintSet,
    pi_spec,
    k: int,
    seed=None,
    max_steps: int | None = None,
) -> SampleResult:
    """Randomized local correction toward a ``cs``-proper ``pi_spec``-acyclic k-colouring.

    ``pi_spec`` is a :class:`CycleFamily`, an :class:`ImplicitCycles`, or None
    for no cycle constraint.  Flaws are repaired at the lowest uncoloured
    vertex; bicoloured cycles are repaired shortest first.  Gives up after
    ``max_steps`` colour assignments (default ``1000 * n * k``).
    """
    if cs.n != g.n:
        raise ValueError("constraint set and graph have different vertex counts")
    if k < cs.max_degree() + 2:
        raise ValueError(f"palette {k} below Delta(Gamma) + 2 = {cs.max_degree() + 2}")
    if max_steps is None:
        max_steps = 1000 * max(g.n, 1) * k
    rng = random.Random(seed)
    col = [UNSET] * g.n
    uncoloured = list(range(g.n))
    heapq.heapify(uncoloured)
    steps = flaws_a = flaws_b = 0
    last_flaw = None
    while uncoloured:
        if steps >= max_steps:
            return SampleResult(False, None, steps, flaws_a, flaws_b, last_flaw)
        v = uncoloured[0]
        c = rng.randrange(k)
        col[v] = c
        steps += 1
        clash = next((u for u in cs.neighbours(v) if col[u] == c), None)
        if clash is not None:
            col[v] = UNSET
            flaws_a += 1
            last_flaw = ("a", v, clash)
            continue
        cyc = find_bicoloured_cycle(g, col, v, pi_spec)
        if cyc is not None:
            flaws_b += 1
            last_flaw = ("b", v, len(cyc))
            if cyc[-1] < cyc[1]:
                cyc = (cyc[0],) + tuple(reversed(cyc[1:]))
            for x in cyc[: len(cyc) - 2]:
                if x != v:
                    heapq.heappush(uncoloured, x)
                col[x] = UNSET
            continue
        heapq.heappop(uncoloured)
    return SampleResult(True, Colouring(tuple(col), k), steps, flaws_a, flaws_b, last_flaw)


# -- verification -------------------------------------------------------------------


def _cycle_in_core(adj: dict[int, list[int]]):
    """Peel degree <= 1 vertices; if something survives, walk out a cycle in it."""
    deg = {x: len(nb) for x, nb in adj.items()}
    stack = [x for x, d in deg.items() if d <= 1]
    alive = set(adj)
    while stack:
        x = stack.pop()
        if x not in alive:
            continue
        alive.discard(x)
        for y in adj[x]:
            if y in alive:
                deg[y] -= 1
                if deg[y] == 1:
                    stack.append(y)
    if not alive:
        return None
    start = min(alive)
    seen = {start: 0}
    walk = [start]
    prev = None
    x = start
    while True:
        y = next(z for z in adj[x] if z in alive and z != prev)
        if y in seen:
            return tuple(walk[seen[y]:])
        seen[y] = len(walk)
        walk.append(y)
        prev, x = x, y


def verify_colouring(g: Graph, cs: ConstraintSet, phi: Colouring, pi_spec=ALL_EVEN_CYCLES) -> Verdict:
    """Check ``cs``-properness and that no cycle of ``pi_spec`` is bicoloured.

    For the unrestricted implicit family every pair of colour classes must
    induce a forest; restricted or explicit families are checked member by
    member.  The verdict carries a witness cycle on failure.
    """
    if len(phi) != g.n:
        raise ValueError("colouring and graph have different vertex counts")
    if not phi.is_total():
        raise ValueError("verification needs a total colouring")
    conflicts = sorted((u, v) for u, v in cs.pairs if phi[u] == phi[v])
    witness = None
    pair = None
    if isinstance(pi_spec, CycleFamily):
        for cyc in pi_spec:
            if is_bicoloured(cyc, phi):
                witness = cyc
                pair = tuple(sorted({phi[cyc[0]], phi[cyc[1]]}))
                break
    elif isinstance(pi_spec, ImplicitCycles) and pi_spec.trivial:
        by_pair: dict[tuple[int, int], dict[int, list[int]]] = defaultdict(lambda: defaultdict(list))
        mono = set()
        for u, v in g.edges():
            a, b = phi[u], phi[v]
            if a == b:
                mono.add(a)
                continue
            key = (a, b) if a < b else (b, a)
            by_pair[key][u].append(v)
            by_pair[key][v].append(u)
        for key in sorted(by_pair):
            cyc = _cycle_in_core(by_pair[key])
            if cyc is not None:
                witness, pair = canonical_cycle(cyc), key
                break
        if witness is None and mono:
            # improper colourings: an even cycle inside one class is bicoloured too
            col = list(phi.assignment)
            for v in range(g.n):
                if col[v] in mono:
                    cyc = find_bicoloured_cycle(g, col, v, pi_spec)
                    if cyc is not None:
                        witness, pair = canonical_cycle(cyc), (col[v], col[v])
                        break
    elif isinstance(pi_spec, ImplicitCycles):
        col = list(phi.assignment)
        for v in range(g.n):
            cyc = find_bicoloured_cycle(g, col, v, pi_spec)
            if cyc is not None:
                witness = canonical_cycle(cyc)
                pair = tuple(sorted({col[cyc[0]], col[cyc[1]]}))
                break
    elif pi_spec is not None:
        raise TypeError(f"unsupported cycle specification {type(pi_spec).__name__}")
    return Verdict(not conflicts and witness is None, conflicts, witness, pair)


def product_colouring(a: Colouring, b: Colouring) -> Colouring:
    """Colour v by the pair (a(v), b(v)), encoded as a(v) * k_b + b(v)."""
    if len(a) != len(b):
        raise ValueError("colourings on different vertex sets")
    if not (a.is_total() and b.is_total()):
        raise ValueError("product needs total colourings")
    return Colouring(tuple(x * b.k + y for x, y in zip(a.assignment, b.assignment)), a.k * b.k)


# -- pipelines --------------------------------------------------------------------


def colour_degenerate_pipeline(g: Graph, seed=None, max_steps: int | None = None):
    """Acyclic colouring of a t-degenerate graph as a product of two factors.

    The first factor is a greedy proper colouring of the pairs joined by a
    directed path of length <= 2 in a degeneracy orientation (at most
    t^2+t+1 colours).  The second is sampled: proper on pairs with at least
    (t Delta)^(1/3) common in-neighbours and free of bicoloured antidirected
    cycles avoiding those pairs.  Returns ``(colouring, report)``.
    """
    order, t = degeneracy_order(g)
    o = orient_by_order(g, order)
    gamma0 = directed_2path_constraints(o)
    phi0 = greedy_proper_colouring(gamma0)
    k0 = t * t + t + 1
    if phi0.k > k0:
        raise AssertionError(f"greedy used {phi0.k} colours, more than t^2+t+1 = {k0}")
    phi0 = Colouring(phi0.assignment, k0)
    delta = max_degree(g)
    if t >= 1 and delta >= 2:
        report = _bounds.bound_degenerate(delta, t)
        k1 = report.K
        threshold = (t * delta) ** (1 / 3)
        gamma1 = heavy_in_codegree_constraints(o, threshold)
        pi1 = ImplicitCycles(gamma_free=gamma1, orientation=o)
        res = sample_colouring(g, gamma1, pi1, k1, seed=seed, max_steps=max_steps)
        if not res.success:
            raise SamplerFailure(res)
        phi1 = res.colouring
        steps = res.steps
        report.extras["gamma1_max_degree"] = gamma1.max_degree()
        report.extras["gamma1_threshold"] = threshold
    else:
        # maximum degree <= 1: no cycles, a single colour suffices for the second factor
        report = _bounds.BoundReport(family="degenerate", delta=delta, t=t, K=1, total=k0, k_real=1.0)
        phi1 = Colouring((0,) * g.n, 1)
        steps = 0
    phi = product_colouring(phi0, phi1)
    verdict = verify_colouring(g, edge_constraints(g), phi, ALL_EVEN_CYCLES)
    if not verdict.valid:
        raise AssertionError(f"pipeline produced an invalid colouring: {verdict.to_json()}")
    report.extras.update(
        phi0_colours=phi0.colours_used(),
        phi1_colours=phi1.colours_used(),
        palette=phi.k,
        colours_used=phi.colours_used(),
        sampler_steps=steps,
        degeneracy=t,
    )
    return phi, report


def colour_c2t_pipeline(g: Graph, t: int, seed=None, k: int | None = None, gamma: float = 1 / 3,
                        max_steps: int | None = None):
    """Acyclic colouring that keeps every gamma-special pair polychromatic.

    Constraints are the edges plus the pairs of codegree >= Delta^gamma; every
    even cycle is forbidden from being bicoloured.  The palette is the
    certified C_{2t} bound when the hypotheses hold, otherwise ``k`` must be
    given.  Returns ``(colouring, report)``.
    """
    delta = max_degree(g)
    if delta < 2:
        raise ValueError("the C_2t pipeline needs maximum degree >= 2")
    special = gamma_special_pairs(g, gamma)
    cs = union(edge_constraints(g), special)
    report = None
    if t >= 3 and t ** 3 <= delta:
        report = _bounds.bound_c2t(delta, t, gamma)
    if report is not None and report.certified and k is None:
        palette = report.K
    else:
        if k is None:
            raise ValueError("uncertified instance: supply the palette size k")
        palette = k
        if report is None:
            report = _bounds.BoundReport(family="c2t", delta=delta, t=t, K=k, gamma=gamma, certified=False)
    res = sample_colouring(g, cs, ALL_EVEN_CYCLES, palette, seed=seed, max_steps=max_steps)
    if not res.success:
        raise SamplerFailure(res)
    phi = res.colouring
    verdict = verify_colouring(g, cs, phi, ALL_EVEN_CYCLES)
    if not verdict.valid:
        raise AssertionError(f"pipeline produced an invalid colouring: {verdict.to_json()}")
    report.extras.update(
        special_pairs=len(special),
        special_max_degree=special.max_degree(),
        palette=palette,
        colours_used=phi.colours_used(),
        sampler_steps=res.steps,
    )
    return phi, report
