"""Command-line entry point: ``acyclic <subcommand> ...``.

Reports go to stdout as JSON (colourings and edge lists as plain lines);
diagnostics go to stderr.  Exit status 0 on success, 1 when the operation
fails or a verification is negative, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import __version__
from . import bounds as _bounds
from .colouring import parse_colouring
from .constraints import edge_constraints
from .cycles import (
    EnumerationBudgetExceeded,
    cycle_degree_profile,
    enumerate_even_cycles,
    path_count_estimate,
)
from .exact import chi_a_exact, chi_exact, count_acyclic_colourings
from .generators import (
    GenerationFailure,
    gen_bipartite_random,
    gen_named,
    gen_one_subdivision,
    gen_projective_incidence,
    gen_random_ktree,
    gen_random_regular_girth,
    gen_subdivision_complete,
)
from .graph import EdgeListParseError, Graph, load_graph, max_degree
from .obstructions import PatternGraph, classify_obstruction, contains_subgraph
from .sampler import (
    ALL_EVEN_CYCLES,
    SamplerFailure,
    colour_c2t_pipeline,
    colour_degenerate_pipeline,
    sample_colouring,
    verify_colouring,
)

log = logging.getLogger("acyclic")

PATH_BUDGET = 10**8


class OperationError(Exception):
    pass


def _read_graph(spec: str | None) -> Graph:
    """A file path, '-' / None for stdin, or a named preset such as 'cycle 6'."""
    if spec is None or spec == "-":
        return load_graph(sys.stdin.read())
    if os.path.exists(spec):
        with open(spec) as fh:
            return load_graph(fh.read())
    try:
        return gen_named(spec)
    except ValueError:
        raise OperationError(f"{spec!r} is neither a readable file nor a named graph") from None


def _emit(args, doc: dict):
    out = {"tool_version": __version__, "command": args.command}
    if getattr(args, "seed", None) is not None:
        out["seed"] = args.seed
    out.update(doc)
    print(json.dumps(out, sort_keys=False))


def cmd_colour(args) -> int:
    g = _read_graph(args.graph)
    if args.pipeline == "degenerate":
        phi, report = colour_degenerate_pipeline(g, seed=args.seed, max_steps=args.max_steps)
        verdict = verify_colouring(g, edge_constraints(g), phi, ALL_EVEN_CYCLES)
        extra = {"bound": report.to_json()}
    elif args.pipeline == "c2t":
        if args.t is None:
            raise OperationError("--t is required for the c2t pipeline")
        gamma = 1 / 3 if args.gamma is None else args.gamma
        phi, report = colour_c2t_pipeline(g, args.t, seed=args.seed, k=args.k, gamma=gamma,
                                          max_steps=args.max_steps)
        verdict = verify_colouring(g, edge_constraints(g), phi, ALL_EVEN_CYCLES)
        extra = {"bound": report.to_json()}
    else:
        if args.k is None:
            raise OperationError("--k is required for the generic sampler")
        cs = edge_constraints(g)
        pi = ALL_EVEN_CYCLES if args.cycles == "all" else None
        res = sample_colouring(g, cs, pi, args.k, seed=args.seed, max_steps=args.max_steps)
        if not res.success:
            raise SamplerFailure(res)
        phi = res.colouring
        verdict = verify_colouring(g, cs, phi, pi)
        extra = {"sampler": res.to_json()}
    sys.stdout.write(phi.to_lines())
    _emit(args, {"k": phi.k, "colours_used": phi.colours_used(), "verdict": verdict.to_json(), **extra})
    return 0 if verdict.valid else 1


def cmd_bound(args) -> int:
    family = args.family_pos or args.family
    if family is None:
        raise OperationError("bound family required")
    if args.delta is None:
        raise OperationError("--delta is required")
    report = _bounds.compute(family, args.delta, args.t, args.gamma)
    _emit(args, report.to_json())
    return 0


def cmd_exact(args) -> int:
    g = _read_graph(args.graph)
    k_max = args.k if args.k is not None else g.n
    if args.ordinary:
        res = chi_exact(g, k_max)
        key = "chi"
    else:
        res = chi_a_exact(g, k_max)
        key = "chi_a"
    _emit(args, {key: res.value, **res.to_json()})
    return 0


def _even_family(g: Graph, max_len: int | None):
    limit = max_len if max_len is not None else max(4, g.n - g.n % 2)
    if limit < 4:
        limit = 4
    if path_count_estimate(g, limit) > PATH_BUDGET:
        raise OperationError(
            f"cycle enumeration up to length {limit} may visit ~{path_count_estimate(g, limit):.3g} paths "
            f"(budget {PATH_BUDGET}); lower --max-len"
        )
    return enumerate_even_cycles(g, limit, budget=PATH_BUDGET)


def cmd_count(args) -> int:
    g = _read_graph(args.graph)
    if args.k is None:
        raise OperationError("--k is required")
    fam = _even_family(g, args.max_len) if args.cycles == "all" else None
    res = count_acyclic_colourings(g, edge_constraints(g), fam, args.k)
    _emit(args, {"k": args.k, "cycles": len(fam) if fam else 0, **res.to_json()})
    return 0


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    if args.colouring is None:
        raise OperationError("--colouring is required")
    with open(args.colouring) if args.colouring != "-" else sys.stdin as fh:
        phi = parse_colouring(fh.read(), g.n)
    pi = ALL_EVEN_CYCLES if args.cycles == "all" else None
    verdict = verify_colouring(g, edge_constraints(g), phi, pi)
    _emit(args, verdict.to_json())
    return 0 if verdict.valid else 1


def cmd_detect(args) -> int:
    if args.pattern is None:
        raise OperationError("--pattern is required")
    f = _read_graph(args.pattern)
    g = _read_graph(args.graph)
    witness = contains_subgraph(g, f)
    _emit(args, {
        "contains": witness is not None,
        "witness": {str(k): v for k, v in witness.items()} if witness is not None else None,
    })
    return 0


def cmd_classify(args) -> int:
    if args.pattern is None:
        raise OperationError("--pattern is required")
    pf = PatternGraph(_read_graph(args.pattern))
    report = classify_obstruction(pf, args.delta)
    doc = report.to_json()
    doc["pattern"] = {
        "vertices": pf.n,
        "edges": pf.m,
        "bipartite": pf.is_bipartite,
        "forest": pf.is_forest,
        "feedback_vertex_number": pf.feedback_vertex_number if pf.n <= 16 else None,
    }
    doc["subdivision"] = pf.subdivision_verdict.to_json()
    _emit(args, doc)
    return 0


_RANDOM_FAMILIES = {"bipartite-random", "random-regular", "ktree"}


def cmd_generate(args) -> int:
    family, params = args.family, args.params
    if family in _RANDOM_FAMILIES and args.seed is None:
        raise OperationError(f"--seed is required for {family}")

    def ints(count):
        if len(params) != count:
            raise OperationError(f"{family} takes {count} parameter(s)")
        return [int(p) for p in params]

    if family == "subdivision-complete":
        (nv,) = ints(1)
        g = gen_subdivision_complete(nv)
    elif family == "subdivision":
        g = gen_one_subdivision(_read_graph(args.graph))
    elif family == "bipartite-random":
        if len(params) != 2:
            raise OperationError("bipartite-random takes nside p")
        g = gen_bipartite_random(int(params[0]), float(params[1]), args.seed)
    elif family == "random-regular":
        nv, d, gi = ints(3)
        g = gen_random_regular_girth(nv, d, gi, args.seed, args.max_tries)
    elif family == "projective":
        (q,) = ints(1)
        g = gen_projective_incidence(q)
    elif family == "ktree":
        n, k = ints(2)
        g = gen_random_ktree(n, k, args.seed)
    else:
        g = gen_named(" ".join([family] + params))
    sys.stdout.write(g.to_edge_list())
    return 0


def cmd_profile_cycles(args) -> int:
    g = _read_graph(args.graph)
    max_len = args.max_len
    if max_len < 4 or max_len % 2:
        raise OperationError("--max-len must be an even integer >= 4")
    est = path_count_estimate(g, max_len)
    if est > PATH_BUDGET:
        raise OperationError(f"Delta^max_len = {est:.3g} exceeds the path budget {PATH_BUDGET}")
    fam = enumerate_even_cycles(g, max_len, budget=PATH_BUDGET)
    if args.cycles_out:
        with open(args.cycles_out, "w") as fh:
            fh.write(fam.to_lines())
    profile = {str(length): count for length, count in cycle_degree_profile(fam).items()}
    _emit(args, {"max_len": max_len, "max_degree": max_degree(g), "cycles": len(fam), "profile": profile})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="acyclic", description="Acyclic colouring bounds, samplers and exact oracles.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_arg(sp, required=False):
        sp.add_argument("--graph", default=None, required=required,
                        help="edge-list file, '-' for stdin (default), or a name like 'cycle 6'")

    c = sub.add_parser("colour", help="sample a verified acyclic colouring")
    graph_arg(c)
    c.add_argument("--k", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--max-steps", type=int)
    c.add_argument("--pipeline", choices=("generic", "degenerate", "c2t"), default="generic")
    c.add_argument("--cycles", choices=("all", "none"), default="all",
                   help="forbid bicoloured even cycles (all) or only require properness (none)")
    c.add_argument("--t", type=int)
    c.add_argument("--gamma", type=float)
    c.set_defaults(func=cmd_colour)

    b = sub.add_parser("bound", help="compute a palette bound K")
    b.add_argument("family_pos", nargs="?", choices=_bounds.FAMILIES[1:], metavar="FAMILY")
    b.add_argument("--family", choices=_bounds.FAMILIES[1:])
    b.add_argument("--delta", type=int)
    b.add_argument("--t", type=int)
    b.add_argument("--gamma", type=float)
    b.set_defaults(func=cmd_bound)

    e = sub.add_parser("exact", help="exact acyclic chromatic number")
    graph_arg(e)
    e.add_argument("--k", type=int, help="largest palette tried (default n)")
    e.add_argument("--ordinary", action="store_true", help="ordinary chromatic number instead")
    e.set_defaults(func=cmd_exact)

    n = sub.add_parser("count", help="count proper colourings without bicoloured even cycles")
    graph_arg(n)
    n.add_argument("--k", type=int)
    n.add_argument("--max-len", type=int, help="longest cycle considered (default n)")
    n.add_argument("--cycles", choices=("all", "none"), default="all")
    n.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="check a colouring")
    graph_arg(v, required=True)
    v.add_argument("--colouring", help="'v colour' lines, '-' for stdin")
    v.add_argument("--cycles", choices=("all", "none"), default="all")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("detect", help="find the pattern as a subgraph")
    graph_arg(d)
    d.add_argument("--pattern")
    d.set_defaults(func=cmd_detect)

    cl = sub.add_parser("classify", help="bound family for excluding a pattern")
    cl.add_argument("--pattern")
    cl.add_argument("--delta", type=int)
    cl.set_defaults(func=cmd_classify)

    gnr = sub.add_parser("generate", help="emit a generated graph as an edge list")
    gnr.add_argument("family", help="path|cycle|complete|complete_bipartite|hypercube|star|petersen|heawood|"
                                     "subdivision|subdivision-complete|bipartite-random|random-regular|projective|ktree")
    gnr.add_argument("params", nargs="*")
    gnr.add_argument("--seed", type=int)
    gnr.add_argument("--max-tries", type=int, default=10000)
    graph_arg(gnr)
    gnr.set_defaults(func=cmd_generate)

    pc = sub.add_parser("profile-cycles", help="per-length maximum number of even cycles through a vertex")
    graph_arg(pc)
    pc.add_argument("--max-len", type=int, default=10)
    pc.add_argument("--cycles-out", help="also write the cycles, one per line")
    pc.set_defaults(func=cmd_profile_cycles)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except SamplerFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit(args, {"success": False, "sampler": exc.result.to_json()})
        return 1
    except (OperationError, EdgeListParseError, ValueError, GenerationFailure,
            EnumerationBudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
