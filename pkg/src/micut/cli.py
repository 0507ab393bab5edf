"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 exhaustive-limit refusal, 4 precondition rejection.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from pathlib import Path

from . import graph as gr
from . import sat
from .errors import ExhaustiveLimitError, FormatError, PreconditionError
from .game import (
    GameParams,
    best_response_dynamics,
    exact,
    frustration,
    is_local_min_frustration,
    is_nash,
    is_polar_equilibrium,
    polar_params,
    profile_from_b_set,
    random_profile,
    to_json_number,
)
from .reductions import (
    CERTIFICATE_LIMIT,
    check_certificate,
    check_mis_certificate,
    gadget_case_table,
    gadget_table_matches,
    is_complete,
    reduce_2sat_to_micut,
    reduce_mis_to_micut,
)
from .solvers import exact_micut, greedy_micut, local_search_micut

EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT, EXIT_PRECONDITION = 1, 2, 3, 4
GRAPH_SUFFIXES = (".dimacs", ".col", ".gr")


class UsageError(Exception):
    pass


def _emit(args, payload, human=None):
    if args.json or human is None:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


# --- gen ----------------------------------------------------------------------

def cmd_gen(args) -> int:
    kind = args.kind
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    if kind == "rand-m2sat":
        m = args.m if args.m is not None else args.n
        if m < 0 or m > sat.max_clauses(args.n):
            raise UsageError(f"--m must lie in 0..{sat.max_clauses(args.n)} for n={args.n}")
        inst = sat.random_instance(args.n, m, seed=args.seed)
        text = sat.serialize_instance(inst, [f"rand-m2sat n={args.n} m={m} seed={args.seed}"])
    else:
        if kind == "gnp-graph":
            if args.p is None or not 0.0 <= args.p <= 1.0:
                raise UsageError("--p must be an edge probability in [0, 1]")
            g = gr.gnp_graph(args.n, args.p, seed=args.seed)
            note = f"gnp n={args.n} p={args.p} seed={args.seed}"
        elif kind == "cycle":
            if args.n < 3:
                raise UsageError("a cycle needs --n >= 3")
            g, note = gr.cycle_graph(args.n), f"cycle n={args.n}"
        elif kind == "path":
            g, note = gr.path_graph(args.n), f"path n={args.n}"
        else:
            g, note = gr.star_graph(args.n - 1), f"star n={args.n} center=1"
        text = gr.serialize_graph(g, [note])
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# --- solve --------------------------------------------------------------------

def _solve(g, algo, seed, restarts, limit):
    if algo == "exact":
        return exact_micut(g, limit=limit)
    if algo == "greedy":
        return greedy_micut(g)
    return local_search_micut(g, seed=seed, restarts=restarts)


def cmd_solve(args) -> int:
    g = gr.read_graph(args.graph)
    sol = _solve(g, args.algo, args.seed, args.restarts, args.limit_exact)
    _emit(args, sol.to_json(), f"{sol.algorithm}: value {sol.value}, set {' '.join(map(str, sol.set))}")
    return 0


# --- reduce -------------------------------------------------------------------

def cmd_reduce(args) -> int:
    out = Path(args.out)
    if args.source == "mis":
        g = gr.read_graph(args.input)
        if is_complete(g) or g.node_count < 2:
            raise PreconditionError(
                "mis reduction rejects complete graphs (and graphs with < 2 nodes): "
                "the source must not be complete"
            )
        gp = reduce_mis_to_micut(g)
        n = g.node_count
        comments = [f"mis reduction of {args.input}",
                    f"original nodes 1..{n}", f"added clique nodes {n + 1}..{gp.node_count}"]
        summary = {"from": "mis", "source_nodes": n, "source_edges": g.edge_count,
                   "nodes": gp.node_count, "edges": gp.edge_count,
                   "original_nodes": [1, n], "added_nodes": [n + 1, gp.node_count]}
        gr.write_graph(gp, out, comments)
    else:
        inst = sat.read_instance(args.input)
        if args.raw:
            if any(sat.is_tautology(c) for c in inst.clauses):
                raise PreconditionError("--raw input contains a tautological clause")
            work, pre = inst, None
        else:
            report = sat.preprocess(inst)
            work = report.residual
            pre = {"removed_tautologies": report.removed_tautologies,
                   "forced_variables": {str(k): v for k, v in sorted(report.forced_variables.items())},
                   "guaranteed_true": report.guaranteed_true,
                   "variable_map": list(report.variable_map)}
        red = reduce_2sat_to_micut(work, require_residual=not args.raw)
        gr.write_graph(red.graph, out, [f"m2sat reduction of {args.input}"] + red.node_map_comments())
        summary = {"from": "m2sat", **red.summary(), "preprocess": pre}
    Path(str(out) + ".json").write_text(json.dumps(summary, indent=2) + "\n")
    _emit(args, summary, f"wrote {out}: {summary['nodes']} nodes, {summary['edges']} edges")
    return 0


# --- dynamics -----------------------------------------------------------------

def _positive(text, name):
    try:
        x = exact(text)
    except (TypeError, ValueError, ZeroDivisionError):
        raise UsageError(f"{name} must be a rational number, got {text!r}") from None
    if x <= 0:
        raise UsageError(f"{name} must be positive")
    return x


def cmd_dynamics(args) -> int:
    pi_a = _positive(args.pi_a, "--pi-a")
    pi_b = _positive(args.pi_b, "--pi-b")
    g = gr.read_graph(args.graph)
    p = GameParams.from_relative(pi_a, pi_b)
    n, m = g.node_count, g.edge_count
    if args.start == "all-A":
        s0 = "A" * n
    elif args.start == "all-B":
        s0 = "B" * n
    else:
        s0 = random_profile(n, random.Random(args.seed))
    trace = best_response_dynamics(g, s0, p, schedule=args.schedule, seed=args.seed)
    payload = trace.to_json()
    payload.update({
        "initial_profile": s0,
        "initial_frustration": to_json_number(trace.initial_frustration),
        "final_frustration": to_json_number(frustration(g, trace.final_profile, p)),
        "nash": is_nash(g, trace.final_profile, p),
        "polar_regime": pi_a > m * pi_b,
        "polar_equilibrium": is_polar_equilibrium(g, trace.final_profile) if pi_a > m * pi_b else None,
        "n_m_squared": n * m * m,
    })
    _emit(args, payload, f"{trace.step_count} steps -> {trace.final_profile} (nash={payload['nash']})")
    return 0


# --- verify -------------------------------------------------------------------

def _no_isolated(g: gr.Graph, rng: random.Random) -> gr.Graph:
    if g.node_count < 2:
        return g
    edges = set(g.edges)
    for v in g.nodes:
        if g.degree(v) == 0 and not any(v in e for e in edges):
            w = rng.choice([u for u in g.nodes if u != v])
            edges.add((min(v, w), max(v, w)))
    return gr.Graph(g.node_count, frozenset(edges))


def random_residual_instance(rng: random.Random, max_n: int, max_m: int = 10) -> sat.Max2SatInstance:
    """Draw instances until preprocessing leaves a nonempty residual."""
    while True:
        n = rng.randint(1, max_n)
        m = rng.randint(1, min(sat.max_clauses(n), max_m))
        res = sat.preprocess(sat.random_instance(n, m, seed=rng.randrange(2**32))).residual
        if res.n:
            return res


def _suite_eq12(args, rng):
    for t in range(args.count):
        inst_seed = rng.randrange(2**32)
        inst = random_residual_instance(random.Random(inst_seed), args.max_n)
        cert = check_certificate(inst, trials=20, seed=inst_seed, limit=max(args.limit_exact, CERTIFICATE_LIMIT),
                                 sat_limit=args.limit_sat)
        yield inst_seed, cert.ok, cert.to_json()


def _suite_thm1(args, rng):
    for t in range(args.count):
        inst_seed = r = rng.randrange(2**32)
        local = random.Random(r)
        while True:
            n = local.randint(2, args.max_n)
            g = gr.gnp_graph(n, local.random(), seed=local.randrange(2**32))
            if not is_complete(g):
                break
        rep = check_mis_certificate(g, limit=max(args.limit_exact, CERTIFICATE_LIMIT))
        yield inst_seed, rep["ok"], rep


def _suite_gadget(args, rng):
    table = gadget_case_table()
    ok = gadget_table_matches(table)
    summary = {case: sorted(row["contributions"]) for case, row in table.items()}
    yield None, ok, {"contributions": summary}


def _suite_polar(args, rng):
    for t in range(args.count):
        inst_seed = rng.randrange(2**32)
        local = random.Random(inst_seed)
        n = local.randint(1, args.max_n)
        g = _no_isolated(gr.gnp_graph(n, local.random(), seed=local.randrange(2**32)), local)
        p = polar_params(g)
        bad = None
        for code in range(1 << n):
            s = profile_from_b_set(n, (v for v in g.nodes if code >> (v - 1) & 1))
            nash = is_nash(g, s, p)
            if nash != is_polar_equilibrium(g, s) or nash != is_local_min_frustration(g, s, p):
                bad = s
                break
        yield inst_seed, bad is None, {"n": n, "edges": g.edge_count, "counterexample": bad}


SUITES = {"eq12": _suite_eq12, "thm1": _suite_thm1, "gadget": _suite_gadget, "polar": _suite_polar}


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    passed = 0
    failures = []
    for inst_seed, ok, detail in SUITES[args.suite](args, rng):
        if ok:
            passed += 1
        else:
            failures.append({"seed": inst_seed, "detail": detail})
    report = {"suite": args.suite, "seed": args.seed, "passed": passed,
              "failed": len(failures), "failures": failures}
    _emit(args, report, f"{args.suite}: {passed} passed, {len(failures)} failed")
    return 0 if not failures else EXIT_FAIL


# --- bench --------------------------------------------------------------------

def cmd_bench(args) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        raise UsageError(f"{root} is not a directory")
    files = sorted(f for f in root.iterdir() if f.suffix in GRAPH_SUFFIXES)
    if not files:
        raise UsageError(f"no graph files ({', '.join(GRAPH_SUFFIXES)}) in {root}")
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    unknown = set(algos) - {"exact", "greedy", "local"}
    if unknown or not algos:
        raise UsageError(f"unknown algorithm(s): {sorted(unknown)}")
    rows = []
    for f in files:
        g = gr.read_graph(f)
        results = {}
        for algo in algos:
            t0 = time.perf_counter()
            try:
                value = _solve(g, algo, args.seed, args.restarts, args.limit_exact).value
            except ExhaustiveLimitError:
                value = None
            results[algo] = (value, time.perf_counter() - t0)
        best = results.get("exact", (None, 0))[0]
        for algo in algos:
            value, elapsed = results[algo]
            row = {"instance": f.name, "nodes": g.node_count, "edges": g.edge_count, "algo": algo,
                   "value": value, "gap": None if best is None or value is None else best - value}
            if not args.no_timing:
                row["seconds"] = round(elapsed, 6)
            rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    return 0


# --- wiring -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--limit-exact", type=int, default=30, help="node cap for exact enumeration")
    common.add_argument("--limit-sat", type=int, default=20, help="variable cap for brute-force MAX-2SAT")

    parser = argparse.ArgumentParser(prog="micut", description="Anti-coordination games and maximum independent cuts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a graph or m2sat instance")
    p.add_argument("kind", choices=["gnp-graph", "cycle", "path", "star", "rand-m2sat"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", parents=[common], help="solve maximum independent cut")
    p.add_argument("graph")
    p.add_argument("--algo", choices=["exact", "greedy", "local"], default="exact")
    p.add_argument("--restarts", type=int, default=10)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", parents=[common], help="build a reduced independent-cut instance")
    p.add_argument("--from", dest="source", choices=["mis", "m2sat"], required=True)
    p.add_argument("input")
    p.add_argument("--out", required=True)
    p.add_argument("--raw", action="store_true", help="m2sat: skip preprocessing (tautologies still rejected)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("dynamics", parents=[common], help="run best-response dynamics")
    p.add_argument("graph")
    p.add_argument("--pi-a", required=True)
    p.add_argument("--pi-b", required=True)
    p.add_argument("--schedule", choices=["roundrobin", "random"], default="roundrobin")
    p.add_argument("--start", choices=["all-A", "all-B", "random"], default="random")
    p.set_defaults(func=cmd_dynamics)

    p = sub.add_parser("verify", parents=[common], help="run a property suite against exhaustive oracles")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="compare solvers over a directory of graphs")
    p.add_argument("dir")
    p.add_argument("--algos", default="exact,greedy,local")
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--no-timing", action="store_true", help="omit wall times (byte-reproducible output)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError) as exc:
        print(f"micut {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"micut {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExhaustiveLimitError as exc:
        print(f"micut {args.command}: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except PreconditionError as exc:
        print(f"micut {args.command}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
