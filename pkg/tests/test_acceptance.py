"""Acceptance criteria, each checked exactly (integer identities, tolerance 0).

Run with ``pytest tests/test_acceptance.py`` or directly with
``python tests/test_acceptance.py``; each criterion prints one PASS/FAIL line.
"""
import functools
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from micut.game import (  # noqa: E402
    GameParams,
    best_response_dynamics,
    frustration,
    is_local_min_frustration,
    is_nash,
    is_polar_equilibrium,
    polar_params,
    random_profile,
)
from micut.graph import Graph, gnp_graph, max_degree  # noqa: E402
from micut.reductions import (  # noqa: E402
    brute_force_mis,
    gadget_case_table,
    gadget_table_matches,
    is_complete,
    recover_assignment,
    recover_mis,
    reduce_2sat_to_micut,
    reduce_mis_to_micut,
)
from micut.sat import (  # noqa: E402
    brute_force_opt,
    evaluate,
    majority_heuristic,
    max_clauses,
    preprocess,
    random_instance,
)
from micut.solvers import exact_micut, iter_mis_masks  # noqa: E402

SEED = 20240
N_SAT_INSTANCES = 120
LIMIT = 64


_write = print


@pytest.fixture(autouse=True)
def _criterion_output(pytestconfig):
    global _write
    reporter = pytestconfig.pluginmanager.getplugin("terminalreporter")
    if reporter is not None:
        _write = lambda line: (reporter.ensure_newline(), reporter.write_line(line))
    yield


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
    if detail:
        line += f" ({detail})"
    _write(line)
    assert ok, line


def residual_instances(count, seed, max_n=6, max_m=10):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        m = rng.randint(1, min(max_m, max_clauses(n)))
        res = preprocess(random_instance(n, m, seed=rng.randrange(2**32))).residual
        if res.n:
            out.append(res)
    return out


@functools.lru_cache(maxsize=None)
def sat_cases():
    """Per instance: reduction, both optima, and (v, u) for every maximal independent set."""
    cases = []
    for inst in residual_instances(N_SAT_INSTANCES, SEED):
        red = reduce_2sat_to_micut(inst)
        opt_sat = brute_force_opt(inst)[1]
        opt_graph = exact_micut(red.graph, limit=LIMIT).value
        pairs = []
        for mask, v in iter_mis_masks(red.graph):
            c = [x for x in red.graph.nodes if mask >> x & 1]
            u = evaluate(inst, recover_assignment(inst, c, check=False))
            pairs.append((v, u))
        cases.append((inst, red, opt_sat, opt_graph, pairs))
    return cases


def test_01_eq2_identity():
    cases = sat_cases()
    bad = [c[0] for c in cases if c[3] != c[0].n + 3 * c[0].m + c[2]]
    report(1, "OPT(f(I)) = n + 3m + OPT(I)", not bad and len(cases) >= 100,
           f"{len(cases)} instances, max graph {max(c[1].graph.node_count for c in cases)} nodes, {len(bad)} failures")


def test_02_eq1_inequality():
    cases = sat_cases()
    total = sum(len(c[4]) for c in cases)
    bad = sum(1 for inst, _, _, _, pairs in cases for v, u in pairs if v > inst.n + 3 * inst.m + u)
    report(2, "v(f(I),C) <= n + 3m + u(I,g(C)) for every maximal independent C", bad == 0,
           f"{total} sets enumerated, {bad} violations")


def test_03_beta_one():
    cases = sat_cases()
    bad = sum(1 for _, _, os, og, pairs in cases for v, u in pairs if os - u > og - v)
    report(3, "OPT(I) - u <= OPT(f(I)) - v (beta = 1)", bad == 0, f"{bad} violations")


def test_04_alpha_21():
    cases = sat_cases()
    bad = [c for c in cases if c[3] > 21 * c[2]]
    worst = max(Fraction(c[3], c[2]) for c in cases)
    report(4, "OPT(f(I)) <= 21 OPT(I)", not bad, f"max ratio {float(worst):.3f}")


def test_05_construction_counts():
    cases = sat_cases()
    ok = all(
        red.graph.node_count == 2 * inst.n + 3 * inst.m
        and red.graph.edge_count == inst.n + 5 * inst.m
        and max_degree(red.graph) <= 4
        for inst, red, *_ in cases
    )
    report(5, "2n+3m nodes, n+5m edges, max degree <= 4", ok)


def test_06_gadget_case_table():
    table = gadget_case_table()
    summary = {k: sorted(v["contributions"]) for k, v in table.items()}
    report(6, "gadget contributions match the four-case analysis", gadget_table_matches(table), str(summary))


def test_07_theorem1_recovery():
    rng = random.Random(SEED + 7)
    checked = bad = 0
    while checked < 60:
        n = rng.randint(2, 6)
        g = gnp_graph(n, rng.random(), seed=rng.randrange(2**32))
        if is_complete(g):
            continue
        checked += 1
        sol = exact_micut(reduce_mis_to_micut(g), limit=LIMIT)
        if len(recover_mis(g, sol)) != len(brute_force_mis(g)):
            bad += 1
    report(7, "|recovered set| = maximum independent set size", bad == 0, f"{checked} graphs")


def _param_sets(rng):
    out = [GameParams(0, 1, 1, 0)]
    while len(out) < 3:
        aa, bb = rng.randint(-3, 3), Fraction(rng.randint(-6, 6), 2)
        out.append(GameParams(aa, bb + Fraction(rng.randint(1, 8), rng.randint(1, 3)), aa + rng.randint(1, 5), bb))
    return out


def test_08_potential_equivalence():
    rng = random.Random(SEED + 8)
    profiles = bad = equilibria = 0
    sizes = [12, 12, 12] + [rng.randint(4, 11) for _ in range(19)]
    for n in sizes:
        g = gnp_graph(n, rng.uniform(0.15, 0.6), seed=rng.randrange(2**32))
        for p in _param_sets(rng):
            for code in range(1 << n):
                s = "".join("B" if code >> k & 1 else "A" for k in range(n))
                profiles += 1
                nash = is_nash(g, s, p)
                equilibria += nash
                if nash != is_local_min_frustration(g, s, p):
                    bad += 1
    report(8, "is_nash <=> local minimum of frustration", bad == 0,
           f"{len(sizes)} graphs x 3 parameter sets, {profiles} profiles, {equilibria} equilibria")


def _without_isolated(g, rng):
    edges = set(g.edges)
    for v in g.nodes:
        if not any(v in e for e in edges):
            w = rng.choice([u for u in g.nodes if u != v])
            edges.add((min(v, w), max(v, w)))
    return Graph(g.node_count, frozenset(edges))


def test_09_polar_characterization():
    rng = random.Random(SEED + 9)
    graphs = bad = equilibria = 0
    for n in [10, 10, 10] + [rng.randint(2, 9) for _ in range(27)]:
        g = _without_isolated(gnp_graph(n, rng.uniform(0.1, 0.7), seed=rng.randrange(2**32)), rng)
        p = polar_params(g)
        graphs += 1
        for code in range(1 << n):
            s = "".join("B" if code >> k & 1 else "A" for k in range(n))
            nash = is_nash(g, s, p)
            equilibria += nash
            if nash != is_polar_equilibrium(g, s):
                bad += 1
    report(9, "polar params: is_nash <=> B players form a maximal independent set", bad == 0,
           f"{graphs} graphs without isolated nodes, n <= 10, {equilibria} equilibria")


def test_10_dynamics():
    rng = random.Random(SEED + 10)
    bad = 0
    worst = 0.0
    for run in range(100):
        n = rng.randint(2, 30)
        g = gnp_graph(n, rng.uniform(0.05, 0.5), seed=rng.randrange(2**32))
        p = GameParams.from_relative(rng.randint(1, 6), rng.randint(1, 6))
        schedule = ("roundrobin", "random")[run % 2]
        trace = best_response_dynamics(g, random_profile(n, rng), p, schedule, seed=rng.randrange(2**32))
        seq = [trace.initial_frustration] + trace.frustration_sequence
        ok = (all(a > b for a, b in zip(seq, seq[1:]))
              and seq[-1] == frustration(g, trace.final_profile, p)
              and is_nash(g, trace.final_profile, p))
        bad += not ok
        nm2 = n * g.edge_count ** 2
        if nm2:
            worst = max(worst, trace.step_count / nm2)
    report(10, "dynamics terminate, strictly descend, end at Nash", bad == 0,
           f"100 runs, max steps/(n m^2) = {worst:.4f}, informational")


def test_11_majority_bound():
    instances = residual_instances(150, SEED + 11)
    bad = [i for i in instances if evaluate(i, majority_heuristic(i)) < i.n // 2]
    report(11, "majority assignment satisfies >= floor(n/2) clauses", not bad, f"{len(instances)} instances")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
