import itertools

import pytest
from hypothesis import strategies as st

from micut.graph import Graph, complete_graph, cycle_graph, is_maximal_independent, path_graph, star_graph
from micut.sat import evaluate, max_clauses, random_instance


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def triangle():
    return complete_graph(3)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k14():
    return star_graph(4)


@st.composite
def graphs(draw, min_nodes=0, max_nodes=8):
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def sat_instances(draw, max_n=6, max_m=10):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, min(max_m, max_clauses(n))))
    return random_instance(n, m, seed=draw(st.integers(0, 2**32 - 1)))


# --- oracles: deliberately naive, sharing no code with the solvers ---

def all_maximal_independent_sets(g):
    """Every maximal independent set, by scanning all 2**n subsets."""
    out = []
    for k in range(g.node_count + 1):
        for cand in itertools.combinations(g.nodes, k):
            if is_maximal_independent(g, cand):
                out.append(cand)
    return out


def naive_cut(g, s):
    s = set(s)
    return len([1 for (u, v) in g.edges if (u in s) ^ (v in s)])


def naive_sat_opt(inst):
    best = None
    for values in itertools.product([False, True], repeat=inst.n):
        score = evaluate(inst, values)
        if best is None or score > best[1]:
            best = (values, score)
    return best


def all_profiles(n):
    return ["".join(p) for p in itertools.product("AB", repeat=n)]
