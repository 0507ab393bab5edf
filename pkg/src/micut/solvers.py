"""Solvers for the maximum independent cut problem.

Given a graph, pick a maximal independent set C maximizing the number of
edges between C and the rest. Because C is independent, that number is just
the sum of the degrees of its members.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .errors import ExhaustiveLimitError
from .game import b_set, best_response_dynamics, polar_params, random_profile
from .graph import Graph, cut_size

DEFAULT_EXACT_LIMIT = 30


@dataclass(frozen=True)
class IndependentCutSolution:
    set: tuple[int, ...]
    value: int
    algorithm: str = ""
    seed: int | None = None

    def to_json(self) -> dict:
        out = {"set": list(self.set), "value": self.value, "algorithm": self.algorithm}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def _nodes_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def iter_mis_masks(g: Graph) -> Iterator[tuple[int, int]]:
    """Yield ``(mask, cut_value)`` for every maximal independent set of ``g``.

    Backtracking on the lowest-index node ``u`` that is still uncovered:
    either ``u`` joins the set, or it is excluded and one of its free
    neighbors must join to cover it. Each set is produced exactly once.
    """
    closed = [m | (1 << v) for v, m in enumerate(g.neighbor_masks)]
    deg = [len(a) for a in g.adjacency]
    everything = sum(1 << v for v in g.nodes)

    def rec(chosen, free, excluded, value):
        if not free:
            if not excluded:
                yield chosen, value
            return
        pending = free | excluded
        u = (pending & -pending).bit_length() - 1
        branch = free & closed[u]
        while branch:
            bit = branch & -branch
            branch ^= bit
            v = bit.bit_length() - 1
            yield from rec(chosen | bit, free & ~closed[v], excluded & ~closed[v], value + deg[v])
            free &= ~bit
            excluded |= bit

    yield from rec(0, everything, 0, 0)


def maximal_independent_sets(g: Graph) -> Iterator[tuple[int, ...]]:
    for mask, _ in iter_mis_masks(g):
        yield _nodes_of(mask)


def _check_nonempty(g: Graph, name: str) -> None:
    if g.node_count < 1:
        raise ValueError(f"{name} needs a graph with at least one node")


def exact_micut(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> IndependentCutSolution:
    """Optimal independent cut by full enumeration; ties -> lexicographically smallest set."""
    _check_nonempty(g, "exact_micut")
    if g.node_count > limit:
        raise ExhaustiveLimitError("exact_micut", g.node_count, limit)
    best_value = -1
    best_set: tuple[int, ...] = ()
    for mask, value in iter_mis_masks(g):
        if value < best_value:
            continue
        members = _nodes_of(mask)
        if value > best_value or members < best_set:
            best_value, best_set = value, members
    return IndependentCutSolution(best_set, best_value, "exact")


def greedy_micut(g: Graph) -> IndependentCutSolution:
    """Repeatedly take the free node with most free neighbors (ties -> smallest index)."""
    _check_nonempty(g, "greedy_micut")
    free = set(g.nodes)
    chosen = []
    while free:
        v = min(free, key=lambda x: (-sum(w in free for w in g.neighbors(x)), x))
        chosen.append(v)
        free.discard(v)
        free.difference_update(g.neighbors(v))
    chosen.sort()
    return IndependentCutSolution(tuple(chosen), cut_size(g, chosen), "greedy")


def _complete_to_maximal(g: Graph, c: set[int]) -> set[int]:
    # only isolated A players can be left uncovered by a polar equilibrium
    c = set(c)
    for v in g.nodes:
        if v not in c and not any(w in c for w in g.neighbors(v)):
            c.add(v)
    return c


def local_search_micut(g: Graph, seed: int = 0, restarts: int = 10) -> IndependentCutSolution:
    """Best-response dynamics under polar payoffs from random starts.

    Equilibria of the polar game are exactly the maximal independent B sets,
    so every restart lands on a feasible solution.
    """
    _check_nonempty(g, "local_search_micut")
    if restarts < 1:
        raise ValueError("restarts must be positive")
    rng = random.Random(seed)
    params = polar_params(g)
    best: tuple[int, tuple[int, ...]] | None = None
    for _ in range(restarts):
        start = random_profile(g.node_count, rng)
        trace = best_response_dynamics(g, start, params, "random", seed=rng.randrange(2**32))
        members = tuple(sorted(_complete_to_maximal(g, b_set(trace.final_profile))))
        key = (-cut_size(g, members), members)
        if best is None or key < best:
            best = key
    return IndependentCutSolution(best[1], -best[0], "local", seed)
