"""Simple undirected graphs, independence predicates, cut counting and DIMACS I/O.

Nodes are numbered ``1..node_count``. Node sets are plain Python sets (any
iterable of node indices is accepted).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import GraphFormatError


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    node_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.node_count < 0:
            raise ValueError("node_count must be nonnegative")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            for w in (u, v):
                if not 1 <= w <= self.node_count:
                    raise ValueError(f"endpoint {w} outside 1..{self.node_count}")
            normalized.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        return cls(node_count, frozenset(edges))

    @property
    def nodes(self) -> range:
        return range(1, self.node_count + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples; index 0 is an unused placeholder."""
        adj: list[list[int]] = [[] for _ in range(self.node_count + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks (bit ``v`` set for neighbor ``v``)."""
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for v in nbrs:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return not any(u in s and v in s for u, v in g.edges)


def is_maximal_independent(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    if not is_independent(g, s):
        return False
    return all(any(w in s for w in g.neighbors(v)) for v in g.nodes if v not in s)


def cut_size(g: Graph, s: Iterable[int]) -> int:
    s = set(s)
    return sum((u in s) != (v in s) for u, v in g.edges)


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency[1:]), default=0)


def complement(g: Graph, s: Iterable[int]) -> set[int]:
    s = set(s)
    return {v for v in g.nodes if v not in s}


# --- DIMACS edge format -------------------------------------------------------

def parse_graph(text: str | bytes) -> Graph:
    """Parse a DIMACS edge-format graph.

    Duplicate edges (in either orientation) are merged. The declared edge
    count in the header is not enforced, since merging can legitimately
    shrink it.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError("malformed header, expected 'p edge <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError("non-integer header field", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative header field", lineno)
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("edge line needs two endpoints", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer endpoint", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at node {u}", lineno)
            edges.add(_edge(u, v))
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    return Graph(n, frozenset(edges))


def serialize_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" if c else "c" for c in comments]
    lines.append(f"p edge {g.node_count} {g.edge_count}")
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_graph(g, comments))


# --- small generators ---------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 nodes")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star_graph(leaves: int) -> Graph:
    """Star with center 1 and leaves ``2..leaves+1``."""
    return Graph.from_edges(leaves + 1, ((1, v) for v in range(2, leaves + 2)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def gnp_graph(n: int, p: float, seed: int = 0) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} not in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Graph.from_edges(n, edges)
