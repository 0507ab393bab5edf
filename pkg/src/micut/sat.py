"""MAX-2SAT instances with at most three occurrences per literal.

A literal is a nonzero int: ``k`` stands for x_k, ``-k`` for its negation.
An assignment is a tuple of bools, ``a[k - 1]`` being the value of x_k.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ExhaustiveLimitError, PreconditionError, SatFormatError

MAX_OCCURRENCES = 3
DEFAULT_SAT_LIMIT = 20

Clause = tuple[int, int]
Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class Max2SatInstance:
    n: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.n < 0:
            raise ValueError("variable count must be nonnegative")
        for c in clauses:
            if len(c) != 2:
                raise ValueError(f"clause {c} does not have exactly two literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.n:
                    raise ValueError(f"literal {lit} references no variable in 1..{self.n}")
        for lit, k in occurrences(clauses).items():
            if k > MAX_OCCURRENCES:
                raise ValueError(f"literal {lit} occurs {k} > {MAX_OCCURRENCES} times")

    @property
    def m(self) -> int:
        return len(self.clauses)


def occurrences(clauses) -> Counter:
    return Counter(lit for c in clauses for lit in c)


def is_tautology(c: Clause) -> bool:
    return c[0] == -c[1]


def literal_value(lit: int, a: Sequence[bool]) -> bool:
    v = a[abs(lit) - 1]
    return v if lit > 0 else not v


def evaluate(inst: Max2SatInstance, a: Sequence[bool]) -> int:
    """Number of clauses with at least one true literal."""
    if len(a) != inst.n:
        raise ValueError(f"assignment has {len(a)} values for {inst.n} variables")
    return sum(literal_value(l1, a) or literal_value(l2, a) for l1, l2 in inst.clauses)


def is_residual(inst: Max2SatInstance) -> bool:
    """No tautological clause and every variable occurs in both polarities."""
    if any(is_tautology(c) for c in inst.clauses):
        return False
    occ = occurrences(inst.clauses)
    return all(occ[k] and occ[-k] for k in range(1, inst.n + 1))


# --- preprocessing ------------------------------------------------------------

@dataclass(frozen=True)
class PreprocessReport:
    removed_tautologies: int
    forced_variables: dict[int, bool]
    guaranteed_true: int
    residual: Max2SatInstance
    # variable_map[k - 1] is the original index of residual variable k
    variable_map: tuple[int, ...] = field(default=())

    def extend(self, residual_assignment: Sequence[bool]) -> Assignment:
        """Lift a residual assignment to the original variables, filling in forced values."""
        n = len(self.variable_map) + len(self.forced_variables)
        values = [False] * n
        for var, val in self.forced_variables.items():
            values[var - 1] = val
        for k, orig in enumerate(self.variable_map):
            values[orig - 1] = bool(residual_assignment[k])
        return tuple(values)

    def restrict(self, assignment: Sequence[bool]) -> Assignment:
        return tuple(bool(assignment[orig - 1]) for orig in self.variable_map)


def preprocess(inst: Max2SatInstance) -> PreprocessReport:
    """Drop tautologies and fix single-polarity variables until none remain.

    A variable whose negation never occurs is set true, one whose positive
    literal never occurs is set false (true if it does not occur at all).
    Every clause touching a fixed variable is then satisfied and removed.
    ``guaranteed_true`` counts tautologies plus those removed clauses, so the
    original objective equals the residual objective plus ``guaranteed_true``
    for any assignment that agrees with the forced values.
    """
    clauses = [c for c in inst.clauses if not is_tautology(c)]
    tautologies = inst.m - len(clauses)
    guaranteed = tautologies
    forced: dict[int, bool] = {}
    active = set(range(1, inst.n + 1))
    changed = True
    while changed:
        changed = False
        occ = occurrences(clauses)
        for var in sorted(active):
            pos, neg = occ[var], occ[-var]
            if pos and neg:
                continue
            forced[var] = neg == 0
            active.discard(var)
            kept = [c for c in clauses if var not in (abs(c[0]), abs(c[1]))]
            guaranteed += len(clauses) - len(kept)
            clauses = kept
            changed = True
            break

    variable_map = tuple(sorted(active))
    renumber = {orig: k for k, orig in enumerate(variable_map, start=1)}

    def lit(l):
        return renumber[abs(l)] if l > 0 else -renumber[abs(l)]

    residual = Max2SatInstance(len(variable_map), tuple((lit(a), lit(b)) for a, b in clauses))
    return PreprocessReport(tautologies, forced, guaranteed, residual, variable_map)


# --- exact and heuristic solvers ----------------------------------------------

def brute_force_opt(inst: Max2SatInstance, limit: int = DEFAULT_SAT_LIMIT) -> tuple[Assignment, int]:
    """Exhaustive maximum over all 2**n assignments.

    Ties go to the lexicographically smallest assignment (False < True,
    variable 1 most significant), which is the first maximum in counting
    order when variable 1 is the high bit.
    """
    n = inst.n
    if n > limit:
        raise ExhaustiveLimitError("brute_force_opt", n, limit)
    codes = np.arange(1 << n, dtype=np.int64)
    bits = [None] + [((codes >> (n - k)) & 1).astype(bool) for k in range(1, n + 1)]
    score = np.zeros(1 << n, dtype=np.int64)
    for l1, l2 in inst.clauses:
        t1 = bits[abs(l1)] if l1 > 0 else ~bits[abs(l1)]
        t2 = bits[abs(l2)] if l2 > 0 else ~bits[abs(l2)]
        score += t1 | t2
    best = int(np.argmax(score))
    assignment = tuple(bool((best >> (n - k)) & 1) for k in range(1, n + 1))
    return assignment, int(score[best])


def majority_heuristic(inst: Max2SatInstance) -> Assignment:
    """Set each variable to its more frequent polarity (ties -> True).

    On a residual instance every chosen literal occurs at least once, so at
    least n literal occurrences are true and at least n/2 clauses hold.
    """
    if not is_residual(inst):
        raise PreconditionError(
            "majority_heuristic needs a preprocessed instance "
            "(no tautologies, both polarities of every variable); run preprocess() first"
        )
    occ = occurrences(inst.clauses)
    return tuple(occ[k] >= occ[-k] for k in range(1, inst.n + 1))


# --- m2sat text format --------------------------------------------------------

def parse_instance(text: str | bytes) -> Max2SatInstance:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n = m = None
    clauses: list[Clause] = []
    seen: Counter = Counter()
    first_excess: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise SatFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "m2sat":
                raise SatFormatError("malformed header, expected 'p m2sat <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise SatFormatError("non-integer header field", lineno) from None
            if n < 0 or m < 0:
                raise SatFormatError("negative header field", lineno)
            continue
        if n is None:
            raise SatFormatError("clause before header", lineno)
        if len(parts) != 2:
            raise SatFormatError(f"clause has {len(parts)} literals, expected 2", lineno)
        try:
            c = (int(parts[0]), int(parts[1]))
        except ValueError:
            raise SatFormatError("non-integer literal", lineno) from None
        for lit in c:
            if lit == 0 or abs(lit) > n:
                raise SatFormatError(f"literal {lit} out of range 1..{n}", lineno)
        clauses.append(c)
        for lit in c:
            seen[lit] += 1
            if seen[lit] > MAX_OCCURRENCES:
                first_excess.setdefault(lit, lineno)
    if n is None:
        raise SatFormatError("missing 'p m2sat' header")
    if len(clauses) != m:
        raise SatFormatError(f"header declares {m} clauses, found {len(clauses)}")
    for lit, line in first_excess.items():
        raise SatFormatError(f"literal {lit} occurs {seen[lit]} > {MAX_OCCURRENCES} times", line)
    return Max2SatInstance(n, tuple(clauses))


def serialize_instance(inst: Max2SatInstance, comments=()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p m2sat {inst.n} {inst.m}")
    out.extend(f"{a} {b}" for a, b in inst.clauses)
    return "\n".join(out) + "\n"


def read_instance(path) -> Max2SatInstance:
    with open(path, "rb") as fh:
        return parse_instance(fh.read())


def max_clauses(n: int) -> int:
    """Most tautology-free clauses ``n`` variables admit under the occurrence bound."""
    # a lone variable can only pair a literal with itself: (x v x), (~x v ~x)
    return 2 if n == 1 else MAX_OCCURRENCES * n


def random_instance(n: int, m: int, seed: int = 0, max_tries: int = 1000) -> Max2SatInstance:
    """Random instance respecting the occurrence bound, with no tautologies.

    Literals are drawn from those with spare capacity; a draw that dead-ends
    (only tautological pairs left) restarts the whole instance.
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if m > max_clauses(n):
        raise ValueError(f"m={m} exceeds the {max_clauses(n)} tautology-free clauses n={n} variables admit")
    rng = random.Random(seed)
    literals = [l for k in range(1, n + 1) for l in (k, -k)]
    for _ in range(max_tries):
        cap = dict.fromkeys(literals, MAX_OCCURRENCES)
        clauses = []
        for _ in range(m):
            first_pool = [l for l in literals if cap[l] > 0]
            l1 = rng.choice(first_pool)
            cap[l1] -= 1
            second_pool = [l for l in literals if cap[l] > 0 and l != -l1]
            if not second_pool:
                break
            l2 = rng.choice(second_pool)
            cap[l2] -= 1
            clauses.append((l1, l2))
        if len(clauses) == m:
            return Max2SatInstance(n, tuple(clauses))
    raise ValueError(f"could not draw a valid instance with n={n}, m={m}")
