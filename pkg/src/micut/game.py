"""The networked anti-coordination game.

Every edge hosts a symmetric 2x2 game with actions A and B; a player picks
one action for all her games and collects the sum of the matrix entries.
Profiles are strings over ``"AB"`` (node 1 first). Payoffs are exact: ints
or ``fractions.Fraction``; floats are rejected.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from .graph import Graph, is_maximal_independent

Number = int | Fraction


def exact(x) -> Number:
    """Coerce to an exact rational; accepts ints, Fractions and strings like ``"3/2"``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not payoffs")
    if isinstance(x, int):
        return x
    if isinstance(x, (Fraction, Rational)):
        x = Fraction(x)
    elif isinstance(x, str):
        x = Fraction(x.strip())
    else:
        raise TypeError(f"payoff {x!r} must be an int, Fraction or rational string")
    return int(x) if x.denominator == 1 else x


def to_json_number(x: Number):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class GameParams:
    """Payoff matrix entries; ``pi_XY`` is what an X player earns against a Y neighbor."""

    pi_AA: Number
    pi_AB: Number
    pi_BA: Number
    pi_BB: Number

    def __post_init__(self):
        for name in ("pi_AA", "pi_AB", "pi_BA", "pi_BB"):
            object.__setattr__(self, name, exact(getattr(self, name)))
        if not (self.pi_BA > self.pi_AA and self.pi_AB > self.pi_BB):
            raise ValueError("anti-coordination needs pi_BA > pi_AA and pi_AB > pi_BB")

    @classmethod
    def from_relative(cls, pi_A, pi_B) -> "GameParams":
        return cls(pi_AA=0, pi_AB=pi_A, pi_BA=pi_B, pi_BB=0)

    @property
    def pi_A(self) -> Number:
        """Gain of the A player at (A, B) over deviating to B."""
        return self.pi_AB - self.pi_BB

    @property
    def pi_B(self) -> Number:
        """Gain of the B player at (A, B) over deviating to A."""
        return self.pi_BA - self.pi_AA

    def entry(self, own: str, other: str) -> Number:
        return getattr(self, f"pi_{own}{other}")


def flip(action: str) -> str:
    return "B" if action == "A" else "A"


def _check_profile(g: Graph, s: str) -> None:
    if len(s) != g.node_count or set(s) - {"A", "B"}:
        raise ValueError(f"profile must be a string over 'AB' of length {g.node_count}")


def profile_from_b_set(n: int, b_set: Iterable[int]) -> str:
    b_set = set(b_set)
    return "".join("B" if v in b_set else "A" for v in range(1, n + 1))


def b_set(s: str) -> set[int]:
    return {i for i, a in enumerate(s, start=1) if a == "B"}


def player_payoff(g: Graph, s: str, i: int, p: GameParams, action: str | None = None) -> Number:
    """Payoff of player ``i``; ``action`` overrides her own action (for deviation checks)."""
    own = s[i - 1] if action is None else action
    return sum((p.entry(own, s[j - 1]) for j in g.neighbors(i)), 0)


def same_action_edges(g: Graph, s: str) -> tuple[int, int]:
    """(n_AA, n_BB)."""
    n_aa = n_bb = 0
    for u, v in g.edges:
        if s[u - 1] == s[v - 1]:
            if s[u - 1] == "A":
                n_aa += 1
            else:
                n_bb += 1
    return n_aa, n_bb


def frustration(g: Graph, s: str, p: GameParams) -> Number:
    n_aa, n_bb = same_action_edges(g, s)
    return p.pi_A * n_bb + p.pi_B * n_aa


def is_nash(g: Graph, s: str, p: GameParams) -> bool:
    """No player strictly gains by switching her action."""
    _check_profile(g, s)
    for i in g.nodes:
        if player_payoff(g, s, i, p, flip(s[i - 1])) > player_payoff(g, s, i, p):
            return False
    return True


def _frustration_delta(g: Graph, s: str, i: int, p: GameParams) -> Number:
    # change in frustration if i flips: her same-action edges vanish,
    # edges to the other camp become same-action edges
    mine = s[i - 1]
    same = sum(s[j - 1] == mine for j in g.neighbors(i))
    other = g.degree(i) - same
    if mine == "A":
        return other * p.pi_A - same * p.pi_B
    return other * p.pi_B - same * p.pi_A


def is_local_min_frustration(g: Graph, s: str, p: GameParams) -> bool:
    _check_profile(g, s)
    return all(_frustration_delta(g, s, i, p) >= 0 for i in g.nodes)


def is_polar_equilibrium(g: Graph, s: str) -> bool:
    """B players form a maximal independent set."""
    _check_profile(g, s)
    return is_maximal_independent(g, b_set(s))


def polar_params(g: Graph, pi_B=1) -> GameParams:
    """Parameters with ``pi_A = (m + 1) * pi_B``.

    Then a single B-B edge outweighs all A-A edges together, so frustration
    minimizers have independent B sets and maximize the cut they induce.
    """
    pi_B = exact(pi_B)
    if pi_B <= 0:
        raise ValueError("pi_B must be positive")
    return GameParams.from_relative((g.edge_count + 1) * pi_B, pi_B)


# --- best-response dynamics ---------------------------------------------------

SCHEDULES = ("roundrobin", "random")


@dataclass
class DynamicsTrace:
    step_count: int
    frustration_sequence: list[Number]
    final_profile: str
    initial_frustration: Number = 0
    moves: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "steps": self.step_count,
            "frustration_sequence": [to_json_number(x) for x in self.frustration_sequence],
            "final_profile": self.final_profile,
        }


def _improves(g: Graph, s: list[str], i: int, p: GameParams) -> bool:
    own = s[i - 1]
    alt = flip(own)
    now = then = 0
    for j in g.neighbors(i):
        other = s[j - 1]
        now += p.entry(own, other)
        then += p.entry(alt, other)
    return then > now


def best_response_dynamics(
    g: Graph,
    s0: str,
    p: GameParams,
    schedule: str = "roundrobin",
    seed: int = 0,
    max_steps: int | None = None,
) -> DynamicsTrace:
    """Asynchronous best-response dynamics until no player can strictly improve.

    ``roundrobin`` sweeps players 1..n cyclically and stops after a full
    sweep without a move; ``random`` picks uniformly among the players that
    currently have a strictly improving switch.
    """
    _check_profile(g, s0)
    if schedule not in SCHEDULES:
        raise ValueError(f"unknown schedule {schedule!r}; choose from {SCHEDULES}")
    s = list(s0)
    phi = frustration(g, s0, p)
    trace = DynamicsTrace(0, [], s0, initial_frustration=phi)
    rng = random.Random(seed)
    n = g.node_count

    def move(i):
        nonlocal phi
        phi += _frustration_delta(g, "".join(s), i, p)
        s[i - 1] = flip(s[i - 1])
        trace.moves.append(i)
        trace.frustration_sequence.append(phi)
        trace.step_count += 1

    if schedule == "roundrobin":
        idle = 0
        i = 0
        while idle < n:
            i = i % n + 1
            if _improves(g, s, i, p):
                move(i)
                idle = 0
            else:
                idle += 1
            if max_steps is not None and trace.step_count >= max_steps:
                break
    else:
        while True:
            candidates = [i for i in g.nodes if _improves(g, s, i, p)]
            if not candidates:
                break
            move(rng.choice(candidates))
            if max_steps is not None and trace.step_count >= max_steps:
                break
    trace.final_profile = "".join(s)
    return trace


def random_profile(n: int, rng: random.Random) -> str:
    return "".join(rng.choice("AB") for _ in range(n))
