"""
Best-response dynamics in the anti-coordination game
====================================================

Players sit on the nodes of a graph and each picks A or B. Every edge is a
small game in which both players prefer to differ. Frustration counts the
weighted edges where neighbors agree; each improving move lowers it.
"""
from micut.game import (
    GameParams,
    best_response_dynamics,
    frustration,
    is_nash,
    is_polar_equilibrium,
    polar_params,
)
from micut.graph import cycle_graph

g = cycle_graph(7)

# payoffs: pi_XY is what an X player earns against a Y neighbor
p = GameParams(pi_AA=0, pi_AB=2, pi_BA=3, pi_BB=1)
print("relative payoffs  pi_A =", p.pi_A, " pi_B =", p.pi_B)

start = "AAAAAAA"
print("start", start, "frustration", frustration(g, start, p))

##############################################################################
# Round-robin sweeps: players 1..n in turn, switching whenever it strictly pays.

trace = best_response_dynamics(g, start, p, schedule="roundrobin")
print("moves by node:", trace.moves)
print("frustration after each move:", trace.frustration_sequence)
print("final", trace.final_profile, "Nash:", is_nash(g, trace.final_profile, p))

##############################################################################
# When A is worth far more than B, equilibria are exactly profiles whose
# B players form a maximal independent set.

q = polar_params(g)
print("\npolar payoffs pi_A =", q.pi_A, "pi_B =", q.pi_B)
for seed in range(3):
    t = best_response_dynamics(g, "BBBBBBB", q, schedule="random", seed=seed)
    print(f"seed {seed}: {t.final_profile}  steps {t.step_count}  "
          f"maximal independent B set: {is_polar_equilibrium(g, t.final_profile)}")
