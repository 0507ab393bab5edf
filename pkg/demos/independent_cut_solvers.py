"""
Maximum independent cut: exact, greedy and local search
=======================================================

Choose a maximal independent set C to maximize the edges leaving C.
"""
from micut.graph import gnp_graph, cycle_graph, star_graph
from micut.solvers import exact_micut, greedy_micut, local_search_micut

graphs = {
    "star K1,4": star_graph(4),
    "cycle C5": cycle_graph(5),
    "gnp(18, 0.25)": gnp_graph(18, 0.25, seed=1),
    "gnp(24, 0.15)": gnp_graph(24, 0.15, seed=2),
}

print(f"{'graph':<16}{'exact':>7}{'greedy':>8}{'local':>7}")
for name, g in graphs.items():
    ex = exact_micut(g)
    gr = greedy_micut(g)
    ls = local_search_micut(g, seed=0, restarts=20)
    print(f"{name:<16}{ex.value:>7}{gr.value:>8}{ls.value:>7}")

##############################################################################
# The exact optimum on the last graph, as a node list.

print("\noptimal set:", exact_micut(graphs["gnp(24, 0.15)"]).set)
