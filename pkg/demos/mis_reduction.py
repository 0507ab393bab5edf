"""
From maximum independent set to maximum independent cut
=======================================================

Pad a graph on n nodes with a clique of n**2 nodes joined to everything.
An optimal independent cut of the padded graph never touches the clique,
and it is a maximum independent set of the original graph.
"""
from micut.graph import cycle_graph
from micut.reductions import brute_force_mis, mis_cut_value, recover_mis, reduce_mis_to_micut
from micut.solvers import exact_micut

g = cycle_graph(5)
padded = reduce_mis_to_micut(g)
print(f"original: {g.node_count} nodes, {g.edge_count} edges")
print(f"padded:   {padded.node_count} nodes, {padded.edge_count} edges")

best = exact_micut(padded, limit=64)
mis = recover_mis(g, best)
print("optimal cut", best.value, "uses nodes", best.set)
print("recovered independent set", mis, "size", len(mis))
print("brute-force maximum independent set", brute_force_mis(g))
print("cut value n^2 + deg summed over the set:", mis_cut_value(g, mis))
