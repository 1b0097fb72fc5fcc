"""Tour of the graph type and its topology queries.

Builds a small two-community network and walks through degrees, k-hop
neighborhoods, ego subgraphs, connected components, and clustering.
"""

import numpy as np

from embfair import (
    Graph,
    clustering_coefficient,
    connected_components,
    ego_subgraph,
    induced_subgraph,
    k_hop_neighborhood,
    triangle_count,
    NodeSet,
)

# Two triangles joined by a single bridge edge, plus one isolated node.
edges = [
    ("a1", "a2"), ("a2", "a3"), ("a1", "a3"),
    ("b1", "b2"), ("b2", "b3"), ("b1", "b3"),
    ("a3", "b1"),
]
g = Graph.from_edge_ids(edges, isolated=["loner"])
print(f"graph: {g.n} nodes, {g.m} edges")

print("\ndegrees:")
for u in range(g.n):
    print(f"  {g.id_of(u):>6}: {g.degree(u)}")

# k-hop neighborhoods grow monotonically with k and carry hop distances.
a1 = g.index_of("a1")
for k in (1, 2, 3):
    hood = k_hop_neighborhood(g, a1, k)
    reached = {g.id_of(v): int(h) for v, h in zip(hood.members, hood.hops)}
    print(f"\n{k}-hop neighborhood of a1: {reached}")

# The ego subgraph of the bridge endpoint contains both communities at k=2.
sub = ego_subgraph(g, g.index_of("a3"), 2)
print(f"\nego(a3, 2): nodes={sorted(sub.graph.node_ids)}, edges={sub.graph.m}")

# Induced subgraphs keep only internal edges.
members = NodeSet(members=np.array(sorted([g.index_of("a1"), g.index_of("b1")])))
cut = induced_subgraph(g, members)
print(f"induced on {{a1, b1}}: {cut.graph.m} edges (they are not adjacent)")

count, labels = connected_components(g)
print(f"\ncomponents: {count} (the isolated node forms its own)")
print(f"triangles: {triangle_count(g)}")
print(f"average local clustering: {clustering_coefficient(g):.4f}")
