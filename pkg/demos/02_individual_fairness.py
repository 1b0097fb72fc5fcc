"""Individual fairness scores on a four-node chain.

A node is unfairly embedded when its k-hop neighbors sit far away in
embedding space. The raw score sums squared distances over the
neighborhood; dividing by degree and then by the global maximum yields a
[0, 1] score comparable across nodes.
"""

import numpy as np

from embfair import EmbeddingMatrix, Graph, individual_score, individual_score_table

# Edges A-B, A-C, C-D. D is embedded far from everyone else.
g = Graph.from_edge_ids([("A", "B"), ("A", "C"), ("C", "D")])
y = EmbeddingMatrix(np.array([
    [0.0, 0.0],   # A
    [4.0, 0.0],   # B
    [0.0, 1.0],   # C
    [8.0, 0.0],   # D
]))

a = g.index_of("A")
print("sum of squared distances from A to its neighborhood:")
print(f"  k=1 (B and C):      {individual_score(g, y, a, 1):.0f}")
print(f"  k=2 (plus D):       {individual_score(g, y, a, 2):.0f}")

print("\nper-node tables:")
for k in (1, 2):
    table = individual_score_table(g, y, k)
    print(f"  k={k}")
    for u in range(g.n):
        print(
            f"    {g.id_of(u)}: raw={table.raw[u]:7.1f}  "
            f"by-degree={table.degree_normalized[u]:7.2f}  "
            f"normalized={table.normalized[u]:.3f}"
        )

# The most unfair node at k=1 is D: its only neighbor C is 65 units away
# in squared distance and D has just that one neighbor.
table = individual_score_table(g, y, 1)
worst = int(np.argmax(table.normalized))
print(f"\nmost unfairly embedded node at k=1: {g.id_of(worst)}")
