"""Group fairness over top-k recommendations.

Every node is assigned the k most dot-product-similar nodes it is not
already connected to. Group fairness asks whether those recommendation
lists represent each sensitive-attribute value evenly: a share of 1/|Z|
per value is the equal-representation ideal.
"""

import numpy as np

from embfair import (
    AttributeTable,
    EmbeddingMatrix,
    Graph,
    attribute_bias,
    group_score_table,
    network_bias,
    recommended_set,
    restricted_set,
    share,
    user_score,
)

# Five nodes; 1-3 carry label "w", 4-5 carry label "b". Node 2 has no edges.
g = Graph.from_edge_ids(
    [("1", "5"), ("1", "4"), ("3", "5"), ("4", "5")], isolated=["2"]
)
coords = {"1": (1, 0.5), "2": (0, 1), "3": (-1, 0.9), "4": (0, 2), "5": (2, 0.3)}
y = EmbeddingMatrix(np.array([coords[i] for i in g.node_ids]))
labels = {"1": "w", "2": "w", "3": "w", "4": "b", "5": "b"}
attrs = AttributeTable("race", [labels[i] for i in g.node_ids])

print("top-1 recommendation (most similar non-connected node):")
for node_id in sorted(g.node_ids):
    r = recommended_set(g, y, g.index_of(node_id), 1)
    items = [g.id_of(v) for v in r.items]
    only_b = [g.id_of(v) for v in restricted_set(r, attrs, "b").items]
    print(
        f"  rho({node_id}) = {items}   restricted to b: {only_b}"
        f"   b-share = {share(r, attrs, 'b'):.0%}"
        f"   score_2(b) = {user_score(r, attrs, 'b'):+.1f}"
    )

print("\naggregates for z = 'b' at k = 1:")
print(f"  attribute bias: {attribute_bias(g, y, attrs, 1, 'b'):.3f}")
nb = network_bias(g, y, attrs, 1)
print(f"  network bias (variance of group rates): {nb.bias:.5f}")
for pair, rate in sorted(nb.per_group.items()):
    print(f"    P(G[{pair[0]},{pair[1]}]) = {rate:.4f}")

# One call bundles the per-node scores with both aggregates.
table = group_score_table(g, y, attrs, 1, "b")
by_id = {g.id_of(u): round(float(s), 2) for u, s in enumerate(table.scores)}
print("\nscore table:", {i: by_id[i] for i in sorted(by_id)})
