"""Network summary statistics and the force-directed overview layout.

The summary backs the overview's statistics panel; the spring layout
positions nodes for drawing; the salient-edge filter keeps only the
longest rendered edges so dense networks stay legible.
"""

import numpy as np

from embfair import Graph, filter_salient_edges, spring_layout, summarize

rng = np.random.default_rng(14)

# Two dense communities with a few cross links.
nodes = [f"n{i}" for i in range(30)]
edges = []
for lo, hi in ((0, 15), (15, 30)):
    for u in range(lo, hi):
        for v in range(u + 1, hi):
            if rng.random() < 0.5:
                edges.append((u, v))
edges += [(2, 20), (7, 25), (11, 16)]
g = Graph(nodes, edges)

report = summarize(g, bin_count=6)
print(f"n={report.n}  m={report.m}")
print(f"density            {report.density:.3f}")
print(f"average degree     {report.average_degree:.2f}")
print(f"clustering         {report.clustering_coefficient:.3f}")
print(f"triangles          {report.triangle_count}")
print(f"components         {report.component_count}")
print("degree histogram:")
for lo, hi, count in report.degree_histogram:
    print(f"  [{lo:5.2f}, {hi:5.2f}]  {'#' * count}")

layout = spring_layout(g, seed=3, iterations=150)
print("\nlayout is deterministic:",
      np.array_equal(layout.positions, spring_layout(g, seed=3, iterations=150).positions))

kept = filter_salient_edges(g, layout, keep_fraction=0.10)
print(f"salient edges kept: {len(kept)} of {g.m} (top 10% by rendered length)")
lengths = np.linalg.norm(
    layout.positions[kept[:, 0]] - layout.positions[kept[:, 1]], axis=1
)
print(f"kept lengths range: {lengths.min():.3f} .. {lengths.max():.3f}")
# Cross-community edges are long in the layout, so they survive the filter.
cross = [(a, b) for a, b in kept.tolist() if (a < 15) != (b < 15)]
print(f"cross-community edges among kept: {len(cross)}")
