"""Whole-network statistical summary backing the overview panel."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, clustering_coefficient, connected_components, triangle_count

__all__ = ["SummaryReport", "summarize"]


@dataclass(frozen=True)
class SummaryReport:
    n: int
    m: int
    density: float
    average_degree: float
    clustering_coefficient: float
    triangle_count: int
    component_count: int
    degree_histogram: tuple[tuple[float, float, int], ...]  # (lo, hi, count)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "density": self.density,
            "average_degree": self.average_degree,
            "clustering_coefficient": self.clustering_coefficient,
            "triangle_count": self.triangle_count,
            "component_count": self.component_count,
            "degree_histogram": [
                {"lo": lo, "hi": hi, "count": c} for lo, hi, c in self.degree_histogram
            ],
        }


def summarize(g: Graph, bin_count: int = 20) -> SummaryReport:
    """Summary statistics plus an equal-width degree histogram.

    Bins cover [0, max degree] with the last bin closed, so counts always
    sum to n. An empty graph yields a zero report with no histogram.
    """
    if g.n == 0:
        return SummaryReport(0, 0, 0.0, 0.0, 0.0, 0, 0, ())
    degrees = g.degrees()
    max_deg = int(degrees.max())
    if max_deg == 0:
        hist = ((0.0, 0.0, g.n),)
    else:
        counts, edges = np.histogram(degrees, bins=bin_count, range=(0, max_deg))
        hist = tuple(
            (float(edges[i]), float(edges[i + 1]), int(counts[i]))
            for i in range(len(counts))
        )
    density = 2.0 * g.m / (g.n * (g.n - 1)) if g.n > 1 else 0.0
    return SummaryReport(
        n=g.n,
        m=g.m,
        density=density,
        average_degree=2.0 * g.m / g.n,
        clustering_coefficient=clustering_coefficient(g),
        triangle_count=triangle_count(g),
        component_count=connected_components(g)[0],
        degree_histogram=hist,
    )
