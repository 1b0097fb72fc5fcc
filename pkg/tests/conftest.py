"""Shared fixtures: the worked-example graphs and random instance generators."""

from __future__ import annotations

import numpy as np
import pytest

from embfair import AttributeTable, EmbeddingMatrix, Graph


@pytest.fixture
def four_node_chain():
    """Edges A-B, A-C, C-D with coordinates giving score1(A,1)=17, score1(A,2)=81."""
    g = Graph.from_edge_ids([("A", "B"), ("A", "C"), ("C", "D")])
    y = EmbeddingMatrix(np.array([[0, 0], [4, 0], [0, 1], [8, 0]], dtype=float))
    return g, y


@pytest.fixture
def five_node_race():
    """Five nodes labeled (w,w,w,b,b) whose top-1 recommendations are
    rho(1)={2}, rho(2)={4}, rho(3)={4}, rho(4)={2}, rho(5)={2}.
    """
    g = Graph.from_edge_ids(
        [("1", "5"), ("1", "4"), ("3", "5"), ("4", "5")], isolated=["2"]
    )
    coords = {"1": (1, 0.5), "2": (0, 1), "3": (-1, 0.9), "4": (0, 2), "5": (2, 0.3)}
    values = np.array([coords[i] for i in g.node_ids], dtype=float)
    labels = {"1": "w", "2": "w", "3": "w", "4": "b", "5": "b"}
    attrs = AttributeTable("race", [labels[i] for i in g.node_ids])
    return g, EmbeddingMatrix(values), attrs


@pytest.fixture
def three_disconnected():
    """Disconnected A, B, C with B most similar to A, then C; labels g1/g1/g2."""
    g = Graph.from_edge_ids([], isolated=["A", "B", "C"])
    y = EmbeddingMatrix(np.array([[1, 0], [2, 0.1], [1.5, -0.1]]))
    attrs = AttributeTable("group", ["g1", "g1", "g2"])
    return g, y, attrs


def random_instance(rng: np.random.Generator, max_n: int = 16, max_d: int = 4):
    """A random simple graph + embedding + binary labels for oracle checks."""
    n = int(rng.integers(2, max_n + 1))
    p = float(rng.uniform(0.05, 0.7))
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    ids = [str(i) for i in range(n)]
    g = Graph(ids, edges)
    d = int(rng.integers(1, max_d + 1))
    y = EmbeddingMatrix(rng.normal(size=(n, d)))
    labels = [str(int(b)) for b in rng.integers(0, 2, size=n)]
    attrs = AttributeTable("bin", labels)
    return g, y, attrs
