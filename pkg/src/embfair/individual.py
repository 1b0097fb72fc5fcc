"""Individual fairness scores from k-hop neighborhood embedding distances.

A node's raw score sums the squared embedding distances to every node in
its k-hop neighborhood. Normalization divides by degree, then by the
global maximum, so normalized scores land in [0, 1]. Isolated nodes score
0 under all three variants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import EmbeddingMatrix
from .errors import InvalidArgument, InvalidData
from .graph import Graph, k_hop_neighborhood

__all__ = ["IndividualScoreTable", "individual_score", "individual_score_table"]


@dataclass(frozen=True)
class IndividualScoreTable:
    """Per-node raw, degree-normalized, and max-normalized scores for one k."""

    hops: int
    raw: np.ndarray
    degree_normalized: np.ndarray
    normalized: np.ndarray


def _check_alignment(g: Graph, y: EmbeddingMatrix) -> None:
    if y.n != g.n:
        raise InvalidData(
            f"embedding has {y.n} rows but graph has {g.n} nodes"
        )


def individual_score(g: Graph, y: EmbeddingMatrix, u: int, k: int) -> float:
    """Sum of squared distances from u to every node within k hops."""
    _check_alignment(g, y)
    members = k_hop_neighborhood(g, u, k).members
    if len(members) == 0:
        return 0.0
    diff = y.values[members] - y.values[u]
    return float(np.einsum("ij,ij->", diff, diff))


def _reach_pattern(g: Graph, k: int):
    """Sparse 0/1 matrix whose row u marks the k-hop neighborhood of u."""
    a = g.adjacency_csr()
    reach = a.copy()
    step = a
    for _ in range(k - 1):
        if step.nnz == 0:
            break
        step = step @ a
        step.data[:] = 1.0
        reach = reach + step
        reach.data[:] = 1.0
    reach.setdiag(0)
    reach.eliminate_zeros()
    return reach


def individual_score_table(g: Graph, y: EmbeddingMatrix, k: int) -> IndividualScoreTable:
    """Raw, degree-normalized, and normalized scores for every node.

    Uses the expansion  sum_v ||Y[u]-Y[v]||^2  =  |N| ||Y[u]||^2
    - 2 Y[u].(sum_v Y[v]) + sum_v ||Y[v]||^2  over each neighborhood,
    evaluated with one sparse reachability pattern for the whole graph.
    """
    if k < 1:
        raise InvalidArgument(f"hop count must be >= 1, got {k}")
    _check_alignment(g, y)
    if g.n == 0:
        empty = np.zeros(0)
        return IndividualScoreTable(k, empty, empty.copy(), empty.copy())

    reach = _reach_pattern(g, k)
    counts = np.asarray(reach.sum(axis=1)).ravel()
    q = y.sq_norms()
    neighbor_sums = reach @ y.values
    neighbor_q = reach @ q
    raw = counts * q - 2.0 * np.einsum("ij,ij->i", y.values, neighbor_sums) + neighbor_q
    raw = np.maximum(raw, 0.0)  # guard tiny negative round-off

    deg = g.degrees().astype(np.float64)
    degree_normalized = np.divide(raw, deg, out=np.zeros(g.n), where=deg > 0)
    peak = degree_normalized.max() if g.n else 0.0
    if peak > 0:
        normalized = degree_normalized / peak
    else:
        normalized = np.zeros(g.n)
    return IndividualScoreTable(
        hops=k, raw=raw, degree_normalized=degree_normalized, normalized=normalized
    )
