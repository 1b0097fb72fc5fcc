"""Embedding matrix storage, similarity kernels, and 2-D PCA projection."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument, InvalidData, NodeNotFound

__all__ = [
    "EmbeddingMatrix",
    "Projection2D",
    "sq_euclidean",
    "dot_similarity",
    "pca_project",
]


class EmbeddingMatrix:
    """An n x d real matrix; row u is the embedding of node u.

    Rows align with a graph's internal indices. All entries must be finite
    and d >= 1.
    """

    __slots__ = ("values", "n", "d", "_sq_norms")

    def __init__(self, values: np.ndarray):
        arr = np.ascontiguousarray(np.asarray(values, dtype=np.float64))
        if arr.ndim != 2:
            raise InvalidData(f"embedding matrix must be 2-D, got shape {arr.shape}")
        if arr.shape[1] < 1:
            raise InvalidData("embedding dimension must be >= 1")
        if not np.all(np.isfinite(arr)):
            raise InvalidData("embedding matrix contains non-finite entries")
        self.values = arr
        self.n, self.d = arr.shape
        self._sq_norms: np.ndarray | None = None

    def row(self, u: int) -> np.ndarray:
        return self.values[self._check(u)]

    def sq_norms(self) -> np.ndarray:
        """Cached per-row squared L2 norms."""
        if self._sq_norms is None:
            self._sq_norms = np.einsum("ij,ij->i", self.values, self.values)
        return self._sq_norms

    def _check(self, u: int) -> int:
        v = int(u)
        if not 0 <= v < self.n:
            raise NodeNotFound(f"node index {u} out of range [0, {self.n})")
        return v

    def __repr__(self) -> str:
        return f"EmbeddingMatrix(n={self.n}, d={self.d})"


def sq_euclidean(y: EmbeddingMatrix, u: int, v: int) -> float:
    """Squared L2 distance between the embeddings of nodes u and v."""
    diff = y.row(u) - y.row(v)
    return float(diff @ diff)


def dot_similarity(y: EmbeddingMatrix, u: int, v: int) -> float:
    """Inner product of the embeddings of nodes u and v."""
    return float(y.row(u) @ y.row(v))


@dataclass(frozen=True)
class Projection2D:
    """A fitted 2-D PCA projection of an embedding matrix.

    `components` rows are unit-norm and mutually orthogonal (the second row
    is all zeros when d == 1, where only one axis exists). `points` equals
    (values - mean) @ components.T.
    """

    mean: np.ndarray  # (d,)
    components: np.ndarray  # (2, d)
    points: np.ndarray  # (n, 2)
    extents: tuple[tuple[float, float], tuple[float, float]]  # per-axis (min, max)


def _fix_signs(components: np.ndarray) -> np.ndarray:
    """Make each component's largest-magnitude entry positive (first on ties)."""
    out = components.copy()
    for row in out:
        if np.any(row != 0):
            j = int(np.argmax(np.abs(row)))
            if row[j] < 0:
                row *= -1.0
    return out


def pca_project(y: EmbeddingMatrix) -> Projection2D:
    """Project onto the top-2 principal components of the mean-centered matrix.

    Components are ordered by descending explained variance with a
    deterministic sign convention; for d == 1 the second axis is zero-padded.
    """
    if y.n < 2:
        raise InvalidArgument(f"PCA needs at least 2 rows, got {y.n}")
    mean = y.values.mean(axis=0)
    centered = y.values - mean
    # SVD of the centered matrix; right singular vectors are the components.
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    if y.d == 1:
        components = np.zeros((2, 1))
        components[0] = vt[0]
    else:
        components = vt[:2]
    components = _fix_signs(components)
    points = centered @ components.T
    extents = (
        (float(points[:, 0].min()), float(points[:, 0].max())),
        (float(points[:, 1].min()), float(points[:, 1].max())),
    )
    return Projection2D(mean=mean, components=components, points=points, extents=extents)
