"""Deterministic force-directed layout and salient-edge filtering.

The layout is the classic Fruchterman-Reingold scheme: k^2/d repulsion
between all node pairs, d^2/k attraction along edges, and a linearly
cooling displacement cap. The pairwise repulsion runs in a compiled
kernel so graphs in the thousands of nodes lay out in seconds; a chunked
numpy path covers environments without a JIT. Final positions are
normalized to the unit square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument
from .graph import Graph

__all__ = ["Layout", "spring_layout", "filter_salient_edges"]

_EPS = 1e-9
_repulsion_jit = None


@dataclass(frozen=True)
class Layout:
    """Unit-square node positions; reproducible from (graph, seed, iterations)."""

    positions: np.ndarray  # (n, 2)
    seed: int
    iterations: int


def _compile_repulsion():
    """JIT-compile the symmetric all-pairs kernel once per process."""
    global _repulsion_jit
    if _repulsion_jit is not None:
        return _repulsion_jit
    try:
        import numba
    except ImportError:
        _repulsion_jit = False
        return _repulsion_jit

    @numba.njit(fastmath=False)
    def kernel(pos, k):
        n = pos.shape[0]
        out = np.zeros_like(pos)
        k2 = k * k
        for i in range(n):
            xi = pos[i, 0]
            yi = pos[i, 1]
            for j in range(i + 1, n):
                dx = xi - pos[j, 0]
                dy = yi - pos[j, 1]
                d2 = dx * dx + dy * dy
                if d2 < 1e-18:
                    d2 = 1e-18
                w = k2 / d2
                fx = dx * w
                fy = dy * w
                out[i, 0] += fx
                out[i, 1] += fy
                out[j, 0] -= fx
                out[j, 1] -= fy
        return out

    _repulsion_jit = kernel
    return _repulsion_jit


def _repulsion_numpy(pos: np.ndarray, k: float) -> np.ndarray:
    """Chunked exact all-pairs fallback; memory stays bounded for large n."""
    n = len(pos)
    out = np.zeros_like(pos)
    chunk = max(1, 4_000_000 // max(n, 1))
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        delta = pos[start:stop, None, :] - pos[None, :, :]
        d2 = (delta * delta).sum(axis=2)
        rows = np.arange(start, stop)
        d2[rows - start, rows] = np.inf  # no self-force
        d2 = np.maximum(d2, _EPS * _EPS)
        out[start:stop] = (delta * ((k * k) / d2)[:, :, None]).sum(axis=1)
    return out


def _repulsion(pos: np.ndarray, k: float) -> np.ndarray:
    kernel = _compile_repulsion()
    if kernel:
        return kernel(pos, k)
    return _repulsion_numpy(pos, k)


def spring_layout(g: Graph, seed: int = 42, iterations: int = 200) -> Layout:
    """Fruchterman-Reingold layout, normalized to the unit square.

    Deterministic for a fixed (graph, seed, iterations) triple: node order
    is fixed and the only randomness is the seeded initial placement.
    """
    if iterations < 0:
        raise InvalidArgument("iterations must be >= 0")
    n = g.n
    if n == 0:
        return Layout(np.zeros((0, 2)), seed, iterations)

    area = float(n)
    side = math.sqrt(area)
    k = math.sqrt(area / n)  # = 1 for the unit-density frame
    rng = np.random.default_rng(seed)
    pos = rng.random((n, 2)) * side

    edges = g.edge_array()
    if len(edges):
        eu = np.concatenate([edges[:, 0], edges[:, 1]])
        ev = np.concatenate([edges[:, 1], edges[:, 0]])
    else:
        eu = ev = np.zeros(0, dtype=np.int64)

    t0 = 0.1 * side
    for it in range(iterations):
        t = t0 * (1.0 - it / iterations)
        disp = _repulsion(pos, k)
        if len(eu):
            delta = pos[eu] - pos[ev]
            dist = np.maximum(np.sqrt((delta * delta).sum(axis=1)), _EPS)
            pull = delta * (dist / k)[:, None]
            np.add.at(disp, eu, -pull)
        length = np.maximum(np.sqrt((disp * disp).sum(axis=1)), _EPS)
        scale = np.minimum(length, t) / length
        pos = pos + disp * scale[:, None]
        np.clip(pos, 0.0, side, out=pos)

    span = pos.max(axis=0) - pos.min(axis=0)
    low = pos.min(axis=0)
    out = np.empty_like(pos)
    for axis in range(2):
        if span[axis] > 0:
            out[:, axis] = (pos[:, axis] - low[axis]) / span[axis]
        else:
            out[:, axis] = 0.5
    return Layout(positions=out, seed=seed, iterations=iterations)


def _keep_count(keep_fraction: float, m: int) -> int:
    """ceil(keep_fraction * m) with float noise snapped to the nearest integer."""
    x = keep_fraction * m
    nearest = round(x)
    if abs(x - nearest) <= 1e-9 * max(1.0, float(m)):
        kept = int(nearest)
    else:
        kept = int(math.ceil(x))
    if m > 0:
        kept = max(kept, 1)
    return min(kept, m)


def filter_salient_edges(
    g: Graph, layout: Layout, keep_fraction: float = 0.10
) -> np.ndarray:
    """The ceil(keep_fraction * m) longest edges under the layout.

    Returns an array of (u, v) internal index pairs with u < v, ordered by
    descending rendered length; ties at the cutoff (and in the ordering)
    break by ascending (min index, max index) edge key.
    """
    if not 0.0 < keep_fraction <= 1.0:
        raise InvalidArgument(f"keep_fraction must be in (0, 1], got {keep_fraction}")
    edges = g.edge_array()
    if len(edges) == 0:
        return edges
    delta = layout.positions[edges[:, 0]] - layout.positions[edges[:, 1]]
    lengths = np.sqrt((delta * delta).sum(axis=1))
    order = np.lexsort((edges[:, 1], edges[:, 0], -lengths))
    kept = _keep_count(keep_fraction, g.m)
    return edges[order[:kept]]
