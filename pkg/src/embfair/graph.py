"""Immutable undirected simple graphs and topology queries.

The graph stores external (string) node ids alongside dense internal
indices 0..n-1; all computation runs on the internal indices. Construction
normalizes the edge set: self-loops and duplicate edges are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgument, InvalidData, NodeNotFound

__all__ = [
    "Graph",
    "NodeSet",
    "Subgraph",
    "k_hop_neighborhood",
    "ego_subgraph",
    "induced_subgraph",
    "connected_components",
    "triangle_count",
    "clustering_coefficient",
]


def _id_sort_ranks(node_ids: Sequence[str]) -> np.ndarray:
    """Rank of each node under ascending external-id order.

    Ids sort numerically when every id parses as an integer (the common case
    for the public benchmark graphs), lexicographically otherwise. Ranks are
    used for deterministic tie-breaking ("smallest id goes first").
    """
    try:
        keys: list = [int(i) for i in node_ids]
    except ValueError:
        keys = list(node_ids)
    order = sorted(range(len(keys)), key=keys.__getitem__)
    ranks = np.empty(len(keys), dtype=np.int64)
    for rank, idx in enumerate(order):
        ranks[idx] = rank
    return ranks


class Graph:
    """Undirected simple graph with contiguous internal node indices.

    Parameters
    ----------
    node_ids : sequence of str
        External ids, one per node; position defines the internal index.
    edges : iterable of (int, int)
        Edges as internal index pairs. Self-loops and duplicates are
        silently dropped (loaders report drop counts separately).
    """

    __slots__ = ("node_ids", "n", "m", "_indptr", "_indices", "_index", "id_ranks")

    def __init__(self, node_ids: Sequence[str], edges: Iterable[tuple[int, int]]):
        self.node_ids: tuple[str, ...] = tuple(str(i) for i in node_ids)
        self.n: int = len(self.node_ids)
        self._index: dict[str, int] = {i: u for u, i in enumerate(self.node_ids)}
        if len(self._index) != self.n:
            raise InvalidData("duplicate external node ids")

        pairs = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise NodeNotFound(f"edge endpoint index {max(a, b)} out of range")
            if a == b:
                continue
            pairs.add((a, b) if a < b else (b, a))
        self.m: int = len(pairs)

        deg = np.zeros(self.n, dtype=np.int64)
        if pairs:
            arr = np.array(sorted(pairs), dtype=np.int64)
            both = np.concatenate([arr, arr[:, ::-1]])
            np.add.at(deg, both[:, 0], 1)
            self._indptr = np.concatenate([[0], np.cumsum(deg)])
            order = np.lexsort((both[:, 1], both[:, 0]))
            self._indices = np.ascontiguousarray(both[order, 1])
        else:
            self._indptr = np.zeros(self.n + 1, dtype=np.int64)
            self._indices = np.zeros(0, dtype=np.int64)
        self.id_ranks = _id_sort_ranks(self.node_ids)

    @classmethod
    def from_edge_ids(
        cls, id_pairs: Iterable[tuple[str, str]], isolated: Iterable[str] = ()
    ) -> "Graph":
        """Build a graph from external-id edge pairs.

        Internal indices follow first appearance; `isolated` appends nodes
        that have no incident edges.
        """
        ids: list[str] = []
        index: dict[str, int] = {}

        def intern(i: str) -> int:
            i = str(i)
            if i not in index:
                index[i] = len(ids)
                ids.append(i)
            return index[i]

        edges = [(intern(a), intern(b)) for a, b in id_pairs]
        for i in isolated:
            intern(i)
        return cls(ids, edges)

    def index_of(self, node_id: str) -> int:
        """Internal index for an external id."""
        try:
            return self._index[str(node_id)]
        except KeyError:
            raise NodeNotFound(f"unknown node id {node_id!r}") from None

    def id_of(self, u: int) -> str:
        return self.node_ids[self._check(u)]

    def _check(self, u: int) -> int:
        v = int(u)
        if not 0 <= v < self.n:
            raise NodeNotFound(f"node index {u} out of range [0, {self.n})")
        return v

    def neighbors(self, u: int) -> np.ndarray:
        """Sorted internal indices adjacent to `u` (read-only view)."""
        u = self._check(u)
        return self._indices[self._indptr[u] : self._indptr[u + 1]]

    def degree(self, u: int) -> int:
        u = self._check(u)
        return int(self._indptr[u + 1] - self._indptr[u])

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def edge_array(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v, sorted lexicographically."""
        u = np.repeat(np.arange(self.n), np.diff(self._indptr))
        mask = u < self._indices
        return np.column_stack([u[mask], self._indices[mask]])

    def has_edge(self, u: int, v: int) -> bool:
        u, v = self._check(u), self._check(v)
        row = self.neighbors(u)
        pos = np.searchsorted(row, v)
        return pos < len(row) and row[pos] == v

    def adjacency_csr(self):
        """Adjacency as a scipy CSR matrix of ones (used by bulk kernels)."""
        from scipy.sparse import csr_matrix

        data = np.ones(len(self._indices), dtype=np.float64)
        return csr_matrix((data, self._indices, self._indptr), shape=(self.n, self.n))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class NodeSet:
    """Ordered set of internal node indices (ascending, no duplicates).

    `hops` is populated by :func:`k_hop_neighborhood` and carries the exact
    hop distance of each member, aligned with `members`.
    """

    members: np.ndarray
    hops: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self):
        m = np.asarray(self.members, dtype=np.int64)
        if m.ndim != 1 or (len(m) > 1 and np.any(np.diff(m) <= 0)):
            raise InvalidData("NodeSet members must be strictly ascending")
        object.__setattr__(self, "members", m)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members.tolist())

    def __contains__(self, u: int) -> bool:
        pos = np.searchsorted(self.members, u)
        return pos < len(self.members) and self.members[pos] == u


@dataclass(frozen=True)
class Subgraph:
    """An induced subgraph plus the mapping back to parent internal indices."""

    graph: Graph
    parent_index: np.ndarray  # subgraph index -> parent internal index


def k_hop_neighborhood(g: Graph, u: int, k: int) -> NodeSet:
    """Nodes reachable from `u` in at most `k` steps, excluding `u` itself.

    Breadth-first expansion; the result records each member's exact hop
    distance (1..k).
    """
    u = g._check(u)
    if k < 1:
        raise InvalidArgument(f"hop count must be >= 1, got {k}")
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[u] = 0
    frontier = np.array([u], dtype=np.int64)
    for hop in range(1, k + 1):
        if len(frontier) == 0:
            break
        parts = [g._indices[g._indptr[v] : g._indptr[v + 1]] for v in frontier]
        cand = np.unique(np.concatenate(parts)) if parts else np.zeros(0, np.int64)
        fresh = cand[dist[cand] < 0]
        dist[fresh] = hop
        frontier = fresh
    members = np.flatnonzero(dist > 0)
    return NodeSet(members=members, hops=dist[members])


def _induce(g: Graph, members: np.ndarray) -> Subgraph:
    members = np.asarray(members, dtype=np.int64)
    mask = np.zeros(g.n, dtype=bool)
    mask[members] = True
    local = np.full(g.n, -1, dtype=np.int64)
    local[members] = np.arange(len(members))
    edges = []
    for v in members:
        nbrs = g._indices[g._indptr[v] : g._indptr[v + 1]]
        kept = nbrs[(nbrs > v) & mask[nbrs]]
        edges.extend((int(local[v]), int(local[w])) for w in kept)
    sub = Graph([g.node_ids[v] for v in members], edges)
    return Subgraph(graph=sub, parent_index=members)


def ego_subgraph(g: Graph, u: int, k: int) -> Subgraph:
    """Induced subgraph on `u` and its k-hop neighborhood, ids preserved."""
    u = g._check(u)
    hood = k_hop_neighborhood(g, u, k)
    members = np.unique(np.concatenate([[u], hood.members]))
    return _induce(g, members)


def induced_subgraph(g: Graph, s: NodeSet) -> Subgraph:
    """Induced subgraph on the node set `s` with all internal edges."""
    for v in s.members:
        g._check(v)
    return _induce(g, s.members)


def connected_components(g: Graph) -> tuple[int, np.ndarray]:
    """Component count and per-node labels.

    Labels are assigned in order of each component's smallest internal
    index, making the labeling invariant for a fixed graph.
    """
    labels = np.full(g.n, -1, dtype=np.int64)
    count = 0
    for start in range(g.n):
        if labels[start] >= 0:
            continue
        labels[start] = count
        frontier = np.array([start], dtype=np.int64)
        while len(frontier):
            parts = [g._indices[g._indptr[v] : g._indptr[v + 1]] for v in frontier]
            cand = np.unique(np.concatenate(parts)) if parts else np.zeros(0, np.int64)
            fresh = cand[labels[cand] < 0]
            labels[fresh] = count
            frontier = fresh
        count += 1
    return count, labels


def _triangles_per_node(g: Graph) -> np.ndarray:
    """Number of triangles through each node (per-edge common-neighbor scan)."""
    t = np.zeros(g.n, dtype=np.int64)
    if g.m == 0:
        return t
    adj = [set(map(int, g.neighbors(v))) for v in range(g.n)]
    for u, v in g.edge_array():
        c = len(adj[u] & adj[v])
        t[u] += c
        t[v] += c
    return t // 2


def triangle_count(g: Graph) -> int:
    """Number of unordered node triples forming 3-cycles."""
    return int(_triangles_per_node(g).sum()) // 3


def clustering_coefficient(g: Graph) -> float:
    """Average local clustering coefficient.

    Nodes of degree < 2 contribute 0; the empty graph scores 0.
    """
    if g.n == 0:
        return 0.0
    deg = g.degrees().astype(np.float64)
    tri = _triangles_per_node(g).astype(np.float64)
    wedges = deg * (deg - 1.0) / 2.0
    local = np.divide(tri, wedges, out=np.zeros(g.n), where=wedges > 0)
    return float(local.mean())
