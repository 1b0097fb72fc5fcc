"""Group fairness over top-k embedding recommendations.

Each node is assigned the k most dot-product-similar non-connected nodes
as its recommendation list (ties broken by smallest external id). Scores
measure how far each attribute value's share of those lists sits from the
equal-representation point 1/|Z|, and a network-level bias aggregates
recommendation rates across all attribute-value group pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .embedding import EmbeddingMatrix
from .errors import InvalidArgument, InvalidData
from .graph import Graph, NodeSet

__all__ = [
    "AttributeTable",
    "RecommendationList",
    "GroupScoreTable",
    "NetworkBias",
    "recommended_set",
    "all_recommended_sets",
    "restricted_set",
    "share",
    "user_score",
    "attribute_bias",
    "network_bias",
    "group_score_table",
]


class AttributeTable:
    """Per-node categorical labels for one sensitive attribute.

    `domain` is the ordered set of distinct labels: every label appearing in
    `values`, plus any declared-but-unused extras, sorted lexicographically.
    """

    __slots__ = ("name", "values", "domain", "codes")

    def __init__(self, name: str, values: Sequence[str], domain: Iterable[str] = ()):
        self.name = str(name)
        self.values: tuple[str, ...] = tuple(str(v) for v in values)
        labels = set(self.values) | {str(z) for z in domain}
        if not labels:
            raise InvalidData("attribute domain must contain at least one label")
        self.domain: tuple[str, ...] = tuple(sorted(labels))
        lookup = {z: i for i, z in enumerate(self.domain)}
        self.codes = np.array([lookup[v] for v in self.values], dtype=np.int64)

    def code_of(self, z: str) -> int:
        try:
            return self.domain.index(str(z))
        except ValueError:
            raise InvalidArgument(
                f"label {z!r} not in domain of attribute {self.name!r}"
            ) from None

    def __repr__(self) -> str:
        return f"AttributeTable(name={self.name!r}, n={len(self.values)}, domain={self.domain})"


@dataclass(frozen=True)
class RecommendationList:
    """Ordered top-k recommendations for one source node.

    Items are internal indices, strictly ordered by descending dot
    similarity with ties broken by ascending external id; the list never
    contains the source or its neighbors.
    """

    source: int
    k: int
    items: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.items)


def _check_attr_alignment(g: Graph, attrs: AttributeTable) -> None:
    if len(attrs.values) != g.n:
        raise InvalidData(
            f"attribute table has {len(attrs.values)} labels but graph has {g.n} nodes"
        )


def _top_candidates(sims: np.ndarray, excluded: np.ndarray, k: int, id_ranks: np.ndarray) -> np.ndarray:
    """Top-k candidate indices for one similarity row.

    `excluded` holds the indices masked out (the source and its neighbors).
    Exact even under similarity ties: ties at the selection boundary are
    resolved by ascending external-id rank.
    """
    n = len(sims)
    mask = np.zeros(n, dtype=bool)
    mask[excluded] = True
    cand = np.flatnonzero(~mask)
    take = min(k, len(cand))
    if take == 0:
        return np.zeros(0, dtype=np.int64)
    vals = sims[cand]
    if take < len(cand):
        part = np.argpartition(-vals, take - 1)[:take]
        thresh = vals[part].min()
        sel = np.flatnonzero(vals >= thresh)
    else:
        sel = np.arange(len(cand))
    order = np.lexsort((id_ranks[cand[sel]], -vals[sel]))
    return cand[sel[order][:take]]


def recommended_set(g: Graph, y: EmbeddingMatrix, u: int, k: int) -> RecommendationList:
    """Top-k most similar nodes among those not connected to u."""
    u = g._check(u)
    if k < 1:
        raise InvalidArgument(f"recommendation count must be >= 1, got {k}")
    if y.n != g.n:
        raise InvalidData(f"embedding has {y.n} rows but graph has {g.n} nodes")
    sims = y.values @ y.row(u)
    excluded = np.concatenate([[u], g.neighbors(u)])
    items = _top_candidates(sims, excluded, k, g.id_ranks)
    return RecommendationList(source=u, k=k, items=tuple(int(v) for v in items))


def all_recommended_sets(
    g: Graph, y: EmbeddingMatrix, k: int, chunk: int = 512
) -> list[np.ndarray]:
    """Recommendation items for every node, as index arrays.

    Similarity rows are produced in chunked matrix products; ranking matches
    :func:`recommended_set`.
    """
    if k < 1:
        raise InvalidArgument(f"recommendation count must be >= 1, got {k}")
    if y.n != g.n:
        raise InvalidData(f"embedding has {y.n} rows but graph has {g.n} nodes")
    out: list[np.ndarray] = []
    for start in range(0, g.n, chunk):
        stop = min(start + chunk, g.n)
        sims_block = y.values[start:stop] @ y.values.T
        for u in range(start, stop):
            excluded = np.concatenate([[u], g.neighbors(u)])
            out.append(_top_candidates(sims_block[u - start], excluded, k, g.id_ranks))
    return out


def restricted_set(r: RecommendationList, attrs: AttributeTable, z: str) -> RecommendationList:
    """Order-preserving filter of a recommendation list by label z."""
    code = attrs.code_of(z)
    kept = tuple(v for v in r.items if attrs.codes[v] == code)
    return RecommendationList(source=r.source, k=r.k, items=kept)


def share(r: RecommendationList, attrs: AttributeTable, z: str) -> float:
    """Fraction of the list carrying label z; 0 for an empty list."""
    code = attrs.code_of(z)
    if len(r.items) == 0:
        return 0.0
    hits = sum(1 for v in r.items if attrs.codes[v] == code)
    return hits / len(r.items)


def user_score(r: RecommendationList, attrs: AttributeTable, z: str) -> float:
    """Deviation of the z-share from equal representation: 1/|Z| - share."""
    return 1.0 / len(attrs.domain) - share(r, attrs, z)


def _shares_from_lists(
    lists: Sequence[np.ndarray], codes: np.ndarray, z_code: int
) -> tuple[np.ndarray, np.ndarray]:
    """Per-node z-shares and a nonempty-list mask."""
    n = len(lists)
    shares = np.zeros(n)
    nonempty = np.zeros(n, dtype=bool)
    for u, items in enumerate(lists):
        if len(items):
            nonempty[u] = True
            shares[u] = np.count_nonzero(codes[items] == z_code) / len(items)
    return shares, nonempty


def attribute_bias(
    g: Graph, y: EmbeddingMatrix, attrs: AttributeTable, k: int, z: str
) -> float:
    """1/|Z| minus the mean z-share over nodes with nonempty lists.

    Nodes whose candidate set is empty are excluded from the mean; if every
    list is empty the bias is 0 (no recommendation events to measure).
    """
    _check_attr_alignment(g, attrs)
    z_code = attrs.code_of(z)
    lists = all_recommended_sets(g, y, k)
    shares, nonempty = _shares_from_lists(lists, attrs.codes, z_code)
    if not nonempty.any():
        return 0.0
    return 1.0 / len(attrs.domain) - float(shares[nonempty].mean())


@dataclass(frozen=True)
class NetworkBias:
    """Variance of per-group recommendation rates across label pairs.

    `per_group` maps each unordered label pair (by domain order) to its
    rate P; pairs whose group is empty are excluded from the variance and
    listed in `excluded`.
    """

    bias: float
    per_group: dict[tuple[str, str], float]
    excluded: tuple[tuple[str, str], ...]


def _aggregate_network_bias(
    attrs: AttributeTable, event_pairs: Iterable[tuple[int, np.ndarray]]
) -> NetworkBias:
    """Fold (source, recommended items) pairs into per-group rates."""
    codes = attrs.codes
    nz = len(attrs.domain)
    counts = np.bincount(codes, minlength=nz)
    events = np.zeros((nz, nz), dtype=np.int64)
    for u, items in event_pairs:
        cu = int(codes[u])
        for v in items:
            ci, cj = sorted((cu, int(codes[v])))
            events[ci, cj] += 1
    per_group: dict[tuple[str, str], float] = {}
    excluded: list[tuple[str, str]] = []
    rates = []
    for i in range(nz):
        for j in range(i, nz):
            size = counts[i] * counts[j] if i != j else counts[i] * (counts[i] + 1) // 2
            key = (attrs.domain[i], attrs.domain[j])
            if size == 0:
                excluded.append(key)
                continue
            p = events[i, j] / size
            per_group[key] = float(p)
            rates.append(p)
    bias = float(np.var(rates)) if rates else 0.0
    return NetworkBias(bias=bias, per_group=per_group, excluded=tuple(excluded))


def network_bias(
    g: Graph,
    y: EmbeddingMatrix,
    attrs: AttributeTable,
    k: int,
    restrict_to: NodeSet | Iterable[int] | None = None,
) -> NetworkBias:
    """Population variance of recommendation rates over attribute groups.

    Groups pair every two label values i <= j; same-label groups use
    combinations with repetition (self-pairs included), so a group with c
    members has c(c+1)/2 pairs. The numerator counts recommendation events
    (u, v in rho_k(u)) whose endpoint labels form the pair; `restrict_to`
    limits which source nodes contribute events (all nodes by default).
    """
    _check_attr_alignment(g, attrs)
    if k < 1:
        raise InvalidArgument(f"recommendation count must be >= 1, got {k}")

    if restrict_to is None:
        pairs = list(enumerate(all_recommended_sets(g, y, k)))
    else:
        members = restrict_to.members if isinstance(restrict_to, NodeSet) else restrict_to
        pairs = [
            (g._check(u), np.asarray(recommended_set(g, y, int(u), k).items, dtype=np.int64))
            for u in members
        ]
    return _aggregate_network_bias(attrs, pairs)


@dataclass(frozen=True)
class GroupScoreTable:
    """Per-node user scores plus the two aggregates for one (k, attribute, z)."""

    k: int
    attribute: str
    value: str
    scores: np.ndarray
    bias_z: float
    network_bias: float


def group_score_table(
    g: Graph, y: EmbeddingMatrix, attrs: AttributeTable, k: int, z: str
) -> GroupScoreTable:
    """User-level scores for every node plus attribute and network bias."""
    _check_attr_alignment(g, attrs)
    if k < 1:
        raise InvalidArgument(f"recommendation count must be >= 1, got {k}")
    z_code = attrs.code_of(z)
    lists = all_recommended_sets(g, y, k)
    shares, nonempty = _shares_from_lists(lists, attrs.codes, z_code)
    scores = 1.0 / len(attrs.domain) - shares
    bias_z = (
        1.0 / len(attrs.domain) - float(shares[nonempty].mean()) if nonempty.any() else 0.0
    )
    net = _aggregate_network_bias(attrs, enumerate(lists))
    return GroupScoreTable(
        k=k, attribute=attrs.name, value=str(z), scores=scores,
        bias_z=bias_z, network_bias=net.bias,
    )
