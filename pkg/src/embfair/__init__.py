"""Fairness auditing for graph embeddings.

Core objects: :class:`~embfair.graph.Graph`,
:class:`~embfair.embedding.EmbeddingMatrix`, and
:class:`~embfair.group.AttributeTable`. Individual fairness sums squared
embedding distances over k-hop neighborhoods; group fairness measures how
evenly sensitive-attribute values are represented in each node's top-k
recommendations. The pipeline precomputes every configuration offline into
a JSON artifact that the bundled HTTP server reads back verbatim.
"""

from .embedding import EmbeddingMatrix, Projection2D, dot_similarity, pca_project, sq_euclidean
from .errors import (
    DimensionMismatch,
    EmbFairError,
    InvalidArgument,
    InvalidData,
    ManifestError,
    MissingEmbedding,
    NodeNotFound,
    ParseError,
    ReadError,
)
from .graph import (
    Graph,
    NodeSet,
    Subgraph,
    clustering_coefficient,
    connected_components,
    ego_subgraph,
    induced_subgraph,
    k_hop_neighborhood,
    triangle_count,
)
from .group import (
    AttributeTable,
    GroupScoreTable,
    NetworkBias,
    RecommendationList,
    all_recommended_sets,
    attribute_bias,
    group_score_table,
    network_bias,
    recommended_set,
    restricted_set,
    share,
    user_score,
)
from .individual import IndividualScoreTable, individual_score, individual_score_table
from .layout import Layout, filter_salient_edges, spring_layout
from .pipeline import (
    DatasetManifest,
    build_artifact,
    canonical_json_bytes,
    load_artifact,
    load_attributes,
    load_embeddings,
    load_graph,
    load_manifest,
    precompute,
)
from .summary import SummaryReport, summarize

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # graph
    "Graph", "NodeSet", "Subgraph", "k_hop_neighborhood", "ego_subgraph",
    "induced_subgraph", "connected_components", "triangle_count",
    "clustering_coefficient",
    # embeddings
    "EmbeddingMatrix", "Projection2D", "sq_euclidean", "dot_similarity", "pca_project",
    # individual fairness
    "IndividualScoreTable", "individual_score", "individual_score_table",
    # group fairness
    "AttributeTable", "RecommendationList", "GroupScoreTable", "NetworkBias",
    "recommended_set", "all_recommended_sets", "restricted_set", "share",
    "user_score", "attribute_bias", "network_bias", "group_score_table",
    # layout + summary
    "Layout", "spring_layout", "filter_salient_edges", "SummaryReport", "summarize",
    # pipeline
    "DatasetManifest", "load_graph", "load_embeddings", "load_attributes",
    "load_manifest", "build_artifact", "precompute", "load_artifact",
    "canonical_json_bytes",
    # errors
    "EmbFairError", "NodeNotFound", "InvalidArgument", "InvalidData",
    "DimensionMismatch", "MissingEmbedding", "ReadError", "ParseError",
    "ManifestError",
]
