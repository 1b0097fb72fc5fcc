"""Dataset ingestion, offline precomputation, and JSON artifact persistence.

File formats
------------
* Edge list: UTF-8 text, one edge per line as ``idA<ws>idB``; lines starting
  with ``#`` are comments. Duplicate edges and self-loops are dropped and
  counted.
* Embeddings: UTF-8 text, one row per node as ``id v1 ... vd``; an optional
  first header line ``n d`` is tolerated.
* Attributes: CSV with header ``id,<attribute-name>``; nodes missing from the
  file are imputed with a default label.
* Manifest: JSON document naming the dataset inputs and the configuration
  surface to precompute (see :class:`DatasetManifest`).

The precomputed artifact is a single self-contained JSON document per
dataset; floats are serialized with 9 significant digits and keys sorted so
re-runs on identical inputs are byte-identical.
"""

from __future__ import annotations

import csv
import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .embedding import EmbeddingMatrix, pca_project
from .errors import (
    DimensionMismatch,
    ManifestError,
    MissingEmbedding,
    ParseError,
    ReadError,
)
from .graph import Graph
from .group import AttributeTable, _aggregate_network_bias, _shares_from_lists, all_recommended_sets
from .individual import individual_score_table
from .layout import filter_salient_edges, spring_layout
from .summary import summarize

__all__ = [
    "EdgeListReport",
    "AttributeFileReport",
    "DatasetManifest",
    "load_graph",
    "load_embeddings",
    "load_attributes",
    "load_manifest",
    "build_artifact",
    "precompute",
    "load_artifact",
    "canonical_json_bytes",
]

DEFAULT_INDIVIDUAL_HOPS = (1, 2)
DEFAULT_GROUP_TOP_K = (1, 5, 10)
DEFAULT_LAYOUT_SEED = 42
DEFAULT_LAYOUT_ITERATIONS = 200
DEFAULT_KEEP_FRACTION = 0.10
DEFAULT_LABEL = "0"
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class EdgeListReport:
    """Counts of input lines dropped while normalizing to a simple graph."""

    duplicate_edges: int
    self_loops: int


@dataclass(frozen=True)
class AttributeFileReport:
    imputed: int
    skipped_ids: tuple[str, ...]


def _read_lines(path: str | Path) -> list[str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.readlines()
    except OSError as exc:
        raise ReadError(f"cannot read {path}: {exc}") from exc


def load_graph(path: str | Path) -> tuple[Graph, EdgeListReport]:
    """Parse a whitespace-separated edge list into a simple graph."""
    ids: list[str] = []
    index: dict[str, int] = {}

    def intern(i: str) -> int:
        if i not in index:
            index[i] = len(ids)
            ids.append(i)
        return index[i]

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    loops = 0
    for lineno, line in enumerate(_read_lines(path), start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        tokens = text.split()
        if len(tokens) != 2:
            raise ParseError(
                f"expected 'idA idB', got {len(tokens)} tokens", str(path), lineno
            )
        a, b = intern(tokens[0]), intern(tokens[1])
        if a == b:
            loops += 1
            continue
        key = (a, b) if a < b else (b, a)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append(key)
    return Graph(ids, edges), EdgeListReport(duplicate_edges=duplicates, self_loops=loops)


def load_embeddings(path: str | Path, g: Graph) -> EmbeddingMatrix:
    """Parse ``id v1 ... vd`` rows into a matrix aligned with g's indices."""
    rows: dict[int, list[float]] = {}
    d: int | None = None
    lines = _read_lines(path)
    content = [
        (lineno, line.strip())
        for lineno, line in enumerate(lines, start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    start = 0
    if content:
        lineno, first = content[0]
        tokens = first.split()
        if len(tokens) == 2 and _is_int(tokens[0]) and _is_int(tokens[1]) and tokens[0] not in g._index:
            if int(tokens[0]) != g.n:
                raise ParseError(
                    f"header declares {tokens[0]} nodes but graph has {g.n}",
                    str(path),
                    lineno,
                )
            start = 1
    for lineno, text in content[start:]:
        tokens = text.split()
        if len(tokens) < 2:
            raise ParseError("expected 'id v1 ... vd'", str(path), lineno)
        node_id = tokens[0]
        if node_id not in g._index:
            raise ParseError(f"unknown node id {node_id!r}", str(path), lineno)
        u = g._index[node_id]
        if u in rows:
            raise ParseError(f"duplicate row for node {node_id!r}", str(path), lineno)
        try:
            vec = [float(t) for t in tokens[1:]]
        except ValueError:
            raise ParseError("non-numeric embedding value", str(path), lineno) from None
        if d is None:
            d = len(vec)
        elif len(vec) != d:
            raise DimensionMismatch(
                f"{path}:{lineno}: row has {len(vec)} values, expected {d}"
            )
        rows[u] = vec
    for u in range(g.n):
        if u not in rows:
            raise MissingEmbedding(g.node_ids[u])
    values = np.array([rows[u] for u in range(g.n)], dtype=np.float64)
    return EmbeddingMatrix(values)


def _is_int(token: str) -> bool:
    try:
        int(token)
        return True
    except ValueError:
        return False


def load_attributes(
    path: str | Path,
    g: Graph,
    default_label: str = DEFAULT_LABEL,
    name: str | None = None,
) -> tuple[AttributeTable, AttributeFileReport]:
    """Parse an ``id,label`` CSV; absent nodes get the default label.

    The header's second column names the attribute unless `name` is given.
    Rows whose id is not a graph node are skipped and reported.
    """
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            reader = list(csv.reader(fh))
    except OSError as exc:
        raise ReadError(f"cannot read {path}: {exc}") from exc

    attr_name = name
    labels: dict[int, str] = {}
    skipped: list[str] = []
    rows = [(i + 1, row) for i, row in enumerate(reader) if row and any(c.strip() for c in row)]
    start = 0
    if rows:
        _, first = rows[0]
        if first and first[0].strip().lower() == "id":
            if attr_name is None and len(first) > 1:
                attr_name = first[1].strip()
            start = 1
    for lineno, row in rows[start:]:
        if len(row) != 2:
            raise ParseError(
                f"expected 'id,label', got {len(row)} fields", str(path), lineno
            )
        node_id, label = row[0].strip(), row[1].strip()
        if node_id not in g._index:
            skipped.append(node_id)
            continue
        labels[g._index[node_id]] = label
    imputed = g.n - len(labels)
    values = [labels.get(u, default_label) for u in range(g.n)]
    table = AttributeTable(attr_name or "attribute", values)
    return table, AttributeFileReport(imputed=imputed, skipped_ids=tuple(skipped))


@dataclass(frozen=True)
class DatasetManifest:
    """Declares one dataset's inputs and its precompute configuration."""

    dataset_id: str
    graph_path: Path
    embeddings: dict[str, Path]
    attributes: dict[str, Path] = field(default_factory=dict)
    name: str | None = None
    individual_hops: tuple[int, ...] = DEFAULT_INDIVIDUAL_HOPS
    group_top_k: tuple[int, ...] = DEFAULT_GROUP_TOP_K
    group_values: dict[str, tuple[str, ...]] = field(default_factory=dict)
    layout_seed: int = DEFAULT_LAYOUT_SEED
    layout_iterations: int = DEFAULT_LAYOUT_ITERATIONS
    keep_fraction: float = DEFAULT_KEEP_FRACTION
    default_label: str = DEFAULT_LABEL

    def __post_init__(self):
        if not self.dataset_id:
            raise ManifestError("dataset id must be nonempty")
        if not self.embeddings:
            raise ManifestError("manifest must declare at least one embedding")
        if any(k < 1 for k in self.individual_hops):
            raise ManifestError("individual hops must be >= 1")
        if any(k < 1 for k in self.group_top_k):
            raise ManifestError("group top-k values must be >= 1")

    def display_name(self) -> str:
        return self.name or self.dataset_id

    def input_paths(self) -> list[Path]:
        return [self.graph_path, *self.embeddings.values(), *self.attributes.values()]


def load_manifest(path: str | Path) -> DatasetManifest:
    """Parse a manifest JSON file; relative paths resolve against its folder."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ReadError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ManifestError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(raw, dict):
        raise ManifestError(f"{path}: manifest must be a JSON object")
    base = path.parent

    def resolve(p) -> Path:
        return base / str(p)

    try:
        manifest = DatasetManifest(
            dataset_id=str(raw["id"]),
            graph_path=resolve(raw["graph"]),
            embeddings={str(k): resolve(v) for k, v in dict(raw["embeddings"]).items()},
            attributes={str(k): resolve(v) for k, v in dict(raw.get("attributes", {})).items()},
            name=raw.get("name"),
            individual_hops=tuple(int(k) for k in raw.get("individual_hops", DEFAULT_INDIVIDUAL_HOPS)),
            group_top_k=tuple(int(k) for k in raw.get("group_top_k", DEFAULT_GROUP_TOP_K)),
            group_values={
                str(a): tuple(str(z) for z in vs)
                for a, vs in dict(raw.get("group_values", {})).items()
            },
            layout_seed=int(raw.get("layout_seed", DEFAULT_LAYOUT_SEED)),
            layout_iterations=int(raw.get("layout_iterations", DEFAULT_LAYOUT_ITERATIONS)),
            keep_fraction=float(raw.get("keep_fraction", DEFAULT_KEEP_FRACTION)),
            default_label=str(raw.get("default_label", DEFAULT_LABEL)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ManifestError(f"{path}: {exc!r}") from exc
    return manifest


def _round9(x: float) -> float:
    return float(f"{x:.9g}")


def _canonical(obj):
    """Copy a JSON-shaped object with floats rounded to 9 significant digits."""
    if isinstance(obj, float):
        return _round9(obj)
    if isinstance(obj, (np.floating,)):
        return _round9(float(obj))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, dict):
        return {str(k): _canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonical(v) for v in obj]
    return obj


def canonical_json_bytes(obj) -> bytes:
    """Deterministic JSON encoding: sorted keys, 9-significant-digit floats."""
    return (
        json.dumps(_canonical(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
        + "\n"
    ).encode("utf-8")


def _color_domain_individual(normalized: np.ndarray) -> list[float]:
    return [0.0, float(normalized.max()) if len(normalized) else 0.0]


def _color_domain_group(scores: np.ndarray) -> list[float]:
    if len(scores) == 0:
        return [0.0, 0.0]
    return [float(scores.min()), float(scores.max())]


def build_artifact(manifest: DatasetManifest) -> dict:
    """Run every configured computation and assemble the artifact document."""
    missing = [str(p) for p in manifest.input_paths() if not Path(p).is_file()]
    if missing:
        raise ManifestError(f"missing input files: {', '.join(missing)}")

    g, _ = load_graph(manifest.graph_path)
    attrs: dict[str, AttributeTable] = {}
    for attr_name, attr_path in sorted(manifest.attributes.items()):
        table, _ = load_attributes(
            attr_path, g, default_label=manifest.default_label, name=attr_name
        )
        attrs[attr_name] = table

    report = summarize(g)
    layout = spring_layout(g, seed=manifest.layout_seed, iterations=manifest.layout_iterations)
    salient = filter_salient_edges(g, layout, keep_fraction=manifest.keep_fraction)

    group_attributes = {
        a: list(manifest.group_values.get(a, t.domain)) for a, t in attrs.items()
    }
    max_group_k = max(manifest.group_top_k) if manifest.group_top_k and attrs else 0

    embeddings_doc: dict[str, dict] = {}
    for emb_name, emb_path in sorted(manifest.embeddings.items()):
        y = load_embeddings(emb_path, g)
        proj = pca_project(y)
        entry: dict = {
            "projection": {
                "points": proj.points.tolist(),
                "extents": {
                    "x": [proj.extents[0][0], proj.extents[0][1]],
                    "y": [proj.extents[1][0], proj.extents[1][1]],
                },
            },
            "individual": {},
            "group": {},
        }
        for k in manifest.individual_hops:
            table = individual_score_table(g, y, k)
            entry["individual"][str(k)] = {
                "raw": table.raw.tolist(),
                "degree_normalized": table.degree_normalized.tolist(),
                "normalized": table.normalized.tolist(),
                "color_domain": _color_domain_individual(table.normalized),
            }
        if max_group_k > 0:
            lists = all_recommended_sets(g, y, max_group_k)
            entry["recommendations"] = {
                "k": max_group_k,
                "items": [[g.node_ids[v] for v in items] for items in lists],
            }
            for attr_name, table in attrs.items():
                per_value: dict[str, dict] = {z: {} for z in group_attributes[attr_name]}
                for k in sorted(set(manifest.group_top_k)):
                    prefix = [items[:k] for items in lists]
                    net = _aggregate_network_bias(table, enumerate(prefix))
                    for z in group_attributes[attr_name]:
                        z_code = table.code_of(z)
                        shares, nonempty = _shares_from_lists(prefix, table.codes, z_code)
                        scores = 1.0 / len(table.domain) - shares
                        bias_z = (
                            1.0 / len(table.domain) - float(shares[nonempty].mean())
                            if nonempty.any()
                            else 0.0
                        )
                        per_value[z][str(k)] = {
                            "scores": scores.tolist(),
                            "attribute_bias": bias_z,
                            "network_bias": net.bias,
                            "color_domain": _color_domain_group(scores),
                        }
                entry["group"][attr_name] = per_value
        embeddings_doc[emb_name] = entry

    artifact = {
        "schema_version": SCHEMA_VERSION,
        "dataset": {"id": manifest.dataset_id, "name": manifest.display_name()},
        "graph": {
            "nodes": list(g.node_ids),
            "edges": [[g.node_ids[a], g.node_ids[b]] for a, b in g.edge_array()],
        },
        "attributes": {
            a: {"domain": list(t.domain), "values": list(t.values)} for a, t in attrs.items()
        },
        "summary": report.to_dict(),
        "layout": {
            "seed": manifest.layout_seed,
            "iterations": manifest.layout_iterations,
            "keep_fraction": manifest.keep_fraction,
            "positions": layout.positions.tolist(),
            "salient_edges": [[g.node_ids[a], g.node_ids[b]] for a, b in salient],
        },
        "configs": {
            "individual_hops": sorted(set(manifest.individual_hops)),
            "group_top_k": sorted(set(manifest.group_top_k)) if attrs else [],
            "group_attributes": group_attributes,
        },
    }
    artifact["embeddings"] = embeddings_doc
    return artifact


def precompute(manifest: DatasetManifest, out_dir: str | Path) -> tuple[dict, Path]:
    """Build the artifact and write it atomically to ``<out_dir>/<id>.json``.

    A failed build never leaves a partial file behind: the document is
    written to a temp file in the target directory and renamed into place.
    """
    artifact = build_artifact(manifest)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    target = out_dir / f"{manifest.dataset_id}.json"
    payload = canonical_json_bytes(artifact)
    fd, tmp_name = tempfile.mkstemp(dir=out_dir, prefix=".tmp-artifact-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(payload)
        os.replace(tmp_name, target)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return artifact, target


def load_artifact(path: str | Path) -> dict:
    """Parse an artifact file back into its JSON document."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ReadError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid artifact JSON: {exc}", str(path)) from exc
    if not isinstance(doc, dict) or doc.get("schema_version") != SCHEMA_VERSION:
        raise ParseError("unsupported artifact schema", str(path))
    return doc
