"""Read-only HTTP JSON API over precomputed artifacts.

Artifacts are loaded once at startup and held in memory; every request is
a pure read. Diagnostic bundles are assembled on demand from the in-memory
graph plus the precomputed scores, recommendation lists, and projection.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware

from .graph import Graph, NodeSet, ego_subgraph, induced_subgraph, k_hop_neighborhood
from .pipeline import load_artifact

__all__ = ["DatasetState", "load_artifacts", "create_app"]


class DatasetState:
    """One artifact plus the graph rebuilt from it for on-demand queries."""

    def __init__(self, artifact: dict):
        self.artifact = artifact
        nodes = artifact["graph"]["nodes"]
        index = {i: u for u, i in enumerate(nodes)}
        edges = [(index[a], index[b]) for a, b in artifact["graph"]["edges"]]
        self.graph = Graph(nodes, edges)

    @property
    def dataset_id(self) -> str:
        return self.artifact["dataset"]["id"]

    def embedding(self, name: str) -> dict:
        try:
            return self.artifact["embeddings"][name]
        except KeyError:
            raise HTTPException(404, f"unknown embedding {name!r}") from None

    def descriptor(self) -> dict:
        return {
            "id": self.dataset_id,
            "name": self.artifact["dataset"]["name"],
            "n": self.artifact["summary"]["n"],
            "m": self.artifact["summary"]["m"],
            "embeddings": sorted(self.artifact["embeddings"]),
            "configs": self.artifact["configs"],
        }


def load_artifacts(artifact_dir: str | Path) -> dict[str, DatasetState]:
    """Load every ``*.json`` artifact in a directory, keyed by dataset id."""
    states: dict[str, DatasetState] = {}
    root = Path(artifact_dir)
    if not root.is_dir():
        return states
    for path in sorted(root.glob("*.json")):
        state = DatasetState(load_artifact(path))
        states[state.dataset_id] = state
    return states


def _score_vector(state: DatasetState, emb: dict, notion: str, k: int | None,
                  attribute: str | None, value: str | None) -> tuple[list[float], list[float], dict]:
    """(scores, color_domain, config echo) for one validated configuration."""
    configs = state.artifact["configs"]
    if notion == "individual":
        if k is None or k not in configs["individual_hops"]:
            raise HTTPException(400, f"hop count must be one of {configs['individual_hops']}")
        table = emb["individual"][str(k)]
        return table["normalized"], table["color_domain"], {"notion": "individual", "k": k}
    if notion == "group":
        if k is None or k not in configs["group_top_k"]:
            raise HTTPException(400, f"top-k must be one of {configs['group_top_k']}")
        values = configs["group_attributes"].get(attribute)
        if attribute is None or values is None:
            raise HTTPException(400, f"attribute must be one of {sorted(configs['group_attributes'])}")
        if value is None or value not in values:
            raise HTTPException(400, f"value must be one of {values}")
        table = emb["group"][attribute][value][str(k)]
        config = {"notion": "group", "k": k, "attribute": attribute, "value": value}
        return table["scores"], table["color_domain"], config
    raise HTTPException(400, f"unknown notion {notion!r}")


def create_app(artifact_dir: str | Path, static_dir: str | Path | None = None) -> FastAPI:
    """Build the API application over one artifact directory."""
    app = FastAPI(title="embfair", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["GET"], allow_headers=["*"]
    )
    datasets = load_artifacts(artifact_dir)

    def dataset(dataset_id: str) -> DatasetState:
        try:
            return datasets[dataset_id]
        except KeyError:
            raise HTTPException(404, f"unknown dataset {dataset_id!r}") from None

    @app.get("/datasets")
    def list_datasets() -> list[dict]:
        return [datasets[i].descriptor() for i in sorted(datasets)]

    @app.get("/datasets/{dataset_id}/summary")
    def get_summary(dataset_id: str) -> dict:
        return dataset(dataset_id).artifact["summary"]

    @app.get("/datasets/{dataset_id}/overview")
    def get_overview(
        dataset_id: str,
        embedding: str,
        notion: str,
        k: int | None = Query(default=None),
        attribute: str | None = Query(default=None),
        value: str | None = Query(default=None),
    ) -> dict:
        state = dataset(dataset_id)
        emb = state.embedding(embedding)
        scores, domain, config = _score_vector(state, emb, notion, k, attribute, value)
        layout = state.artifact["layout"]
        nodes = [
            {"id": node_id, "x": xy[0], "y": xy[1], "score": scores[u]}
            for u, (node_id, xy) in enumerate(zip(state.graph.node_ids, layout["positions"]))
        ]
        return {
            "dataset": dataset_id,
            "embedding": embedding,
            "config": config,
            "color_domain": domain,
            "nodes": nodes,
            "edges": layout["salient_edges"],
        }

    @app.get("/datasets/{dataset_id}/scores")
    def get_scores(
        dataset_id: str,
        embedding: str,
        notion: str,
        k: int | None = Query(default=None),
        attribute: str | None = Query(default=None),
        value: str | None = Query(default=None),
        sort: str = Query(default="id"),
        dir: str = Query(default="asc"),
    ) -> dict:
        if sort not in ("score", "id"):
            raise HTTPException(400, "sort must be 'score' or 'id'")
        if dir not in ("asc", "desc"):
            raise HTTPException(400, "dir must be 'asc' or 'desc'")
        state = dataset(dataset_id)
        emb = state.embedding(embedding)
        scores, _, config = _score_vector(state, emb, notion, k, attribute, value)
        g = state.graph
        if notion == "individual":
            table = emb["individual"][str(k)]
            rows = [
                {"id": g.node_ids[u], "raw": table["raw"][u], "normalized": table["normalized"][u]}
                for u in range(g.n)
            ]
        else:
            rows = [{"id": g.node_ids[u], "score": scores[u]} for u in range(g.n)]
        ranks = g.id_ranks
        if sort == "id":
            order = sorted(range(g.n), key=lambda u: ranks[u], reverse=(dir == "desc"))
        else:
            sign = -1.0 if dir == "desc" else 1.0
            order = sorted(range(g.n), key=lambda u: (sign * scores[u], ranks[u]))
        return {"dataset": dataset_id, "embedding": embedding, "config": config,
                "sort": sort, "dir": dir, "rows": [rows[u] for u in order]}

    @app.get("/datasets/{dataset_id}/diagnose/{node_id}")
    def get_diagnose(
        dataset_id: str,
        node_id: str,
        embedding: str,
        notion: str,
        k: int | None = Query(default=None),
        attribute: str | None = Query(default=None),
        value: str | None = Query(default=None),
    ) -> dict:
        state = dataset(dataset_id)
        emb = state.embedding(embedding)
        scores, _, config = _score_vector(state, emb, notion, k, attribute, value)
        g = state.graph
        if node_id not in g._index:
            raise HTTPException(404, f"unknown node {node_id!r}")
        u = g.index_of(node_id)

        if notion == "individual":
            hood = k_hop_neighborhood(g, u, k)
            hops = {int(v): int(h) for v, h in zip(hood.members, hood.hops)}
            hops[u] = 0
            sub = ego_subgraph(g, u, k)
            annotation = {g.node_ids[v]: hops[int(v)] for v in sub.parent_index}
        else:
            items = emb["recommendations"]["items"][u][:k]
            members = np.unique([u] + [g.index_of(i) for i in items])
            sub = induced_subgraph(g, NodeSet(members=members))
            labels = state.artifact["attributes"][attribute]["values"]
            annotation = {g.node_ids[v]: labels[int(v)] for v in sub.parent_index}

        points = emb["projection"]["points"]
        member_ids = [g.node_ids[v] for v in sub.parent_index]
        bundle_points = [
            {"id": i, "x": points[int(v)][0], "y": points[int(v)][1]}
            for i, v in zip(member_ids, sub.parent_index)
        ]
        xs = [p["x"] for p in bundle_points]
        ys = [p["y"] for p in bundle_points]
        sub_ids = sub.graph.node_ids
        return {
            "dataset": dataset_id,
            "embedding": embedding,
            "config": config,
            "focal": node_id,
            "focal_score": scores[u],
            "subgraph": {
                "nodes": [{"id": i, "annotation": annotation[i]} for i in member_ids],
                "edges": [[sub_ids[a], sub_ids[b]] for a, b in sub.graph.edge_array()],
            },
            "points": bundle_points,
            "context_extents": emb["projection"]["extents"],
            "focal_extents": {"x": [min(xs), max(xs)], "y": [min(ys), max(ys)]},
        }

    if static_dir is not None and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")
    return app
