"""End-to-end pipeline: dataset files, offline precompute, HTTP queries.

Writes a small dataset to a scratch directory, runs the precompute step
that the `embfair precompute` command wraps, and queries the resulting
artifact through the in-process HTTP app (the same one `embfair serve`
exposes).
"""

import json
import tempfile
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from embfair import load_manifest, precompute
from embfair.server import create_app

root = Path(tempfile.mkdtemp(prefix="embfair-demo-"))
print(f"writing dataset under {root}")

rng = np.random.default_rng(99)
n = 40
edges = sorted({(int(a), int(b)) for a, b in rng.integers(0, n, size=(160, 2)) if a != b})
(root / "edges.txt").write_text(
    "\n".join(f"{min(a,b)} {max(a,b)}" for a, b in edges) + "\n"
)
(root / "emb.txt").write_text(
    "\n".join(f"{u} " + " ".join(f"{x:.5f}" for x in rng.normal(size=8)) for u in range(n)) + "\n"
)
(root / "labels.csv").write_text(
    "id,team\n" + "\n".join(f"{u},{'red' if u % 3 else 'blue'}" for u in range(n)) + "\n"
)
(root / "manifest.json").write_text(json.dumps({
    "id": "demo",
    "name": "Demo network",
    "graph": "edges.txt",
    "embeddings": {"gauss8": "emb.txt"},
    "attributes": {"team": "labels.csv"},
    "individual_hops": [1, 2],
    "group_top_k": [1, 5],
    "layout_seed": 11,
}))

manifest = load_manifest(root / "manifest.json")
artifact, path = precompute(manifest, root / "artifacts")
print(f"artifact written to {path} ({path.stat().st_size} bytes)")
print(f"score tables inside: individual ks={list(artifact['embeddings']['gauss8']['individual'])}, "
      f"group attrs={list(artifact['embeddings']['gauss8']['group'])}")

client = TestClient(create_app(root / "artifacts"))
print("\nGET /datasets ->", [d["id"] for d in client.get("/datasets").json()])

summary = client.get("/datasets/demo/summary").json()
print(f"GET /datasets/demo/summary -> n={summary['n']} m={summary['m']}")

overview = client.get(
    "/datasets/demo/overview",
    params={"embedding": "gauss8", "notion": "individual", "k": 2},
).json()
print(f"GET .../overview -> {len(overview['nodes'])} positioned nodes, "
      f"{len(overview['edges'])} salient edges, color domain {overview['color_domain']}")

rows = client.get(
    "/datasets/demo/scores",
    params={"embedding": "gauss8", "notion": "individual", "k": 2,
            "sort": "score", "dir": "desc"},
).json()["rows"]
focal = rows[0]["id"]
print(f"most unfair node at k=2: {focal} (normalized {rows[0]['normalized']:.3f})")

bundle = client.get(
    f"/datasets/demo/diagnose/{focal}",
    params={"embedding": "gauss8", "notion": "individual", "k": 2},
).json()
print(f"GET .../diagnose/{focal} -> subgraph of {len(bundle['subgraph']['nodes'])} nodes, "
      f"{len(bundle['points'])} projected points")
print("hop annotations:", sorted({node['annotation'] for node in bundle['subgraph']['nodes']}))
