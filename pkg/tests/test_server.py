import pytest
from fastapi.testclient import TestClient

from embfair import load_manifest, precompute
from embfair.server import create_app

from .test_pipeline import make_dataset, write


@pytest.fixture
def client(tmp_path):
    manifest = load_manifest(make_dataset(tmp_path))
    precompute(manifest, tmp_path / "artifacts")
    app = create_app(tmp_path / "artifacts")
    return TestClient(app)


OVERVIEW_PARAMS = {"embedding": "emb0", "notion": "individual", "k": 1}
GROUP_PARAMS = {
    "embedding": "emb0",
    "notion": "group",
    "k": 1,
    "attribute": "gender",
    "value": "1",
}


class TestDatasets:
    def test_lists_loaded_dataset(self, client):
        body = client.get("/datasets").json()
        assert len(body) == 1
        assert body[0]["id"] == "toy"
        assert body[0]["embeddings"] == ["emb0", "emb1"]

    def test_empty_directory(self, tmp_path):
        app = create_app(tmp_path / "nothing")
        body = TestClient(app).get("/datasets")
        assert body.status_code == 200 and body.json() == []

    def test_ids_sorted(self, tmp_path):
        for name in ("zeta", "alpha"):
            sub = tmp_path / name
            sub.mkdir()
            manifest_path = make_dataset(sub)
            import json

            doc = json.loads(manifest_path.read_text())
            doc["id"] = name
            write(manifest_path, json.dumps(doc))
            precompute(load_manifest(manifest_path), tmp_path / "artifacts")
        app = create_app(tmp_path / "artifacts")
        ids = [d["id"] for d in TestClient(app).get("/datasets").json()]
        assert ids == ["alpha", "zeta"]


class TestSummary:
    def test_report_fields(self, client):
        body = client.get("/datasets/toy/summary").json()
        assert body["n"] == 4 and body["m"] == 4
        assert sum(b["count"] for b in body["degree_histogram"]) == body["n"]

    def test_unknown_dataset_404(self, client):
        resp = client.get("/datasets/ghost/summary")
        assert resp.status_code == 404
        assert "detail" in resp.json()


class TestOverview:
    def test_individual_passthrough(self, client):
        body = client.get("/datasets/toy/overview", params=OVERVIEW_PARAMS).json()
        artifact_scores = client.get(
            "/datasets/toy/scores",
            params={**OVERVIEW_PARAMS, "sort": "id", "dir": "asc"},
        ).json()["rows"]
        by_id = {row["id"]: row["normalized"] for row in artifact_scores}
        for node in body["nodes"]:
            assert node["score"] == by_id[node["id"]]
        assert body["color_domain"][0] == 0.0

    def test_group_scores(self, client):
        body = client.get("/datasets/toy/overview", params=GROUP_PARAMS).json()
        assert len(body["nodes"]) == 4
        assert body["config"]["value"] == "1"

    def test_invalid_k_400(self, client):
        resp = client.get(
            "/datasets/toy/overview", params={**OVERVIEW_PARAMS, "k": 9}
        )
        assert resp.status_code == 400

    def test_unknown_embedding_404(self, client):
        resp = client.get(
            "/datasets/toy/overview", params={**OVERVIEW_PARAMS, "embedding": "nope"}
        )
        assert resp.status_code == 404

    def test_identical_requests_identical_bodies(self, client):
        a = client.get("/datasets/toy/overview", params=OVERVIEW_PARAMS)
        b = client.get("/datasets/toy/overview", params=OVERVIEW_PARAMS)
        assert a.content == b.content


class TestScores:
    def test_sort_by_score_desc(self, client):
        rows = client.get(
            "/datasets/toy/scores",
            params={**OVERVIEW_PARAMS, "sort": "score", "dir": "desc"},
        ).json()["rows"]
        values = [row["normalized"] for row in rows]
        assert values == sorted(values, reverse=True)
        assert values[0] == max(values)

    def test_sort_by_id_asc(self, client):
        rows = client.get(
            "/datasets/toy/scores", params={**OVERVIEW_PARAMS, "sort": "id", "dir": "asc"}
        ).json()["rows"]
        assert [row["id"] for row in rows] == ["0", "1", "2", "3"]

    def test_equal_scores_tie_by_id(self, client):
        rows = client.get(
            "/datasets/toy/scores",
            params={**GROUP_PARAMS, "sort": "score", "dir": "asc"},
        ).json()["rows"]
        for a, b in zip(rows, rows[1:]):
            if a["score"] == b["score"]:
                assert int(a["id"]) < int(b["id"])

    def test_bad_sort_key_400(self, client):
        resp = client.get(
            "/datasets/toy/scores", params={**OVERVIEW_PARAMS, "sort": "rank"}
        )
        assert resp.status_code == 400


class TestDiagnose:
    def test_individual_star_center(self, tmp_path):
        write(tmp_path / "edges.txt", "c 1\nc 2\nc 3\nc 4\n")
        rows = "\n".join(
            f"{i} {float(j)} 1.0" for j, i in enumerate(["c", "1", "2", "3", "4"])
        )
        write(tmp_path / "emb.txt", rows + "\n")
        import json

        write(
            tmp_path / "m.json",
            json.dumps(
                {
                    "id": "star",
                    "graph": "edges.txt",
                    "embeddings": {"e": "emb.txt"},
                    "individual_hops": [1],
                    "group_top_k": [],
                }
            ),
        )
        precompute(load_manifest(tmp_path / "m.json"), tmp_path / "artifacts")
        client = TestClient(create_app(tmp_path / "artifacts"))
        body = client.get(
            "/datasets/star/diagnose/c",
            params={"embedding": "e", "notion": "individual", "k": 1},
        ).json()
        nodes = {n["id"]: n["annotation"] for n in body["subgraph"]["nodes"]}
        assert nodes["c"] == 0
        assert all(nodes[i] == 1 for i in ("1", "2", "3", "4"))
        assert len(body["points"]) == 5
        assert body["focal"] == "c"

    def test_group_bundle_race_fixture(self, tmp_path):
        # the five-node fixture with rho_1(2) = {4}; node 2 enters the node
        # set via a dropped self-loop line
        import json

        write(tmp_path / "edges.txt", "1 5\n1 4\n3 5\n4 5\n2 2\n")
        coords = {"1": (1, 0.5), "2": (0, 1), "3": (-1, 0.9), "4": (0, 2), "5": (2, 0.3)}
        write(
            tmp_path / "emb.txt",
            "\n".join(f"{i} {x} {y}" for i, (x, y) in coords.items()) + "\n",
        )
        write(tmp_path / "attr.csv", "id,race\n1,w\n2,w\n3,w\n4,b\n5,b\n")
        manifest = {
            "id": "race",
            "graph": "edges.txt",
            "embeddings": {"e": "emb.txt"},
            "attributes": {"race": "attr.csv"},
            "individual_hops": [1],
            "group_top_k": [1],
        }
        write(tmp_path / "m.json", json.dumps(manifest))
        precompute(load_manifest(tmp_path / "m.json"), tmp_path / "artifacts")
        client = TestClient(create_app(tmp_path / "artifacts"))
        body = client.get(
            "/datasets/race/diagnose/2",
            params={
                "embedding": "e", "notion": "group", "k": 1,
                "attribute": "race", "value": "b",
            },
        ).json()
        nodes = {n["id"]: n["annotation"] for n in body["subgraph"]["nodes"]}
        assert nodes == {"2": "w", "4": "b"}
        assert body["subgraph"]["edges"] == []
        assert body["focal_score"] == pytest.approx(-0.5)

    def test_unknown_node_404(self, client):
        resp = client.get(
            "/datasets/toy/diagnose/ghost", params=OVERVIEW_PARAMS
        )
        assert resp.status_code == 404

    def test_group_diagnose_members(self, client):
        body = client.get("/datasets/toy/diagnose/3", params=GROUP_PARAMS).json()
        ids = {n["id"] for n in body["subgraph"]["nodes"]}
        assert "3" in ids
        assert {p["id"] for p in body["points"]} == ids
        labels = {n["id"]: n["annotation"] for n in body["subgraph"]["nodes"]}
        assert labels["3"] == "1"
        ext = body["context_extents"]
        assert ext["x"][0] <= body["focal_extents"]["x"][0]
        assert ext["x"][1] >= body["focal_extents"]["x"][1]
