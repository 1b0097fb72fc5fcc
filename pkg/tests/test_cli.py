import json

import pytest

from embfair.cli import main

from .test_pipeline import make_dataset, write


@pytest.fixture
def k3_file(tmp_path):
    return str(write(tmp_path / "k3.txt", "A B\nB C\nA C\n"))


class TestSummarize:
    def test_density_one_in_output(self, k3_file, capsys):
        assert main(["summarize", k3_file, "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["density"] == 1.0

    def test_missing_file_exits_one(self, tmp_path, capsys):
        assert main(["summarize", str(tmp_path / "nope.txt")]) == 1
        assert "error" in capsys.readouterr().err

    def test_bins_flag(self, k3_file, capsys):
        assert main(["summarize", k3_file, "--bins", "5", "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert len(report["degree_histogram"]) == 5

    def test_table_format(self, k3_file, capsys):
        assert main(["summarize", k3_file]) == 0
        out = capsys.readouterr().out
        assert "density" in out and "1" in out


class TestScore:
    @pytest.fixture
    def race_files(self, tmp_path):
        edges = write(tmp_path / "edges.txt", "1 5\n1 4\n3 5\n4 5\n2 2\n")
        coords = {"1": (1, 0.5), "2": (0, 1), "3": (-1, 0.9), "4": (0, 2), "5": (2, 0.3)}
        emb = write(
            tmp_path / "emb.txt",
            "\n".join(f"{i} {x} {y}" for i, (x, y) in coords.items()) + "\n",
        )
        attrs = write(tmp_path / "attr.csv", "id,race\n1,w\n2,w\n3,w\n4,b\n5,b\n")
        return str(edges), str(emb), str(attrs)

    def test_group_bias_line(self, race_files, capsys):
        edges, emb, attrs = race_files
        code = main([
            "score", edges, emb, "--notion", "group", "--k", "1",
            "--attrs-file", attrs, "--value", "b", "--format", "csv",
        ])
        assert code == 0
        out = capsys.readouterr().out
        assert "0.1" in out
        assert out.splitlines()[0] == "id,score"

    def test_group_json_fields(self, race_files, capsys):
        edges, emb, attrs = race_files
        assert main([
            "score", edges, emb, "--notion", "group", "--k", "1",
            "--attrs-file", attrs, "--value", "b", "--format", "json",
        ]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["attribute_bias"] == pytest.approx(0.1)
        assert {row["id"]: row["score"] for row in doc["rows"]} == pytest.approx(
            {"1": 0.5, "2": -0.5, "3": -0.5, "4": 0.5, "5": 0.5}
        )

    def test_identical_embeddings_zero_scores(self, tmp_path, capsys):
        edges = write(tmp_path / "e.txt", "a b\nb c\n")
        emb = write(tmp_path / "y.txt", "a 1 1\nb 1 1\nc 1 1\n")
        assert main([
            "score", str(edges), str(emb), "--notion", "individual", "--format", "json",
        ]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert all(row["raw"] == 0.0 for row in doc["rows"])

    def test_csv_header(self, tmp_path, capsys):
        edges = write(tmp_path / "e.txt", "a b\n")
        emb = write(tmp_path / "y.txt", "a 0 0\nb 1 0\n")
        assert main([
            "score", str(edges), str(emb), "--notion", "individual", "--format", "csv",
        ]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "id,raw,normalized"

    def test_group_without_attrs_is_usage_error(self, tmp_path, capsys):
        edges = write(tmp_path / "e.txt", "a b\n")
        emb = write(tmp_path / "y.txt", "a 0 0\nb 1 0\n")
        assert main(["score", str(edges), str(emb), "--notion", "group"]) == 1
        assert "attrs-file" in capsys.readouterr().err


class TestPrecomputeAndServe:
    def test_artifact_created(self, tmp_path, capsys):
        manifest = make_dataset(tmp_path)
        out_dir = tmp_path / "artifacts"
        assert main(["precompute", str(manifest), "--out-dir", str(out_dir)]) == 0
        printed = capsys.readouterr().out.strip()
        assert (out_dir / "toy.json").is_file()
        assert printed.endswith("toy.json")

    def test_corrupt_manifest_no_partial_file(self, tmp_path, capsys):
        bad = write(tmp_path / "bad.json", "{not json")
        out_dir = tmp_path / "artifacts"
        assert main(["precompute", str(bad), "--out-dir", str(out_dir)]) == 1
        assert not out_dir.exists() or not list(out_dir.iterdir())

    def test_unknown_flag_exits_one(self, capsys):
        assert main(["summarize", "--bogus"]) == 1
