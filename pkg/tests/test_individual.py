import numpy as np
import pytest

from embfair import (
    EmbeddingMatrix,
    Graph,
    InvalidData,
    individual_score,
    individual_score_table,
)

from .conftest import random_instance
from .oracles import individual_scores


class TestGoldenValues:
    def test_four_node_chain(self, four_node_chain):
        g, y = four_node_chain
        a = g.index_of("A")
        assert individual_score(g, y, a, 1) == 17.0
        assert individual_score(g, y, a, 2) == 81.0

    def test_identical_embeddings_score_zero(self):
        g = Graph.from_edge_ids([("a", "b"), ("b", "c"), ("a", "c")])
        y = EmbeddingMatrix(np.tile([2.0, -1.0], (3, 1)))
        for k in (1, 2, 3):
            assert all(individual_score(g, y, u, k) == 0.0 for u in range(g.n))

    def test_two_node_table(self):
        g = Graph.from_edge_ids([("u", "v")])
        y = EmbeddingMatrix(np.array([[0.0, 0.0], [2.0, 0.0]]))
        table = individual_score_table(g, y, 1)
        assert table.raw.tolist() == [4.0, 4.0]
        assert table.degree_normalized.tolist() == [4.0, 4.0]
        assert table.normalized.tolist() == [1.0, 1.0]

    def test_isolated_node_scores_zero(self):
        g = Graph.from_edge_ids([("a", "b")], isolated=["x"])
        y = EmbeddingMatrix(np.array([[0.0], [3.0], [100.0]]))
        table = individual_score_table(g, y, 1)
        x = g.index_of("x")
        assert table.raw[x] == 0.0
        assert table.normalized[x] == 0.0


class TestOracleAgreement:
    def test_random_instances(self):
        rng = np.random.default_rng(1234)
        for _ in range(40):
            g, y, _ = random_instance(rng)
            k = int(rng.integers(1, 4))
            raw, dn, norm = individual_scores(g, y.values, k)
            table = individual_score_table(g, y, k)
            np.testing.assert_allclose(table.raw, raw, atol=1e-9)
            np.testing.assert_allclose(table.degree_normalized, dn, atol=1e-9)
            np.testing.assert_allclose(table.normalized, norm, atol=1e-9)
            u = int(rng.integers(g.n))
            assert individual_score(g, y, u, k) == pytest.approx(raw[u], abs=1e-9)


class TestProperties:
    def test_monotone_in_hops(self):
        rng = np.random.default_rng(55)
        for _ in range(25):
            g, y, _ = random_instance(rng)
            for u in range(g.n):
                prev = 0.0
                for k in range(1, 5):
                    score = individual_score(g, y, u, k)
                    assert score >= prev - 1e-12
                    prev = score

    def test_stabilizes_past_diameter(self):
        g = Graph.from_edge_ids([("a", "b"), ("b", "c"), ("c", "d")])
        y = EmbeddingMatrix(np.arange(8, dtype=float).reshape(4, 2))
        assert individual_score(g, y, 0, 3) == individual_score(g, y, 0, 9)

    def test_translation_invariance_and_scale_covariance(self):
        rng = np.random.default_rng(77)
        g, y, _ = random_instance(rng)
        shifted = EmbeddingMatrix(y.values + 13.5)
        scaled = EmbeddingMatrix(y.values * 3.0)
        base = individual_score_table(g, y, 2)
        np.testing.assert_allclose(
            individual_score_table(g, shifted, 2).raw, base.raw, atol=1e-9
        )
        np.testing.assert_allclose(
            individual_score_table(g, scaled, 2).raw, base.raw * 9.0, rtol=1e-9
        )
        np.testing.assert_allclose(
            individual_score_table(g, scaled, 2).normalized, base.normalized, atol=1e-12
        )

    def test_normalized_range_with_unit_max(self):
        rng = np.random.default_rng(88)
        for _ in range(20):
            g, y, _ = random_instance(rng)
            table = individual_score_table(g, y, 1)
            assert np.all(table.normalized >= 0.0)
            assert np.all(table.normalized <= 1.0)
            if np.any(table.raw > 0):
                assert table.normalized.max() == 1.0

    def test_misaligned_matrix_rejected(self):
        g = Graph.from_edge_ids([("a", "b")])
        y = EmbeddingMatrix(np.zeros((3, 2)))
        with pytest.raises(InvalidData):
            individual_score_table(g, y, 1)
        with pytest.raises(InvalidData):
            individual_score(g, y, 0, 1)
