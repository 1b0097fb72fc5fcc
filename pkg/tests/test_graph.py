import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from embfair import (
    Graph,
    InvalidArgument,
    NodeNotFound,
    NodeSet,
    clustering_coefficient,
    connected_components,
    ego_subgraph,
    induced_subgraph,
    k_hop_neighborhood,
    triangle_count,
)

from .oracles import adjacency_dict, bfs_k_hop, clustering_wedges, triangle_count_trace


def k3():
    return Graph.from_edge_ids([("A", "B"), ("B", "C"), ("A", "C")])


def path4():
    return Graph.from_edge_ids([("A", "B"), ("B", "C"), ("C", "D")])


def random_graph(rng, n):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
    return Graph([str(i) for i in range(n)], edges)


class TestConstruction:
    def test_normalizes_duplicates_and_loops(self):
        g = Graph(["a", "b"], [(0, 1), (1, 0), (0, 0)])
        assert g.m == 1
        assert g.degree(0) == 1

    def test_symmetry_invariant(self):
        rng = np.random.default_rng(7)
        g = random_graph(rng, 12)
        for u in range(g.n):
            for v in g.neighbors(u):
                assert u in g.neighbors(v)
        assert g.m * 2 == int(g.degrees().sum())

    def test_id_round_trip(self):
        g = path4()
        for u in range(g.n):
            assert g.index_of(g.id_of(u)) == u
        with pytest.raises(NodeNotFound):
            g.index_of("missing")

    def test_numeric_ids_rank_numerically(self):
        g = Graph.from_edge_ids([("9", "10"), ("10", "2")])
        ranked = sorted(range(g.n), key=lambda u: g.id_ranks[u])
        assert [g.node_ids[u] for u in ranked] == ["2", "9", "10"]


class TestDegree:
    def test_triangle(self):
        g = k3()
        assert all(g.degree(u) == 2 for u in range(3))

    def test_isolated(self):
        g = Graph(["x"], [])
        assert g.degree(0) == 0

    def test_path_interior(self):
        g = Graph.from_edge_ids([("A", "B"), ("B", "C")])
        assert g.degree(g.index_of("B")) == 2

    def test_unknown_node(self):
        with pytest.raises(NodeNotFound):
            k3().degree(99)


class TestKHop:
    def test_path_one_hop(self):
        g = path4()
        hood = k_hop_neighborhood(g, g.index_of("A"), 1)
        assert [g.node_ids[v] for v in hood.members] == ["B"]

    def test_path_two_hops(self):
        g = path4()
        hood = k_hop_neighborhood(g, g.index_of("A"), 2)
        assert {g.node_ids[v] for v in hood.members} == {"B", "C"}
        assert dict(zip(hood.members.tolist(), hood.hops.tolist())) == {
            g.index_of("B"): 1,
            g.index_of("C"): 2,
        }

    def test_isolated_node(self):
        g = Graph(["u"], [])
        assert len(k_hop_neighborhood(g, 0, 3)) == 0

    def test_zero_hops_rejected(self):
        with pytest.raises(InvalidArgument):
            k_hop_neighborhood(k3(), 0, 0)

    def test_matches_bfs_oracle(self):
        rng = np.random.default_rng(3)
        for _ in range(30):
            g = random_graph(rng, int(rng.integers(2, 14)))
            adj = adjacency_dict(g)
            u = int(rng.integers(g.n))
            k = int(rng.integers(1, 4))
            hood = k_hop_neighborhood(g, u, k)
            expected = bfs_k_hop(adj, u, k)
            assert dict(zip(hood.members.tolist(), hood.hops.tolist())) == expected

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=40, deadline=None)
    def test_monotone_and_symmetric(self, seed):
        rng = np.random.default_rng(seed)
        g = random_graph(rng, int(rng.integers(2, 10)))
        u = int(rng.integers(g.n))
        k = int(rng.integers(1, 4))
        smaller = set(k_hop_neighborhood(g, u, k).members.tolist())
        larger = set(k_hop_neighborhood(g, u, k + 1).members.tolist())
        assert smaller <= larger
        for v in smaller:
            assert u in set(k_hop_neighborhood(g, v, k).members.tolist())


class TestSubgraphs:
    def test_ego_of_triangle_is_triangle(self):
        g = k3()
        sub = ego_subgraph(g, 0, 1)
        assert sub.graph.n == 3 and sub.graph.m == 3

    def test_star_leaf_ego(self):
        g = Graph.from_edge_ids([("c", "l1"), ("c", "l2"), ("c", "l3"), ("c", "l4")])
        sub = ego_subgraph(g, g.index_of("l1"), 1)
        assert sorted(sub.graph.node_ids) == ["c", "l1"]
        assert sub.graph.m == 1

    def test_path_two_hop_ego(self):
        g = path4()
        sub = ego_subgraph(g, g.index_of("A"), 2)
        assert sorted(sub.graph.node_ids) == ["A", "B", "C"]
        assert sub.graph.m == 2

    def test_ego_node_set_matches_k_hop(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            g = random_graph(rng, int(rng.integers(2, 12)))
            u = int(rng.integers(g.n))
            k = int(rng.integers(1, 4))
            sub = ego_subgraph(g, u, k)
            hood = set(k_hop_neighborhood(g, u, k).members.tolist()) | {u}
            assert set(sub.parent_index.tolist()) == hood

    def test_induced_pair_from_triangle(self):
        g = k3()
        sub = induced_subgraph(g, NodeSet(members=np.array([0, 1])))
        assert sub.graph.n == 2 and sub.graph.m == 1

    def test_induced_empty(self):
        sub = induced_subgraph(k3(), NodeSet(members=np.array([], dtype=np.int64)))
        assert sub.graph.n == 0 and sub.graph.m == 0

    def test_induced_five_cycle(self):
        g = Graph([str(i) for i in range(5)], [(i, (i + 1) % 5) for i in range(5)])
        sub = induced_subgraph(g, NodeSet(members=np.array([1, 2, 4])))
        assert sub.graph.n == 3 and sub.graph.m == 1
        assert sub.graph.has_edge(
            sub.graph.index_of("1"), sub.graph.index_of("2")
        )


class TestComponents:
    def test_path_is_one_component(self):
        count, labels = connected_components(path4())
        assert count == 1
        assert set(labels.tolist()) == {0}

    def test_two_disjoint_edges(self):
        g = Graph.from_edge_ids([("a", "b"), ("c", "d")])
        count, labels = connected_components(g)
        assert count == 2
        assert labels.tolist() == [0, 0, 1, 1]

    def test_empty_graph(self):
        count, labels = connected_components(Graph([], []))
        assert count == 0 and len(labels) == 0

    def test_count_invariant_under_relabeling(self):
        rng = np.random.default_rng(5)
        g = random_graph(rng, 10)
        perm = rng.permutation(10)
        remapped = Graph(
            [str(i) for i in range(10)],
            [(int(perm[a]), int(perm[b])) for a, b in g.edge_array()],
        )
        assert connected_components(g)[0] == connected_components(remapped)[0]


class TestTrianglesAndClustering:
    def test_k3(self):
        assert triangle_count(k3()) == 1
        assert clustering_coefficient(k3()) == 1.0

    def test_k4(self):
        g = Graph([str(i) for i in range(4)], [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert triangle_count(g) == 4

    def test_path_has_none(self):
        assert triangle_count(path4()) == 0
        g = Graph.from_edge_ids([("c", "a"), ("c", "b"), ("c", "d")])
        assert clustering_coefficient(g) == 0.0

    def test_k4_minus_edge(self):
        g = Graph([str(i) for i in range(4)], [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        # two degree-2 nodes are fully closed; the two degree-3 nodes close 2/3 of wedges
        assert clustering_coefficient(g) == pytest.approx((1 + 1 + 2 / 3 + 2 / 3) / 4)

    def test_matches_trace_oracle(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            g = random_graph(rng, int(rng.integers(2, 16)))
            assert triangle_count(g) == triangle_count_trace(g)
            assert clustering_coefficient(g) == pytest.approx(clustering_wedges(g), abs=1e-12)
