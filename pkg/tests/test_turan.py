"""
Tests for clique lifting and the deletion-method constructions.
"""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle, graph
from generators import bipartite_hedgehog, complete_kpartite, erdos_renyi
from hgraph import ArgumentError, BudgetExceeded, Hypergraph, PreconditionError, skeleton
from oracle import find_embedding
from turan import (
    clique_hypergraph,
    count_cliques,
    deletion_construction_complete,
    deletion_construction_skeletal,
    iter_cliques,
    min_degree_subhypergraph,
    remove_copies,
)


def complete_graph(n):
    return graph(n, list(combinations(range(n), 2)))


class TestCliques:

    def test_triangles_of_k4(self):
        assert sorted(iter_cliques(complete_graph(4), 3)) == list(combinations(range(4), 3))

    def test_k4s_of_k5(self):
        assert count_cliques(complete_graph(5), 4) == 5

    def test_lifted_triangle(self, triangle):
        assert clique_hypergraph(triangle, 3).edges == {(0, 1, 2)}

    def test_three_uniform(self):
        K = Hypergraph(k=3, n=4, edges=combinations(range(4), 3))
        assert count_cliques(K, 4) == 1
        assert count_cliques(K.with_edges(list(K.edges)[:3]), 4) == 0

    def test_same_uniformity(self, c4):
        assert set(iter_cliques(c4, 2)) == c4.edges

    def test_lower_uniformity_rejected(self, single_edge3):
        with pytest.raises(ArgumentError):
            list(iter_cliques(single_edge3, 2))

    def test_cap(self):
        with pytest.raises(BudgetExceeded):
            count_cliques(complete_graph(6), 3, cap=5)

    @given(st.integers(min_value=0, max_value=10_000), st.sampled_from([3, 4]))
    @settings(max_examples=40, deadline=None)
    def test_counts_match_subsets(self, seed, k):
        G = erdos_renyi(2, 8, 0.5, seed)
        expected = sum(
            1 for s in combinations(range(8), k) if all(p in G.edges for p in combinations(s, 2))
        )
        assert count_cliques(G, k) == expected


class TestMinDegree:

    def test_octahedron_is_its_own_core(self):
        core = min_degree_subhypergraph(complete_kpartite([2, 2, 2]), 1, 4)
        assert core.n == 6
        assert core.num_edges == 12

    def test_core_empty_above_degeneracy(self):
        assert min_degree_subhypergraph(complete_kpartite([2, 2, 2]), 1, 5) is None

    def test_hedgehog_core(self, hedgehog3):
        core = min_degree_subhypergraph(hedgehog3, 1, 3)
        assert core.n == 6
        assert core.edges == skeleton(complete_kpartite([3, 3]), 1).edges

    def test_index_range(self, hedgehog3):
        with pytest.raises(ArgumentError):
            min_degree_subhypergraph(hedgehog3, 0, 1)


class TestRemoveCopies:

    def test_kills_every_triangle(self, triangle):
        G, removed = remove_copies(complete_graph(5), triangle)
        assert find_embedding(triangle, G) is None
        assert G.num_edges == 10 - removed

    def test_free_host_untouched(self, triangle):
        G, removed = remove_copies(cycle(6), triangle)
        assert removed == 0
        assert G.edges == cycle(6).edges

    def test_needs_an_edge(self, c4):
        with pytest.raises(ArgumentError):
            remove_copies(c4, Hypergraph(k=2, n=2))


class TestCompleteConstruction:

    def test_c4_free_graph(self, k22):
        G, report = deletion_construction_complete(k=2, d=2, n=30, seed=0)
        assert report.hfree_verified is True
        assert find_embedding(k22, G) is None
        assert report.final_edges == G.num_edges == report.sampled_edges - report.removed

    def test_deterministic(self):
        first = deletion_construction_complete(k=2, d=2, n=20, seed=3)
        second = deletion_construction_complete(k=2, d=2, n=20, seed=3)
        assert first[0] == second[0]
        assert first[1] == second[1]

    def test_small_n_is_subasymptotic(self):
        _, report = deletion_construction_complete(k=3, d=2, n=4, seed=1)
        assert report.regime == "subasymptotic"
        assert report.meets_floor is None

    @pytest.mark.parametrize("k,d", [(1, 2), (2, 1)])
    def test_bad_parameters(self, k, d):
        with pytest.raises(ArgumentError):
            deletion_construction_complete(k=k, d=d, n=10, seed=0)


class TestSkeletalConstruction:

    def test_octahedron_core(self):
        H = complete_kpartite([2, 2, 2])
        G, report = deletion_construction_skeletal(H, 1, 4, 12, seed=0, retries=3)
        assert report.hfree_verified is True
        assert find_embedding(H, G) is None
        assert report.clique_count_after == G.num_edges
        assert report.attempts <= 3

    def test_hedgehog_core(self, hedgehog3):
        """A hedgehog is 1-degenerate at the top, so its 4-core is empty."""
        with pytest.raises(PreconditionError):
            deletion_construction_skeletal(hedgehog3, 2, 4, 10, seed=0)

    def test_d_must_exceed_binomial(self):
        with pytest.raises(PreconditionError):
            deletion_construction_skeletal(complete_kpartite([2, 2, 2]), 1, 3, 10, seed=0)

    def test_bipartite_hedgehog_graph_core(self):
        H = bipartite_hedgehog(3, 4)
        G, report = deletion_construction_skeletal(H, 1, 4, 10, seed=5)
        assert report.family == "skeletal"
        assert report.hfree_verified is True
