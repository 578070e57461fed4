"""
Tests for the hypergraph core: skeletons, partial edges, degeneracy, defects, seeding and files.
"""

import json
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph
from generators import bipartite_hedgehog, complete_kpartite, erdos_renyi, random_kpartite
from hgraph import (
    ArgumentError,
    Defect,
    DefectMeter,
    FormatError,
    Hypergraph,
    SizeError,
    average_defect,
    closing_counts,
    common_neighborhood,
    defect_lower_bound_check,
    degeneracy,
    derive_seed,
    edge_count_bound_check,
    greedy_coloring,
    induced,
    max_skeletal_degeneracy,
    omega_theta,
    partial_edges,
    pe_restricted,
    set_defect,
    simultaneous_ordering,
    skeletal_binomial_check,
    skeletal_degeneracy,
    skeletal_profile,
    skeleton,
    trace_counts,
    verify_certificate,
)
from hgraph.io import load_hypergraph, read_payload, validate_coloring_payload, validate_hypergraph_payload
from replay import closing_degeneracy, neighborhood, omega


def random_uniform(k, n, m, seed):
    """A k-uniform hypergraph with exactly m edges chosen uniformly."""
    rng = np.random.default_rng(seed)
    candidates = list(combinations(range(n), k))
    picks = rng.choice(len(candidates), size=m, replace=False)
    return Hypergraph(k=k, n=n, edges=[candidates[int(i)] for i in picks])


class TestSkeleton:
    """skeleton(H, i)."""

    def test_single_edge(self, single_edge3):
        """A 3-edge's 1-skeleton is a triangle."""
        assert skeleton(single_edge3, 1).edges == {(0, 1), (0, 2), (1, 2)}

    def test_complete_tripartite(self):
        """K^(3)_{2,2,2} shadows onto the complete 3-partite graph."""
        S = skeleton(complete_kpartite([2, 2, 2]), 1)
        assert S.k == 2
        assert S.num_edges == 12
        assert all(S.part_of(a) != S.part_of(b) for a, b in S.edges)

    def test_hedgehog(self):
        """H_2^(3) has 8 vertices and 12 skeleton edges."""
        S = skeleton(bipartite_hedgehog(3, 2), 1)
        assert S.n == 8
        assert S.num_edges == 12

    def test_top_index_is_identity(self, single_edge3):
        assert skeleton(single_edge3, 2) is single_edge3

    @pytest.mark.parametrize("i", [-1, 3, 7])
    def test_index_out_of_range(self, single_edge3, i):
        with pytest.raises(IndexError):
            skeleton(single_edge3, i)

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=30, deadline=None)
    def test_chain(self, seed):
        """Skeletons of skeletons agree with direct skeletons."""
        H = erdos_renyi(4, 7, 0.15, seed)
        for j in range(1, 4):
            for i in range(0, j + 1):
                assert skeleton(skeleton(H, j), i).edges == skeleton(H, i).edges


class TestPartialEdges:
    """partial_edges and pe_restricted."""

    def test_empty(self):
        assert partial_edges(Hypergraph(k=3, n=4)).members == frozenset()

    def test_single_edge_powerset(self, single_edge3):
        members = partial_edges(single_edge3).members
        assert len(members) == 8
        assert () in members and (0, 1, 2) in members

    def test_two_disjoint_edges(self):
        members = partial_edges(graph(4, [(0, 1), (2, 3)])).members
        assert members == {(), (0,), (1,), (2,), (3,), (0, 1), (2, 3)}

    def test_restricted_to_nothing(self, single_edge3):
        assert pe_restricted(single_edge3, []).members == {()}

    def test_restricted_to_an_edge(self, single_edge3):
        assert pe_restricted(single_edge3, [0, 1, 2]).members == partial_edges(single_edge3).members

    def test_restricted_to_non_pair(self):
        """Q = {0, 2} spans no edge pair: only the empty set and its singletons."""
        G = graph(4, [(0, 1), (2, 3)])
        assert pe_restricted(G, [0, 2]).members == {(), (0,), (2,)}

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=25, deadline=None)
    def test_downward_closed(self, seed):
        G = erdos_renyi(3, 7, 0.3, seed)
        members = partial_edges(G).members
        for s in members:
            for r in range(len(s)):
                assert all(sub in members for sub in combinations(s, r))
        assert pe_restricted(G, range(G.n)).members == members


class TestCommonNeighborhood:
    """common_neighborhood(G, E)."""

    def test_empty_set_gives_non_isolated(self):
        G = Hypergraph(k=3, n=5, edges=[(0, 1, 2)])
        assert common_neighborhood(G, [()]) == {0, 1, 2}

    def test_two_singletons(self, single_edge3):
        assert common_neighborhood(single_edge3, [(0,), (1,)]) == {2}

    def test_empty_family_is_everything(self, single_edge3):
        assert common_neighborhood(single_edge3, []) == {0, 1, 2}

    def test_full_edge_rejected(self, single_edge3):
        with pytest.raises(SizeError):
            common_neighborhood(single_edge3, [(0, 1, 2)])

    @given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=40, deadline=None)
    def test_matches_definition(self, g_seed, e_seed):
        G = erdos_renyi(3, 7, 0.3, g_seed)
        members = sorted(s for s in partial_edges(G).members if len(s) < 3)
        if not members:
            return
        rng = np.random.default_rng(e_seed)
        E = [members[int(i)] for i in rng.choice(len(members), size=min(3, len(members)), replace=False)]
        expected = {
            v
            for v in range(G.n)
            if all(v not in e and tuple(sorted(e + (v,))) in G.partial_members for e in E)
        }
        assert common_neighborhood(G, E) == expected
        # antitone: a larger family never gains a vertex
        assert common_neighborhood(G, E) <= common_neighborhood(G, E[:1])


class TestDegeneracy:
    """degeneracy and skeletal_degeneracy with their certificates."""

    def test_path(self):
        assert degeneracy(graph(4, [(0, 1), (1, 2), (2, 3)])).value == 1

    def test_k5(self):
        assert degeneracy(graph(5, list(combinations(range(5), 2)))).value == 4

    def test_k4_3(self):
        H = Hypergraph(k=3, n=4, edges=combinations(range(4), 3))
        cert = degeneracy(H)
        assert cert.value == 3
        assert verify_certificate(H, cert)

    def test_edgeless(self):
        cert = degeneracy(Hypergraph(k=2, n=3))
        assert cert.value == 0
        assert verify_certificate(Hypergraph(k=2, n=3), cert)

    def test_complete_tripartite(self):
        assert skeletal_degeneracy(complete_kpartite([2, 2, 2]), 1).value == 4

    def test_hedgehog_top(self):
        assert skeletal_degeneracy(bipartite_hedgehog(4, 3), 3).value == 1

    def test_hedgehog_bottom(self):
        assert skeletal_degeneracy(bipartite_hedgehog(3, 4), 1).value == 4

    @pytest.mark.parametrize("k", [2, 3, 4])
    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_complete_kpartite_closed_form(self, k, d):
        """d_1(K^(k)_{d,...,d}) = (k - 1) d."""
        assert skeletal_degeneracy(complete_kpartite([d] * k), 1).value == (k - 1) * d

    @pytest.mark.parametrize("k,d", [(k, d) for k in (3, 4) for d in range(k, 6)])
    def test_hedgehog_closed_form(self, k, d):
        H = bipartite_hedgehog(k, d)
        assert skeletal_degeneracy(H, k - 1).value == 1
        assert skeletal_degeneracy(H, 1).value == d

    def test_closing_counts(self):
        path = graph(4, [(0, 1), (1, 2), (2, 3)])
        assert closing_counts(path, [0, 1, 2, 3]) == [0, 1, 1, 1]
        assert closing_counts(path, [1, 2, 0, 3]) == [0, 1, 1, 1]

    def test_profiles(self):
        assert skeletal_profile(complete_kpartite([2, 2, 2])) == (4, 4)
        assert skeletal_profile(bipartite_hedgehog(3, 4)) == (4, 1)
        assert skeletal_profile(graph(3, [(0, 1)])) == (1,)

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=30, deadline=None)
    def test_certificate_matches_all_orders(self, seed):
        """The peeling value is the best closing count over every ordering."""
        H = erdos_renyi(3, 6, 0.35, seed)
        cert = degeneracy(H)
        assert verify_certificate(H, cert)
        assert cert.value == closing_degeneracy(H)

    @given(st.integers(min_value=0, max_value=10_000), st.sampled_from([2, 3, 4]))
    @settings(max_examples=40, deadline=None)
    def test_skeletal_chain(self, seed, k):
        """d_1 <= d_max and every d_i <= C(d_1, i)."""
        H = erdos_renyi(k, 9, 0.2, seed)
        d1 = skeletal_degeneracy(H, 1).value
        assert d1 <= max_skeletal_degeneracy(H)
        assert skeletal_binomial_check(H)


class TestSimultaneousOrdering:
    """Trace counts along simultaneous_ordering stay below k^2 d_max."""

    def check(self, H):
        order = simultaneous_ordering(H)
        assert sorted(order) == list(range(H.n))
        bound = H.k ** 2 * max_skeletal_degeneracy(H)
        assert max(trace_counts(H, order), default=0) <= bound

    def test_single_edge(self, single_edge3):
        self.check(single_edge3)

    def test_complete_tripartite(self):
        self.check(complete_kpartite([2, 2, 2]))

    @pytest.mark.parametrize("seed", range(5))
    def test_random(self, seed):
        self.check(random_uniform(3, 10, 20, seed))


class TestEdgeCountBound:
    """e(H) <= d_1(H)^(k-1) n."""

    def test_single_edge(self, single_edge3):
        assert edge_count_bound_check(single_edge3)

    def test_complete_tripartite(self):
        assert edge_count_bound_check(complete_kpartite([2, 2, 2]))

    def test_needs_k_two(self):
        with pytest.raises(ValueError):
            edge_count_bound_check(Hypergraph(k=1, n=2, edges=[(0,)]))

    @given(st.integers(min_value=0, max_value=100_000), st.sampled_from([2, 3, 4]), st.integers(min_value=4, max_value=14))
    @settings(max_examples=60, deadline=None)
    def test_random(self, seed, k, n):
        assert edge_count_bound_check(erdos_renyi(k, n, 0.25, seed))


class TestGreedyColoring:

    @given(st.integers(min_value=0, max_value=10_000), st.sampled_from([2, 3]))
    @settings(max_examples=30, deadline=None)
    def test_proper_and_small(self, seed, k):
        H = erdos_renyi(k, 9, 0.25, seed)
        coloring = greedy_coloring(H)
        assert set(coloring) == set(range(H.n))
        assert all(coloring[a] != coloring[b] for a, b in skeleton(H, 1).edges)
        assert max(coloring.values(), default=0) <= skeletal_degeneracy(H, 1).value


class TestInduced:

    def test_relabel(self):
        H = complete_kpartite([2, 2])
        sub = induced(H, [1, 2, 3], relabel=True)
        assert sub.n == 3
        assert sub.edges == {(0, 1), (0, 2)}
        assert sub.layout.parts == ((0,), (1, 2))

    def test_keep_ids(self):
        H = complete_kpartite([2, 2])
        assert induced(H, [0, 2]).edges == {(0, 2)}


class TestOmega:
    """omega_theta and Defect arithmetic."""

    def test_zero_is_infinite(self):
        assert omega_theta(0, 10).is_infinite

    def test_ratio_branch(self):
        assert omega_theta(5, 10) == 2

    def test_saturated(self):
        assert omega_theta(10, 10) == 0

    @pytest.mark.parametrize("theta", [0, -1])
    def test_bad_theta(self, theta):
        with pytest.raises(ArgumentError):
            omega_theta(3, theta)

    @given(st.integers(min_value=0, max_value=50), st.fractions(min_value=Fraction(1, 10), max_value=40), st.fractions(min_value=Fraction(1, 7), max_value=9))
    @settings(max_examples=100, deadline=None)
    def test_scaling_and_monotone(self, x, theta, c):
        assert omega_theta(c * x, c * theta) == omega_theta(x, theta)
        assert omega_theta(x + 1, theta) <= omega_theta(x, theta)
        w = omega_theta(x, theta)
        assert w.is_infinite or w == 0 or w > 1

    def test_infinite_absorbs(self):
        inf = Defect.infinite()
        assert (inf + 3).is_infinite
        assert (Defect.of(2) * inf).is_infinite
        assert (inf ** 0) == 1
        assert (inf / 7).is_infinite
        assert Defect.of(5) < inf

    def test_exact_arithmetic(self):
        assert Defect.of(Fraction(1, 3)) ** 2 + Defect.of(Fraction(2, 9)) == Defect.of(Fraction(1, 3))

    def test_negative_rejected(self):
        with pytest.raises(ArgumentError):
            Defect.of(-1)


class TestSetDefect:
    """set_defect, average_defect and the lower-bound check."""

    def test_complete_host_saturates(self):
        G = complete_kpartite([3, 3])
        assert set_defect(G, [0], 1, 3) == 0

    def test_full_edge_is_infinite(self):
        G = Hypergraph(k=3, n=4, edges=[(0, 1, 2)])
        assert set_defect(G, [0, 1, 2], 1, 2, parts=[[0, 1, 2], [3]]).is_infinite

    def test_edgeless_host_is_infinite(self):
        G = complete_kpartite([2, 2]).with_edges([])
        assert set_defect(G, [0], 1, 1).is_infinite

    def test_q_must_avoid_target(self):
        with pytest.raises(ArgumentError):
            set_defect(complete_kpartite([2, 2]), [2], 1, 1)

    @given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=60, deadline=None)
    def test_monotone_and_replayed(self, g_seed, q_seed):
        G = random_kpartite([3, 3, 3], 0.6, g_seed)
        outside = list(G.layout.part(0)) + list(G.layout.part(1))
        rng = np.random.default_rng(q_seed)
        big = [int(v) for v in rng.choice(outside, size=3, replace=False)]
        small = big[:2]
        theta = Fraction(2)
        assert set_defect(G, small, 2, theta) <= set_defect(G, big, 2, theta)
        meter = DefectMeter(G)
        assert meter.size(big, 2) == len(neighborhood(G, big, G.layout.part(2)))

    def test_average_of_zeros(self):
        G = complete_kpartite([3, 3])
        assert average_defect(G, [[0], [1], [2]], 1, 3, 2) == 0

    def test_average_absorbs_infinite(self):
        G = complete_kpartite([3, 3]).with_edges([(0, 3), (1, 4)])
        assert average_defect(G, [[0], [0, 1]], 1, 3, 2).is_infinite

    def test_average_needs_tuples(self):
        with pytest.raises(ArgumentError):
            average_defect(complete_kpartite([2, 2]), [], 1, 1, 1)

    @pytest.mark.parametrize("seed", range(6))
    def test_average_replayed(self, seed):
        G = random_kpartite([3, 3], 0.7, seed)
        Qs = [[v] for v in G.layout.part(0)]
        theta, t = Fraction(5, 2), 2
        total = Fraction(0)
        expected = None
        for Q in Qs:
            w = omega(len(neighborhood(G, Q, G.layout.part(1))), theta)
            if w is None:
                expected = "inf"
                break
            total += w ** t
        mu = average_defect(G, Qs, 1, theta, t)
        if expected == "inf":
            assert mu.is_infinite
        else:
            assert mu == total / len(Qs)

    @given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=3))
    @settings(max_examples=60, deadline=None)
    def test_lower_bound_always_holds(self, seed, t):
        G = random_kpartite([3, 3, 3], 0.65, seed)
        Qs = [[a, b] for a in G.layout.part(0) for b in G.layout.part(1)]
        assert defect_lower_bound_check(G, Qs, 2, Fraction(3), t)


class TestSeeding:

    @given(st.integers(min_value=0, max_value=2 ** 64 - 1), st.text(min_size=1, max_size=12))
    @settings(max_examples=50, deadline=None)
    def test_derived_seed_stable(self, root, stage):
        assert derive_seed(root, stage) == derive_seed(root, stage)
        assert 0 <= derive_seed(root, stage) < 2 ** 64

    def test_stages_independent(self):
        assert derive_seed(0, "prune") != derive_seed(0, "embed")
        assert derive_seed(0, "prune") != derive_seed(1, "prune")


class TestFiles:
    """Hypergraph and coloring file validation."""

    def test_well_formed(self):
        data = {"k": 2, "n": 4, "parts": [[0, 1], [2, 3]], "edges": [[0, 2], [1, 3]], "partite_proper": True}
        assert validate_hypergraph_payload(data) == []

    def test_duplicate_edge(self):
        data = {"k": 2, "n": 3, "edges": [[0, 1], [1, 2], [0, 1]]}
        diags = validate_hypergraph_payload(data)
        assert diags[0].location == "edges[2]"
        assert "edges[0]" in diags[0].message

    def test_edge_crossing_part_twice(self):
        data = {"k": 2, "n": 4, "parts": [[0, 1], [2, 3]], "edges": [[0, 1]], "partite_proper": True}
        diags = validate_hypergraph_payload(data)
        assert [d.location for d in diags] == ["edges[0]"]

    def test_missing_field(self):
        assert validate_hypergraph_payload({"k": 2, "n": 3})[0].location == "edges"

    def test_coloring_length(self):
        diags = validate_coloring_payload({"N": 4, "k": 2, "q": 2, "colors": [0, 1]})
        assert diags[0].location == "colors"

    def test_parse_error_has_line(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"k": 2,\n "n": 3,\n "edges": [[0, 1],]\n}')
        with pytest.raises(FormatError) as info:
            read_payload(path)
        assert info.value.diagnostics[0].line == 3

    def test_load(self, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"k": 2, "n": 3, "parts": None, "edges": [[0, 1], [1, 2]]}))
        H = load_hypergraph(path)
        assert H.edges == {(0, 1), (1, 2)}

    def test_rejected_load(self, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"k": 2, "n": 3, "edges": [[0, 5]]}))
        with pytest.raises(FormatError):
            load_hypergraph(path)
