"""
Tests for clique harvesting, the coloring reduction and the Ramsey sweeps.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle
from hgraph import (
    ArgumentError,
    BudgetExceeded,
    EdgeColoring,
    SetupError,
    StageFailed,
    UniformityError,
)
from oracle import find_embedding, find_monochromatic_copy
from ramsey import (
    check_pullback,
    default_ell,
    exhaustive_colorings,
    harvest_monochromatic_cliques,
    kr_reduce,
    lift_vertex_bound,
    mono_clique_floor,
    ramsey_experiment,
    verify_monochromatic,
)


def one_color(N, k=2):
    return EdgeColoring.random(N, k, 1, seed=0)


class TestHarvest:

    def test_single_color(self):
        cliques = harvest_monochromatic_cliques(one_color(5), 3)
        assert list(cliques) == [0]
        assert cliques[0].num_edges == 10

    def test_split_coloring(self, c5):
        """C5 and its complement: no monochromatic triangle in either color."""
        colors = tuple(0 if e in c5.edges else 1 for e in one_color(5).edge_list)
        cliques = harvest_monochromatic_cliques(EdgeColoring(N=5, k=2, q=2, colors=colors), 3)
        assert cliques[0].num_edges == cliques[1].num_edges == 0

    def test_ell_equal_to_k(self):
        f = EdgeColoring(N=3, k=2, q=2, colors=(0, 1, 1))
        cliques = harvest_monochromatic_cliques(f, 2)
        assert cliques[0].edges == {(0, 1)}
        assert cliques[1].edges == {(0, 2), (1, 2)}

    def test_ell_below_k(self):
        with pytest.raises(ArgumentError):
            harvest_monochromatic_cliques(one_color(5, k=3), 2)

    def test_cap(self):
        with pytest.raises(BudgetExceeded):
            harvest_monochromatic_cliques(one_color(10), 5, cap=100)


class TestColorings:

    def test_count_and_first_edge(self):
        colorings = list(exhaustive_colorings(4, 2, 2))
        assert len(colorings) == 32
        assert all(f.colors[0] == 0 for f in colorings)

    def test_no_edges(self):
        assert [f.colors for f in exhaustive_colorings(1, 2, 3)] == [()]

    @pytest.mark.slow
    def test_goodman_floor(self):
        """Every 2-coloring of K_6 has at least two monochromatic triangles."""
        assert mono_clique_floor(6, 2, 2, 3) == 2


class TestReduction:

    def test_default_ell(self, c4, triangle, single_edge3):
        assert default_ell(c4) == 3
        assert default_ell(triangle) == 3
        assert default_ell(single_edge3) == 3

    def test_single_color_host(self, c4):
        f = one_color(15)
        reduction = kr_reduce(f, c4, 3, seed=2)
        assert reduction.color == 0
        assert reduction.G_hat.num_edges == 5 ** 3
        assert reduction.H_hat.k == 3
        assert reduction.H_hat.n <= lift_vertex_bound(c4, 3, 2)
        assert sorted(reduction.origin) == list(range(15))
        embedding = find_embedding(reduction.H_hat, reduction.G_hat, respect_parts=True)
        copy = check_pullback(f, c4, reduction, embedding)
        assert verify_monochromatic(f, c4, copy, 0)

    def test_leftover_vertices_dropped(self, c4):
        reduction = kr_reduce(one_color(14), c4, 3, seed=0)
        assert len(reduction.origin) == 12
        assert reduction.G_hat.layout.parts[2] == (8, 9, 10, 11)

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=25, deadline=None)
    def test_pullback_is_monochromatic(self, seed):
        """A part-respecting copy of H_hat always pulls back to a monochromatic C4."""
        H = cycle(4)
        f = EdgeColoring.random(12, 2, 2, seed)
        try:
            reduction = kr_reduce(f, H, 3, seed)
        except StageFailed as exc:
            assert exc.stage == "reduce"
            return
        embedding = find_embedding(reduction.H_hat, reduction.G_hat, respect_parts=True)
        if embedding is not None:
            copy = check_pullback(f, H, reduction, embedding)
            assert verify_monochromatic(f, H, copy, reduction.color)

    def test_uniformity(self, single_edge3):
        with pytest.raises(UniformityError):
            kr_reduce(one_color(6), single_edge3, 3, seed=0)

    def test_ell_below_k(self, c4):
        with pytest.raises(ArgumentError):
            kr_reduce(one_color(6), c4, 1, seed=0)

    def test_too_few_vertices(self, c4):
        with pytest.raises(ArgumentError):
            kr_reduce(one_color(2), c4, 3, seed=0)

    def test_coloring_needs_more_parts(self, triangle):
        with pytest.raises(SetupError):
            kr_reduce(one_color(6), triangle, 2, seed=0)


class TestExperiment:

    @pytest.mark.slow
    def test_triangle_forced_at_six(self, triangle):
        report = ramsey_experiment(triangle, 2, 6, exhaustive=True)
        assert report.colorings == 2 ** 14
        assert report.successes == report.colorings == report.verified_pullbacks
        assert report.failure_witness is None

    def test_triangle_avoidable_at_five(self, triangle):
        report = ramsey_experiment(triangle, 2, 5, exhaustive=True)
        assert report.colorings == 2 ** 9
        assert report.successes < report.colorings
        witness = EdgeColoring(N=5, k=2, q=2, colors=report.failure_witness)
        assert find_monochromatic_copy(witness, triangle) is None

    def test_exhaustive_cap(self, triangle):
        with pytest.raises(BudgetExceeded):
            ramsey_experiment(triangle, 2, 8, exhaustive=True)

    def test_sampled_is_deterministic(self, triangle):
        first = ramsey_experiment(triangle, 2, 6, seed=4, samples=6)
        assert first == ramsey_experiment(triangle, 2, 6, seed=4, samples=6)
        assert first.successes == 6
        assert len({t.seed for t in first.trials}) == 6

    def test_pipeline_oracle_machinery(self, c4):
        report = ramsey_experiment(c4, 1, 12, strategy="pipeline", samples=3)
        assert report.ell == 3
        assert report.machinery == "oracle"
        assert report.successes == report.verified_pullbacks == 3

    def test_pipeline_extending_machinery(self, c4):
        report = ramsey_experiment(c4, 1, 15, strategy="pipeline", machinery="extending", samples=2)
        assert report.successes == 2
        assert all(t.h_hat_vertices == 8 for t in report.trials)

    def test_rows_and_payload(self, triangle):
        report = ramsey_experiment(triangle, 2, 5, seed=1, samples=4)
        rows = report.rows()
        assert len(rows) == 4
        assert {"N", "q", "strategy", "index", "success"} <= set(rows[0])
        payload = report.to_payload()
        assert payload["success_rate"] == report.success_rate
        assert payload["machinery"] is None

    @pytest.mark.parametrize("kwargs", [{"q": 0}, {"N": -1}, {"strategy": "magic"}, {"samples": 0}])
    def test_bad_arguments(self, triangle, kwargs):
        args = {"q": 2, "N": 5, **kwargs}
        with pytest.raises(ArgumentError):
            ramsey_experiment(triangle, **args)
