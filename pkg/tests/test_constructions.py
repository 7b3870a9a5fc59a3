import pytest
from hypothesis import given, strategies as st

from intervalcolor import (
    BoundReport,
    Graph,
    bipartite_upper_bound,
    color_count_bounds,
    is_interval,
    moebius_ladder,
    moebius_max_coloring,
    moebius_max_colors,
    moebius_min_colors,
    odd_cycle_upper_bound,
)
from oracles import cycle


class TestMaxColoring:
    def test_even_case_smallest(self):
        c = moebius_max_coloring(2)
        assert c.t == 4
        assert c.assignment == {
            (1, 3): 1,
            (1, 2): 2,
            (3, 4): 2,
            (1, 4): 3,
            (2, 3): 3,
            (2, 4): 4,
        }

    def test_odd_case_smallest(self):
        c = moebius_max_coloring(3)
        assert c.t == 5
        assert c.assignment == {
            (2, 5): 1,
            (2, 3): 2,
            (5, 6): 2,
            (1, 2): 3,
            (4, 5): 3,
            (3, 6): 3,
            (1, 6): 4,
            (3, 4): 4,
            (1, 4): 5,
        }

    def test_odd_case_palettes(self):
        report = is_interval(moebius_ladder(3).graph, moebius_max_coloring(3))
        assert report.verdict
        assert report.palettes == {
            1: (3, 4, 5),
            2: (1, 2, 3),
            3: (2, 3, 4),
            4: (3, 4, 5),
            5: (1, 2, 3),
            6: (2, 3, 4),
        }

    def test_interval_across_range(self):
        for n in range(2, 61):
            c = moebius_max_coloring(n)
            assert c.t == n + 2
            report = is_interval(moebius_ladder(n).graph, c)
            assert report.verdict, n

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            moebius_max_coloring(1)

    @given(st.integers(2, 80))
    def test_total_and_surjective(self, n):
        c = moebius_max_coloring(n)
        ladder = moebius_ladder(n)
        assert set(c.assignment) == set(ladder.graph.edges)
        assert set(c.assignment.values()) == set(range(1, n + 3))


class TestBipartiteBound:
    def test_values(self):
        assert bipartite_upper_bound(moebius_ladder(3).graph) == 5
        assert bipartite_upper_bound(Graph(2, [(1, 2)])) == 1
        assert bipartite_upper_bound(moebius_ladder(5).graph) == 7

    def test_rejects_non_bipartite(self):
        with pytest.raises(ValueError):
            bipartite_upper_bound(moebius_ladder(2).graph)


class TestOddCycleBound:
    def test_values(self):
        assert odd_cycle_upper_bound(moebius_ladder(2).graph) == 5
        assert odd_cycle_upper_bound(moebius_ladder(4).graph) == 7
        assert odd_cycle_upper_bound(Graph(*cycle(3))) == 3

    def test_rejects_bipartite(self):
        with pytest.raises(ValueError):
            odd_cycle_upper_bound(Graph(*cycle(4)))


class TestBoundReport:
    def test_bipartite_side(self):
        report = color_count_bounds(moebius_ladder(3).graph)
        assert report == BoundReport(
            max_degree=3,
            diameter=2,
            bipartite=True,
            bipartite_bound=5,
            odd_cycle_bound=None,
        )
        assert report.applicable_bound == 5
        doc = report.to_json_dict()
        assert doc["bipartite_bound"] == 5
        assert "odd_cycle_bound" not in doc

    def test_odd_cycle_side(self):
        report = color_count_bounds(moebius_ladder(4).graph)
        assert not report.bipartite
        assert report.bipartite_bound is None
        assert report.odd_cycle_bound == 7
        assert report.applicable_bound == 7
        doc = report.to_json_dict()
        assert doc["odd_cycle_bound"] == 7
        assert "bipartite_bound" not in doc


class TestClosedFormSpectrumEnds:
    def test_values(self):
        assert moebius_min_colors(2) == 3
        assert moebius_max_colors(2) == 4
        assert moebius_min_colors(5) == 3
        assert moebius_max_colors(5) == 7

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            moebius_min_colors(1)
        with pytest.raises(ValueError):
            moebius_max_colors(1)

    def test_top_of_spectrum_respects_general_bounds(self):
        for n in range(2, 65):
            report = color_count_bounds(moebius_ladder(n).graph)
            assert moebius_max_colors(n) <= report.applicable_bound
