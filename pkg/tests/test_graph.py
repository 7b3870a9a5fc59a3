import pytest
from hypothesis import given, strategies as st

from intervalcolor import Graph, moebius_ladder, normalize_edge
from oracles import cycle, find_odd_cycle, floyd_warshall_diameter, path, star
from strategies import connected_graphs


def test_normalize_edge_orders_endpoints():
    assert normalize_edge(3, 1) == (1, 3)
    assert normalize_edge(1, 3) == (1, 3)


class TestConstruction:
    def test_edges_are_normalized_and_sorted(self):
        g = Graph(3, [(3, 2), (2, 1), (1, 3)])
        assert g.edges == ((1, 2), (1, 3), (2, 3))
        assert g.edge_count == 3

    def test_rejects_nonpositive_vertex_count(self):
        with pytest.raises(ValueError):
            Graph(0, [])

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(2, [(1, 1), (1, 2)])

    def test_rejects_duplicate_edge_either_order(self):
        with pytest.raises(ValueError):
            Graph(2, [(1, 2), (2, 1)])

    def test_rejects_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            Graph(2, [(1, 3)])
        with pytest.raises(ValueError):
            Graph(2, [(0, 1)])

    def test_rejects_non_integer_endpoints(self):
        with pytest.raises(ValueError):
            Graph(2, [(1, "2")])

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            Graph(4, [(1, 2), (3, 4)])
        with pytest.raises(ValueError):
            Graph(2, [])  # isolated vertex 2

    def test_single_vertex_is_fine(self):
        g = Graph(1, [])
        assert g.edge_count == 0
        assert g.diameter() == 0


class TestDegrees:
    def test_moebius_ladders_are_cubic(self):
        assert moebius_ladder(2).graph.degree(1) == 3
        assert moebius_ladder(5).graph.degree(7) == 3

    def test_path_interior_vertex(self):
        g = Graph(*path(3))
        assert g.degree(2) == 2
        assert g.degree(1) == 1

    def test_degree_rejects_bad_vertex(self):
        g = Graph(*path(3))
        with pytest.raises(ValueError):
            g.degree(0)
        with pytest.raises(ValueError):
            g.degree(4)

    def test_max_degree(self):
        assert moebius_ladder(3).graph.max_degree() == 3
        assert Graph(*star(4)).max_degree() == 4
        assert Graph(2, [(1, 2)]).max_degree() == 1

    def test_is_regular(self):
        assert moebius_ladder(4).graph.is_regular()
        assert not Graph(*path(3)).is_regular()
        assert Graph(*cycle(5)).is_regular()

    def test_neighbors_sorted(self):
        g = moebius_ladder(2).graph
        assert g.neighbors(1) == (2, 3, 4)


class TestDistances:
    def test_rung_endpoints_are_adjacent(self):
        assert moebius_ladder(3).graph.distance(1, 4) == 1

    def test_distance_to_self(self):
        assert moebius_ladder(3).graph.distance(5, 5) == 0

    def test_antipodal_distance_in_m8(self):
        # n=4: vertex n + ceil(n/2) = 6 sits at the far end from vertex 1
        assert moebius_ladder(4).graph.distance(1, 6) == 2

    def test_diameter_small_ladders(self):
        assert moebius_ladder(2).graph.diameter() == 1
        assert moebius_ladder(3).graph.diameter() == 2

    def test_diameter_single_edge(self):
        assert Graph(2, [(1, 2)]).diameter() == 1

    def test_diameter_path(self):
        assert Graph(*path(5)).diameter() == 4


class TestBipartiteness:
    def test_examples(self):
        assert moebius_ladder(3).graph.is_bipartite()
        assert not moebius_ladder(2).graph.is_bipartite()
        assert Graph(*cycle(4)).is_bipartite()
        assert not Graph(*cycle(5)).is_bipartite()


class TestJson:
    def test_documented_format_parses(self):
        doc = {"vertices": 4, "edges": [[1, 2], [2, 3], [3, 4], [4, 1], [1, 3], [2, 4]]}
        g = Graph.from_json_dict(doc)
        assert g.vertex_count == 4
        assert g.edges == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

    def test_unknown_keys_ignored(self):
        doc = {"vertices": 2, "edges": [[1, 2]], "family": "moebius", "n": 1}
        assert Graph.from_json_dict(doc).edge_count == 1

    def test_missing_fields_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_json_dict({"edges": []})
        with pytest.raises(ValueError):
            Graph.from_json_dict({"vertices": 2})

    def test_wrong_field_types_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_json_dict({"vertices": "4", "edges": []})
        with pytest.raises(ValueError):
            Graph.from_json_dict({"vertices": 2, "edges": "nope"})

    @given(connected_graphs())
    def test_round_trip(self, g):
        doc = g.to_json_dict()
        again = Graph.from_json_dict(doc)
        assert again.vertex_count == g.vertex_count
        assert again.edges == g.edges
        assert again.to_json_dict() == doc


class TestStructuralProperties:
    @given(connected_graphs())
    def test_degree_sum_is_twice_edge_count(self, g):
        total = sum(g.degree(v) for v in range(1, g.vertex_count + 1))
        assert total == 2 * g.edge_count

    @given(connected_graphs(max_vertices=6), st.data())
    def test_triangle_inequality(self, g, data):
        pick = st.integers(1, g.vertex_count)
        u, v, w = data.draw(st.tuples(pick, pick, pick))
        assert g.distance(u, w) <= g.distance(u, v) + g.distance(v, w)

    @given(connected_graphs())
    def test_diameter_matches_independent_oracle(self, g):
        assert g.diameter() == floyd_warshall_diameter(g.vertex_count, list(g.edges))

    @given(connected_graphs())
    def test_bipartite_iff_no_odd_cycle(self, g):
        found = find_odd_cycle(g.vertex_count, list(g.edges))
        assert g.is_bipartite() == (found is None)
        if found is not None:
            assert len(found) % 2 == 1
            edge_set = set(g.edges)
            ring = found + [found[0]]
            for a, b in zip(ring, ring[1:]):
                assert normalize_edge(a, b) in edge_set
