import io
import math

import numpy as np
import pytest

from hyperim import (EmptyInputError, Hypergraph, HypergraphFormatError,
                     clique_expand, dump_edge_list, import_benson,
                     load_edge_list, stats)
from synthetic import random_hypergraph


def brute_force_expand(hypergraph):
    """O(sum |he|^2) pairwise count over all hyperedges."""
    weights = {}
    for he in hypergraph.hyperedges:
        for u in he:
            for v in he:
                if u < v:
                    weights[(u, v)] = weights.get((u, v), 0) + 1
    return weights


def graph_as_weights(graph):
    out = {}
    for u in range(graph.vertex_count):
        for v, w in graph.adjacency[u]:
            if u < v:
                out[(u, v)] = w
    return out


class TestLoadEdgeList:
    def test_basic(self):
        h = load_edge_list(io.StringIO("0 1 2\n1 3\n"))
        assert h.hyperedges == ((0, 1, 2), (1, 3))
        assert h.vertex_count == 4

    def test_comments_blank_lines_and_dedup(self):
        h = load_edge_list(io.StringIO("# c\n\n5 5 6\n"))
        assert h.hyperedges == ((5, 6),)
        assert h.vertex_count == 7

    def test_non_integer_token_reports_line(self):
        with pytest.raises(HypergraphFormatError, match="line 1"):
            load_edge_list(io.StringIO("0 x\n"))
        with pytest.raises(HypergraphFormatError, match="line 3"):
            load_edge_list(io.StringIO("0 1\n# ok\n2 oops\n"))

    def test_empty_input(self):
        with pytest.raises(EmptyInputError):
            load_edge_list(io.StringIO("# only comments\n\n"))

    def test_negative_id_rejected(self):
        with pytest.raises(HypergraphFormatError):
            load_edge_list(io.StringIO("-1 2\n"))

    def test_round_trip(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            h = random_hypergraph(rng, 30, 40, duplicate_fraction=0.2)
            buffer = io.StringIO()
            dump_edge_list(h, buffer)
            reloaded = load_edge_list(io.StringIO(buffer.getvalue()))
            assert reloaded.hyperedges == h.hyperedges
            assert reloaded.vertex_count == 1 + max(he[-1] for he in h.hyperedges)


class TestImportBenson:
    def test_two_hyperedges(self):
        h = import_benson(io.StringIO("2\n3\n"), io.StringIO("1\n2\n1\n3\n4\n"))
        assert h.hyperedges == ((0, 1), (0, 2, 3))

    def test_single_vertex_hyperedge(self):
        h = import_benson(io.StringIO("1\n"), io.StringIO("7\n"))
        assert h.hyperedges == ((6,),)
        assert h.vertex_count == 7

    def test_truncated_simplices(self):
        with pytest.raises(HypergraphFormatError, match="ended inside"):
            import_benson(io.StringIO("2\n3\n"), io.StringIO("1 2 1 3\n"))

    def test_zero_based_id_rejected(self):
        with pytest.raises(HypergraphFormatError, match="1-based"):
            import_benson(io.StringIO("1\n"), io.StringIO("0\n"))


class TestCliqueExpand:
    def test_triangle(self):
        g = clique_expand(Hypergraph.from_hyperedges([(0, 1, 2)]))
        assert g.edge_count == 3
        assert all(w == 1 for nbrs in g.adjacency for _, w in nbrs)

    def test_overlap_instance_degrees(self, overlap_graph):
        assert overlap_graph.degree(0) == 5
        assert overlap_graph.degree(2) == 4

    def test_duplicate_hyperedges_stack_weight(self):
        g = clique_expand(Hypergraph.from_hyperedges([(0, 1), (0, 1)]))
        assert g.edge_count == 1
        assert g.adjacency[0] == ((1, 2),)

    def test_size_one_hyperedge_contributes_nothing(self):
        g = clique_expand(Hypergraph.from_hyperedges([(3,), (0, 1)]))
        assert g.edge_count == 1
        assert g.adjacency[3] == ()

    def test_matches_brute_force_on_random_hypergraphs(self):
        rng = np.random.default_rng(11)
        for _ in range(60):
            h = random_hypergraph(rng, int(rng.integers(2, 51)),
                                  int(rng.integers(1, 101)),
                                  duplicate_fraction=0.3)
            g = clique_expand(h)
            assert graph_as_weights(g) == brute_force_expand(h)

    def test_symmetry_and_positive_weights(self):
        rng = np.random.default_rng(12)
        for _ in range(20):
            g = clique_expand(random_hypergraph(rng, 25, 40))
            seen = {}
            for u in range(g.vertex_count):
                for v, w in g.adjacency[u]:
                    assert w >= 1
                    assert v != u
                    seen[(u, v)] = w
            for (u, v), w in seen.items():
                assert seen[(v, u)] == w


class TestStats:
    def test_single_pair(self):
        h = Hypergraph.from_hyperedges([(0, 1)])
        s = stats(h, clique_expand(h))
        assert s.avg_degree == 1.0
        assert s.avg_hyperedges_per_vertex == 1.0

    def test_triangle_layer_cost(self):
        h = Hypergraph.from_hyperedges([(0, 1, 2)])
        s = stats(h, clique_expand(h))
        assert s.theta_lstar == pytest.approx(1.0 / math.log(2.0), abs=1e-12)

    def test_empty_universe_rejected(self):
        h = Hypergraph(0, ())
        with pytest.raises(EmptyInputError):
            stats(h, clique_expand(h))

    def test_isolated_vertices_contribute_zero_cost(self):
        h = Hypergraph.from_hyperedges([(0, 1)], vertex_count=4)
        s = stats(h, clique_expand(h))
        assert s.theta_lstar == pytest.approx(2.0 / math.log(2.0) / 4.0)


class TestHypergraphValidation:
    def test_out_of_range_id(self):
        with pytest.raises(ValueError):
            Hypergraph(2, ((0, 2),))

    def test_empty_hyperedge(self):
        with pytest.raises(ValueError):
            Hypergraph(2, ((),))
