import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abmod.fixtures import (
    complete_graph,
    cycle_graph,
    empty_graph,
    ids,
    nested_modules_graph,
    path_graph,
)
from abmod.graph import (
    FALSE_TWIN,
    NEITHER,
    TRUE_TWIN,
    Graph,
    VertexSet,
    complement,
    induced,
    neighbourhood_of_set,
    non_neighbourhood_of_set,
    twins,
)
from abmod.io import gen_random

from conftest import random_graph


class TestVertexSet:
    def test_iteration_is_sorted_and_len_is_popcount(self):
        s = VertexSet.from_ids(10, [7, 2, 5])
        assert s.ids() == (2, 5, 7)
        assert len(s) == 3
        assert 5 in s and 6 not in s

    def test_algebra(self):
        a = VertexSet.from_ids(6, [0, 1, 2])
        b = VertexSet.from_ids(6, [2, 3])
        assert (a & b).ids() == (2,)
        assert (a | b).ids() == (0, 1, 2, 3)
        assert (a - b).ids() == (0, 1)
        assert (a ^ b).ids() == (0, 1, 3)
        assert b <= (a | b)
        assert a.complement().ids() == (3, 4, 5)

    def test_cross_universe_operations_rejected(self):
        a = VertexSet.from_ids(5, [1])
        b = VertexSet.from_ids(6, [1])
        with pytest.raises(ValueError):
            _ = a | b
        with pytest.raises(ValueError):
            _ = a <= b

    def test_out_of_range_member_rejected(self):
        with pytest.raises(ValueError):
            VertexSet.from_ids(4, [4])
        with pytest.raises(ValueError):
            VertexSet(3, 0b1000)

    def test_hashable_and_immutable_add(self):
        a = VertexSet.from_ids(4, [0])
        b = a.add(2)
        assert a.ids() == (0,) and b.ids() == (0, 2)
        assert len({a, b, VertexSet.from_ids(4, [0])}) == 2


class TestGraphConstruction:
    def test_adjacency_views_agree(self):
        g = nested_modules_graph()
        for u in range(g.n):
            assert g.adjacency[u] == g.adj_set(u).ids()

    def test_rejects_loops_duplicates_and_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 1), (1, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_edges_canonical_sorted(self):
        g = Graph(4, [(3, 1), (2, 0)])
        assert g.edges == ((0, 2), (1, 3))


class TestComplement:
    def test_triangle_becomes_empty(self):
        assert complement(complete_graph(3)).m == 0

    def test_involution_on_random_graphs(self):
        for seed in range(20):
            g = gen_random(8, 0.4, seed)
            assert complement(complement(g)) == g

    def test_five_cycle_complement_is_two_regular(self):
        gc = complement(cycle_graph(5))
        assert gc.m == 5
        assert all(gc.degree(v) == 2 for v in range(5))

    def test_degree_sum_rule(self):
        for seed in range(10):
            g = random_graph(seed, n_min=2, n_max=9)
            gc = complement(g)
            assert all(g.degree(v) + gc.degree(v) == g.n - 1 for v in range(g.n))


class TestInduced:
    def test_inner_triple_is_a_path_not_a_triangle(self):
        g = nested_modules_graph()
        sub, relabel = induced(g, VertexSet.from_ids(8, ids("bcd")))
        named = {tuple(sorted((x, y))) for x, y in [(relabel[1], relabel[2]), (relabel[2], relabel[3])]}
        assert set(sub.edges) == named
        assert sub.m == 2

    def test_whole_set_is_identity(self):
        g = nested_modules_graph()
        sub, relabel = induced(g, g.vertex_set())
        assert sub == g
        assert relabel == {v: v for v in range(8)}

    def test_any_four_of_a_five_cycle_is_a_path(self):
        c5 = cycle_graph(5)
        for out in range(5):
            keep = VertexSet.from_ids(5, [v for v in range(5) if v != out])
            sub, _ = induced(c5, keep)
            assert sub.m == 3
            assert sorted(sub.degree(v) for v in range(4)) == [1, 1, 2, 2]

    def test_relabelling_is_order_preserving(self):
        g = gen_random(9, 0.5, 3)
        sub, relabel = induced(g, VertexSet.from_ids(9, [1, 4, 8]))
        assert relabel == {1: 0, 4: 1, 8: 2}
        assert sub.n == 3

    def test_out_of_range_set_rejected(self):
        g = empty_graph(3)
        with pytest.raises(ValueError):
            induced(g, VertexSet.from_ids(5, [4]))


class TestNeighbourhoods:
    def test_inner_triple_split(self):
        g = nested_modules_graph()
        s = VertexSet.from_ids(8, ids("bcd"))
        assert neighbourhood_of_set(g, s).ids() == ids("ae")
        assert non_neighbourhood_of_set(g, s).ids() == ids("fgh")

    def test_full_set_has_empty_outside(self):
        g = nested_modules_graph()
        assert not neighbourhood_of_set(g, g.vertex_set())
        assert not non_neighbourhood_of_set(g, g.vertex_set())

    @given(seed=st.integers(0, 400), bits=st.integers(0, (1 << 10) - 1))
    @settings(max_examples=80, deadline=None)
    def test_partition_of_outside(self, seed, bits):
        g = gen_random(10, 0.35, seed)
        s = VertexSet(10, bits)
        hot = neighbourhood_of_set(g, s)
        cold = non_neighbourhood_of_set(g, s)
        assert not hot & cold
        assert (hot | cold) == s.complement()


class TestTwins:
    def test_inner_pair_are_false_twins(self):
        assert twins(nested_modules_graph(), *ids("bd")) == FALSE_TWIN

    def test_single_edge_true_twins(self):
        assert twins(complete_graph(2), 0, 1) == TRUE_TWIN

    def test_path_endpoints_false_twins(self):
        assert twins(path_graph(3), 0, 2) == FALSE_TWIN

    def test_neither(self):
        assert twins(path_graph(4), 0, 3) == NEITHER

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            twins(path_graph(3), 1, 1)


class TestTinyUniverses:
    def test_zero_vertex_graph(self):
        g = Graph(0, [])
        assert g.vertex_set() == VertexSet(0)
        assert complement(g) == g
        sub, relabel = induced(g, VertexSet(0))
        assert sub.n == 0 and relabel == {}

    def test_single_vertex_graph(self):
        g = Graph(1, [])
        assert neighbourhood_of_set(g, g.vertex_set()).ids() == ()
        assert complement(g).m == 0
        assert g.degree(0) == 0
