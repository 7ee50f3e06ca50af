import random
from itertools import combinations

import pytest

from abmod.abmodule import is_ab_module
from abmod.bipartite import (
    BipartiteGraph,
    is_false_ab_twin,
    maximal_one_sided_modules,
    one_sided_family_closure_props,
    one_sided_module_check,
    twin_classify,
)
from abmod.fixtures import complete_bipartite, cycle_graph, star_graph
from abmod.graph import AbParams, Graph, VertexSet

P00 = AbParams(0, 0)
P10 = AbParams(1, 0)
P01 = AbParams(0, 1)
P11 = AbParams(1, 1)


def two_pair_example():
    """X = {0,1,2,3}, Y = {4,5}; 4 sees {0,1}, 5 sees {2,3}."""
    g = Graph(6, [(0, 4), (1, 4), (2, 5), (3, 5)])
    return BipartiteGraph(g, VertexSet.from_ids(6, [0, 1, 2, 3]))


def random_bipartite(seed, x_max=10, y_max=6, p=0.5):
    rng = random.Random(seed)
    nx = rng.randint(2, x_max)
    ny = rng.randint(1, y_max)
    edges = [
        (i, nx + j) for i in range(nx) for j in range(ny) if rng.random() < p
    ]
    g = Graph(nx + ny, edges)
    return BipartiteGraph(g, VertexSet.from_ids(g.n, range(nx)))


def oracle_maximal(bg, p):
    g = bg.underlying
    x_ids = bg.x_side.ids()
    feasible = []
    for r in range(len(x_ids) + 1):
        for combo in combinations(x_ids, r):
            s = VertexSet.from_ids(g.n, combo)
            if is_ab_module(g, s, p):
                feasible.append(s)
    return sorted(
        (
            m
            for m in feasible
            if not any(o.bits != m.bits and m.bits & ~o.bits == 0 for o in feasible)
        ),
        key=lambda m: m.ids(),
    )


class TestConstruction:
    def test_non_crossing_edge_rejected(self):
        g = Graph(4, [(0, 1), (0, 2)])
        with pytest.raises(ValueError):
            BipartiteGraph(g, VertexSet.from_ids(4, [0, 1]))

    def test_auto_two_colouring(self):
        bg = BipartiteGraph.from_graph(cycle_graph(6))
        assert bg.x_side.ids() == (0, 2, 4)

    def test_odd_cycle_rejected(self):
        with pytest.raises(ValueError):
            BipartiteGraph.from_graph(cycle_graph(5))

    def test_disconnected_auto_colouring_rejected(self):
        with pytest.raises(ValueError):
            BipartiteGraph.from_graph(Graph(4, [(0, 1)]))


class TestTwinClassify:
    def test_classical_twin_classes(self):
        tc = twin_classify(two_pair_example(), P00)
        assert [t.ids() for t in tc.tuples] == [(0,), (1,), (2,), (3,)]
        groups = [tuple(tc.tuples[i].ids()[0] for i in cls) for cls in tc.classes]
        assert sorted(groups) == [(0, 1), (2, 3)]

    def test_complete_bipartite_single_class(self):
        g = complete_bipartite(3, 2)
        bg = BipartiteGraph(g, VertexSet.from_ids(5, [0, 1, 2]))
        for p in (P00, P10, P01, P11):
            if len(bg.x_side) < p.trivial_cap:
                continue
            tc = twin_classify(bg, p)
            assert len(tc.classes) == 1

    def test_star_pairs_single_class(self):
        # centre on the Y side, leaves as X: every pair of leaves misses the
        # centre nowhere, so all pairs share one class under a single budget
        g = star_graph(4)
        bg = BipartiteGraph(g, VertexSet.from_ids(5, [1, 2, 3, 4]))
        tc = twin_classify(bg, P10)
        assert len(tc.tuples) == 6
        assert len(tc.classes) == 1
        assert all(row == 1 for row in tc.rows)  # centre is vertex 0

    def test_lambda_labels_within_budget(self):
        rng = random.Random(3)
        for seed in range(30):
            bg = random_bipartite(seed)
            for p in (P10, P01, P11):
                if len(bg.x_side) < p.trivial_cap:
                    continue
                tc = twin_classify(bg, p)
                for (y, idx), label in tc.lam.items():
                    t = tc.tuples[idx]
                    assert set(label) <= set(t.ids())
                    if (tc.rows[idx] >> y) & 1:
                        assert len(label) <= p.alpha
                    else:
                        assert len(label) <= p.beta

    def test_x_too_small_rejected(self):
        bg = two_pair_example()
        with pytest.raises(ValueError):
            twin_classify(bg, AbParams(2, 2))


class TestFalseTwins:
    def test_classical_false_twins(self):
        g = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
        assert is_false_ab_twin(g, VertexSet.from_ids(4, [0]), VertexSet.from_ids(4, [1]), P00)

    def test_different_classes_are_not_twins(self):
        bg = two_pair_example()
        g = bg.underlying
        assert not is_false_ab_twin(g, VertexSet.from_ids(6, [0]), VertexSet.from_ids(6, [2]), P00)

    def test_non_module_union_is_not_a_twin_pair(self):
        # y adjacent to one tuple fully and to half of the other
        g = Graph(5, [(0, 4), (1, 4), (2, 4)])
        a = VertexSet.from_ids(5, [0, 1])
        b = VertexSet.from_ids(5, [2, 3])
        assert not is_false_ab_twin(g, a, b, P01)

    def test_same_class_tuples_with_module_union_are_twins(self):
        rng = random.Random(8)
        confirmed = 0
        for seed in range(40):
            bg = random_bipartite(seed, x_max=7, y_max=5)
            for p in (P10, P01):
                if len(bg.x_side) < p.trivial_cap:
                    continue
                tc = twin_classify(bg, p)
                for cls in tc.classes:
                    for i, j in combinations(cls, 2):
                        a, b = tc.tuples[i], tc.tuples[j]
                        if a & b:
                            continue
                        union_ok = is_ab_module(bg.underlying, a | b, p)
                        assert is_false_ab_twin(bg.underlying, a, b, p) == union_ok
                        confirmed += 1
        assert confirmed >= 50

    def test_wrong_sizes_rejected(self):
        g = complete_bipartite(3, 2)
        with pytest.raises(ValueError):
            is_false_ab_twin(g, VertexSet.from_ids(5, [0]), VertexSet.from_ids(5, [1]), P11)


class TestOneSidedCheck:
    def test_single_tuple_is_a_module(self):
        bg = two_pair_example()
        assert one_sided_module_check(bg, VertexSet.from_ids(6, [0, 2]), P10)

    def test_union_of_same_class_tuples(self):
        bg = two_pair_example()
        assert one_sided_module_check(bg, VertexSet.from_ids(6, [0, 1]), P00)

    def test_union_across_classes_fails(self):
        bg = two_pair_example()
        assert not one_sided_module_check(bg, VertexSet.from_ids(6, [0, 2]), P00)

    def test_union_characterization_at_tuple_scale(self):
        """A one-sided set of at least tuple size is a module exactly when all
        of its tuples live in one twin class and every per-y budget holds,
        which the twin machinery reproduces."""
        for seed in range(25):
            bg = random_bipartite(seed, x_max=7, y_max=5)
            for p in (P10, P11):
                k = p.trivial_cap
                if len(bg.x_side) < k:
                    continue
                tc = twin_classify(bg, p)
                index_of = {tc.tuples[i].bits: i for i in range(len(tc.tuples))}
                for r in range(k, len(bg.x_side) + 1):
                    for combo in combinations(bg.x_side.ids(), r):
                        s = VertexSet.from_ids(bg.underlying.n, combo)
                        rows = {
                            tc.rows[index_of[VertexSet.from_ids(bg.underlying.n, t).bits]]
                            for t in combinations(combo, k)
                        }
                        direct = one_sided_module_check(bg, s, p)
                        if len(rows) > 1:
                            assert not direct
                        else:
                            row = rows.pop()
                            budgets_ok = _budgets_ok(bg, s, row, p)
                            assert direct == budgets_ok

    def test_outside_x_rejected(self):
        bg = two_pair_example()
        with pytest.raises(ValueError):
            one_sided_module_check(bg, VertexSet.from_ids(6, [4]), P00)


def _budgets_ok(bg, s, row, p):
    g = bg.underlying
    for y in bg.y_side:
        hits = len(g.adj_set(y) & s)
        if (row >> y) & 1:
            if len(s) - hits > p.alpha:
                return False
        elif hits > p.beta:
            return False
    return True


class TestMaximalOneSided:
    def test_two_pair_example_classical(self):
        fam = maximal_one_sided_modules(two_pair_example(), P00)
        assert [m.ids() for m in fam.maximal_members] == [(0, 1), (2, 3)]

    def test_near_perfect_matching_complement(self):
        # complete 3x3 bipartite minus a perfect matching: each y misses one x
        g = Graph(6, [(i, 3 + j) for i in range(3) for j in range(3) if i != j])
        bg = BipartiteGraph(g, VertexSet.from_ids(6, [0, 1, 2]))
        fam = maximal_one_sided_modules(bg, P10)
        assert [m.ids() for m in fam.maximal_members] == [(0, 1, 2)]

    def test_small_x_side_returns_x(self):
        g = complete_bipartite(2, 3)
        bg = BipartiteGraph(g, VertexSet.from_ids(5, [0, 1]))
        fam = maximal_one_sided_modules(bg, P11)
        assert fam.maximal_members == (bg.x_side,)

    def test_two_star_overlap_pattern(self):
        """Members may overlap and need not contain any smaller-budget
        maximal member: with 4 seeing {0,1} and 5 seeing {2,3}, the (0,1)
        maximal members are all six mixed pairs plus nothing larger."""
        fam = maximal_one_sided_modules(two_pair_example(), P01)
        assert [m.ids() for m in fam.maximal_members] == [
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
        ]

    def test_oracle_equivalence_randomized(self):
        for seed in range(60):
            bg = random_bipartite(seed, x_max=8, y_max=5)
            for p in (P00, P10, P01, P11):
                got = [m.ids() for m in maximal_one_sided_modules(bg, p).maximal_members]
                want = [m.ids() for m in oracle_maximal(bg, p)]
                assert got == want, (seed, p)

    def test_thread_pool_matches_serial(self):
        for seed in range(10):
            bg = random_bipartite(seed, x_max=8, y_max=5)
            for p in (P10, P11):
                serial = maximal_one_sided_modules(bg, p).maximal_members
                threaded = maximal_one_sided_modules(bg, p, jobs=3).maximal_members
                assert serial == threaded

    def test_monotone_nesting_in_the_budgets(self):
        for seed in range(40):
            bg = random_bipartite(seed, x_max=8, y_max=5)
            base = maximal_one_sided_modules(bg, P00).maximal_members
            for bigger in (P10, P01):
                grown = maximal_one_sided_modules(bg, bigger).maximal_members
                for m in base:
                    assert any(m <= g2 for g2 in grown)

    def test_empty_x_side_rejected(self):
        g = Graph(2, [])
        bg = BipartiteGraph(g, VertexSet(2))
        with pytest.raises(ValueError):
            maximal_one_sided_modules(bg, P00)


class TestClosureProps:
    def test_two_pair_example_clean(self):
        rep = one_sided_family_closure_props(two_pair_example(), P00)
        assert rep.violations == ()
        assert rep.family_size == 7  # all pairs-of-a-kind unions plus smalls

    def test_random_instances_clean(self):
        for seed in range(25):
            bg = random_bipartite(seed, x_max=7, y_max=5)
            for p in (P01, P11):
                rep = one_sided_family_closure_props(bg, p)
                assert rep.violations == ()

    def test_size_cap(self):
        g = complete_bipartite(13, 1)
        bg = BipartiteGraph(g, VertexSet.from_ids(14, range(13)))
        with pytest.raises(ValueError):
            one_sided_family_closure_props(bg, P00, max_x=12)
