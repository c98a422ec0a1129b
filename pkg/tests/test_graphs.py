"""Graph containers, named builders, and the exact counting oracles."""

import pytest

from fractions import Fraction

from nbcwalk import (
    IntPolynomial,
    MultiGraph,
    PreconditionError,
    SizeCounts,
    SizeGuardError,
    build_named_graph,
    chromatic_polynomial,
    count_acyclic_orientations,
    count_g_parking_functions,
    count_independent_sets_by_size,
    disjoint_union,
    fundamental_cycle,
    hardcore_partition,
    is_forest,
    iter_independent_sets,
)
from helpers import proper_colorings, random_graph_corpus, spanning_tree_count


class TestMultiGraph:
    def test_normalizes_endpoints(self):
        g = MultiGraph(3, [(2, 0), (1, 2)])
        assert g.edges == ((0, 2), (1, 2))
        assert g.edge_count == 2

    def test_parallel_edges_keep_indices(self):
        g = MultiGraph(2, [(0, 1), (1, 0)])
        assert g.edges == ((0, 1), (0, 1))
        assert g.degree(0) == 2

    def test_rejects_self_loop(self):
        with pytest.raises(PreconditionError):
            MultiGraph(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(PreconditionError):
            MultiGraph(2, [(0, 2)])

    def test_degree(self):
        g = build_named_graph("complete", 4)
        assert [g.degree(v) for v in range(4)] == [3, 3, 3, 3]

    def test_connectivity(self):
        assert build_named_graph("cycle", 5).is_connected()
        assert MultiGraph(1, []).is_connected()
        assert MultiGraph(0, []).is_connected()
        assert not MultiGraph(2, []).is_connected()

    def test_equality_and_hash(self):
        a = build_named_graph("complete", 3)
        b = MultiGraph(3, [(0, 1), (0, 2), (1, 2)])
        assert a == b
        assert hash(a) == hash(b)


class TestNamedGraphs:
    def test_complete(self):
        g = build_named_graph("complete", 3)
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_complete_bipartite(self):
        g = build_named_graph("complete_bipartite", 2, 3)
        assert g.vertex_count == 5
        assert g.edges == ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))

    def test_cycle(self):
        g = build_named_graph("cycle", 4)
        assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))

    def test_path(self):
        g = build_named_graph("path", 4)
        assert g.edges == ((0, 1), (1, 2), (2, 3))

    def test_disjoint_union_of_copies(self):
        g = build_named_graph("disjoint_union_of_copies", "complete", 3, 2)
        assert g.vertex_count == 6
        assert g.edge_count == 6
        assert (3, 4) in g.edges

    def test_zero_copies(self):
        g = build_named_graph("disjoint_union_of_copies", "complete", 8, 0)
        assert g.vertex_count == 0 and g.edge_count == 0

    def test_rejects_bad_specs(self):
        with pytest.raises(PreconditionError):
            build_named_graph("cycle", 2)
        with pytest.raises(PreconditionError):
            build_named_graph("banana", 3)
        with pytest.raises(PreconditionError):
            build_named_graph("complete")
        with pytest.raises(PreconditionError):
            build_named_graph("complete", "x")

    def test_disjoint_union_shifts(self):
        g = disjoint_union(build_named_graph("complete", 3), build_named_graph("path", 2))
        assert g.vertex_count == 5
        assert g.edges[-1] == (3, 4)


class TestForestsAndCycles:
    def test_empty_set_is_forest(self):
        assert is_forest(build_named_graph("complete", 3), ())

    def test_triangle_is_not(self):
        assert not is_forest(build_named_graph("complete", 3), {0, 1, 2})

    def test_parallel_pair_is_not(self):
        g = MultiGraph(2, [(0, 1), (0, 1)])
        assert not is_forest(g, {0, 1})
        assert is_forest(g, {0})

    def test_spanning_tree_is(self):
        assert is_forest(build_named_graph("cycle", 5), {0, 1, 2, 3})

    def test_brute_force_agreement(self):
        import itertools

        from helpers import subset_acyclic

        for g in random_graph_corpus(count=3):
            for size in range(g.edge_count + 1):
                for combo in itertools.combinations(range(g.edge_count), size):
                    assert is_forest(g, combo) == subset_acyclic(g, combo)

    def test_fundamental_cycle_on_square(self):
        g = build_named_graph("cycle", 4)
        assert fundamental_cycle(g, {0, 2, 3}, 1) == frozenset({0, 1, 2, 3})

    def test_fundamental_cycle_requires_cycle(self):
        g = build_named_graph("cycle", 4)
        with pytest.raises(PreconditionError):
            fundamental_cycle(g, {0, 2}, 1)

    def test_fundamental_cycle_rejects_cyclic_forest(self):
        g = build_named_graph("complete", 3)
        with pytest.raises(PreconditionError):
            fundamental_cycle(g, {0, 1, 2}, 0)


class TestIntPolynomial:
    def test_strips_trailing_zeros(self):
        p = IntPolynomial((1, 2, 0, 0))
        assert p.coefficients == (1, 2)
        assert p.degree == 1

    def test_evaluation(self):
        p = IntPolynomial((2, -3, 1))
        assert p(0) == 2 and p(1) == 0 and p(5) == 12

    def test_arithmetic(self):
        a = IntPolynomial((1, 1))
        b = IntPolynomial((0, 1))
        assert (a - b).coefficients == (1,)
        assert (a + b).coefficients == (1, 2)

    def test_monomial(self):
        assert IntPolynomial.monomial(3, 2).coefficients == (0, 0, 0, 2)


class TestChromatic:
    def test_triangle(self):
        chi = chromatic_polynomial(build_named_graph("complete", 3))
        assert chi.coefficients == (0, 2, -3, 1)

    def test_square(self):
        chi = chromatic_polynomial(build_named_graph("cycle", 4))
        assert chi.coefficients == (0, -3, 6, -4, 1)

    def test_against_brute_colorings(self):
        for g in random_graph_corpus(count=4):
            chi = chromatic_polynomial(g)
            for q in range(5):
                assert chi(q) == proper_colorings(g, q)

    def test_parallel_edges_collapse(self):
        doubled = MultiGraph(3, [(0, 1), (0, 1), (0, 2), (1, 2)])
        simple = build_named_graph("complete", 3)
        assert chromatic_polynomial(doubled) == chromatic_polynomial(simple)

    def test_disconnected(self):
        g = MultiGraph(3, [(0, 1)])
        chi = chromatic_polynomial(g)
        assert chi(3) == 6 * 3

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            chromatic_polynomial(build_named_graph("complete", 8))
        chromatic_polynomial(build_named_graph("complete", 8), force=True)


class TestAcyclicOrientations:
    def test_triangle(self):
        assert count_acyclic_orientations(build_named_graph("complete", 3)) == 6

    def test_tree_has_all(self):
        g = build_named_graph("path", 5)
        assert count_acyclic_orientations(g) == 2**4

    def test_square(self):
        assert count_acyclic_orientations(build_named_graph("cycle", 4)) == 14

    def test_matches_chromatic_at_minus_one(self):
        for g in random_graph_corpus(count=4):
            chi = chromatic_polynomial(g)
            assert count_acyclic_orientations(g) == abs(chi(-1))

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            count_acyclic_orientations(build_named_graph("complete", 7))


class TestSizeCounts:
    def test_out_of_range_is_zero(self):
        c = SizeCounts((1, 3, 2))
        assert c[5] == 0 and c[-1] == 0 and c[1] == 3

    def test_total_and_iter(self):
        c = SizeCounts((1, 3, 2))
        assert c.total() == 6 and list(c) == [1, 3, 2]

    def test_convolve(self):
        a = SizeCounts((1, 2))
        b = SizeCounts((1, 1))
        assert a.convolve(b).counts == (1, 3, 2)

    def test_rejects_negative(self):
        with pytest.raises(PreconditionError):
            SizeCounts((1, -1))
        with pytest.raises(PreconditionError):
            SizeCounts(())


class TestIndependentSets:
    def test_square_counts(self):
        assert count_independent_sets_by_size(build_named_graph("cycle", 4)).counts == (1, 4, 2)

    def test_pentagon_counts(self):
        assert count_independent_sets_by_size(build_named_graph("cycle", 5)).counts == (1, 5, 5)

    def test_path_counts(self):
        assert count_independent_sets_by_size(build_named_graph("path", 4)).counts == (1, 4, 3)

    def test_lexicographic_enumeration(self):
        sets = list(iter_independent_sets(build_named_graph("complete", 3)))
        assert sets == [frozenset(), frozenset({0}), frozenset({1}), frozenset({2})]

    def test_disjoint_union_convolves(self):
        a = build_named_graph("cycle", 4)
        b = build_named_graph("complete", 3)
        direct = count_independent_sets_by_size(disjoint_union(a, b))
        conv = count_independent_sets_by_size(a).convolve(count_independent_sets_by_size(b))
        assert direct == conv

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            count_independent_sets_by_size(MultiGraph(27, []))


class TestHardcorePartition:
    def test_pentagon_at_one(self):
        assert hardcore_partition(build_named_graph("cycle", 5), 1) == 11

    def test_pentagon_at_two(self):
        assert hardcore_partition(build_named_graph("cycle", 5), 2) == 31

    def test_rational_fugacity(self):
        assert hardcore_partition(build_named_graph("complete", 3), Fraction(1, 2)) == Fraction(5, 2)


class TestParkingFunctions:
    def test_triangle(self):
        assert count_g_parking_functions(build_named_graph("complete", 3), 0) == 3

    def test_path(self):
        assert count_g_parking_functions(build_named_graph("path", 3), 0) == 1

    def test_square(self):
        assert count_g_parking_functions(build_named_graph("cycle", 4), 0) == 4

    def test_matches_spanning_tree_count(self):
        for g in random_graph_corpus(count=4):
            for root in (0, g.vertex_count - 1):
                assert count_g_parking_functions(g, root) == spanning_tree_count(g)

    def test_requires_connected(self):
        with pytest.raises(PreconditionError):
            count_g_parking_functions(MultiGraph(2, []), 0)

    def test_root_range(self):
        with pytest.raises(PreconditionError):
            count_g_parking_functions(build_named_graph("complete", 3), 5)

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            count_g_parking_functions(build_named_graph("complete", 10), 0)
