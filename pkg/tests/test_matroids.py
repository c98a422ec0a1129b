"""Graphic matroids, truncations, and the generic matroid machinery."""

import itertools

import pytest

from nbcwalk import (
    GraphicMatroid,
    MultiGraph,
    PreconditionError,
    SizeGuardError,
    TruncatedMatroid,
    build_named_graph,
)
from helpers import brute_circuits, graphic_indep, random_graph_corpus, truncated_indep


class TestGraphicMatroid:
    def test_rank_of_triangle(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        assert mat.rank == 2
        assert mat.rank_of({0, 1, 2}) == 2
        assert mat.rank_of({0}) == 1
        assert mat.rank_of(()) == 0

    def test_independence(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        assert mat.is_independent({0, 1})
        assert not mat.is_independent({0, 1, 2})
        assert mat.is_dependent({0, 1, 2})

    def test_parallel_pair_is_circuit(self):
        mat = GraphicMatroid(MultiGraph(2, [(0, 1), (0, 1)]))
        assert mat.circuits() == (frozenset({0, 1}),)
        assert mat.is_circuit({0, 1})

    def test_triangle_circuit(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        assert mat.circuits() == (frozenset({0, 1, 2}),)
        assert not mat.is_circuit({0, 1})

    def test_enumerate_bases_triangle(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        assert [sorted(b) for b in mat.enumerate_bases()] == [[0, 1], [0, 2], [1, 2]]

    def test_enumerate_bases_square(self):
        mat = GraphicMatroid(build_named_graph("cycle", 4))
        assert len(mat.enumerate_bases()) == 4

    def test_is_basis(self):
        mat = GraphicMatroid(build_named_graph("cycle", 4))
        assert mat.is_basis({0, 1, 2})
        assert not mat.is_basis({0, 1})

    def test_fundamental_circuit_none_when_independent(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        assert mat.fundamental_circuit({0}, 1) is None

    def test_fundamental_circuit_triangle(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        assert mat.fundamental_circuit({0, 1}, 2) == frozenset({0, 1, 2})

    def test_fundamental_circuit_rejects_dependent_start(self):
        g = MultiGraph(3, [(0, 1), (0, 1), (1, 2)])
        mat = GraphicMatroid(g)
        with pytest.raises(PreconditionError):
            mat.fundamental_circuit({0, 1}, 2)

    def test_fundamental_circuit_rejects_member(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        with pytest.raises(PreconditionError):
            mat.fundamental_circuit({0, 1}, 1)

    def test_circuits_match_brute_force(self):
        for g in random_graph_corpus(count=3, max_edges=8):
            mat = GraphicMatroid(g)
            assert sorted(mat.circuits(), key=sorted) == sorted(
                brute_circuits(g.edge_count, graphic_indep(g)), key=sorted
            )

    def test_rank_matches_brute(self):
        for g in random_graph_corpus(count=2, max_edges=7):
            mat = GraphicMatroid(g)
            indep = graphic_indep(g)
            for size in range(4):
                for combo in itertools.combinations(range(g.edge_count), size):
                    expected = max(
                        (len(t) for t in _subsets(combo) if indep(frozenset(t))), default=0
                    )
                    assert mat.rank_of(combo) == expected

    def test_independent_sets_by_size(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        assert mat.independent_sets_by_size().counts == (1, 3, 3)

    def test_check_subset(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        with pytest.raises(PreconditionError):
            mat.is_independent({0, 9})


def _subsets(ids):
    out = []
    ids = list(ids)
    for size in range(len(ids) + 1):
        out.extend(itertools.combinations(ids, size))
    return out


class TestTruncatedMatroid:
    def test_rank_clamps(self):
        inner = GraphicMatroid(build_named_graph("cycle", 5))
        mat = TruncatedMatroid(inner, 2)
        assert mat.rank == 2
        assert mat.rank_of(range(5)) == 2
        assert mat.rank_of({0}) == 1

    def test_independence_caps_size(self):
        inner = GraphicMatroid(build_named_graph("cycle", 5))
        mat = TruncatedMatroid(inner, 2)
        assert mat.is_independent({0, 1})
        assert not mat.is_independent({0, 1, 2})

    def test_circuits_add_top_layer(self):
        inner = GraphicMatroid(build_named_graph("cycle", 5))
        mat = TruncatedMatroid(inner, 2)
        circuits = mat.circuits()
        assert len(circuits) == 10
        assert all(len(c) == 3 for c in circuits)

    def test_circuits_keep_small_inner(self):
        g = MultiGraph(3, [(0, 1), (0, 1), (0, 2), (1, 2)])
        mat = TruncatedMatroid(GraphicMatroid(g), 2)
        circuits = set(mat.circuits())
        assert frozenset({0, 1}) in circuits
        assert all(len(c) <= 3 for c in circuits)

    def test_circuits_match_brute_force(self):
        g = build_named_graph("cycle", 5)
        for rank in (1, 2, 3):
            mat = TruncatedMatroid(GraphicMatroid(g), rank)
            assert sorted(mat.circuits(), key=sorted) == sorted(
                brute_circuits(g.edge_count, truncated_indep(g, rank)), key=sorted
            )

    def test_fundamental_circuit_cases(self):
        square = TruncatedMatroid(GraphicMatroid(build_named_graph("cycle", 4)), 2)
        assert square.fundamental_circuit({0}, 1) is None
        assert square.fundamental_circuit({0, 1}, 2) == frozenset({0, 1, 2})
        triangle = TruncatedMatroid(GraphicMatroid(build_named_graph("complete", 3)), 2)
        assert triangle.fundamental_circuit({0, 1}, 2) == frozenset({0, 1, 2})

    def test_untruncated_is_identity(self):
        inner = GraphicMatroid(build_named_graph("cycle", 4))
        mat = TruncatedMatroid(inner, inner.rank)
        assert mat.enumerate_bases() == inner.enumerate_bases()
        assert mat.circuits() == inner.circuits()

    def test_rank_zero(self):
        inner = GraphicMatroid(build_named_graph("complete", 3))
        mat = TruncatedMatroid(inner, 0)
        assert mat.rank == 0
        assert mat.is_independent(())
        assert not mat.is_independent({0})
        assert mat.circuits() == tuple(frozenset({e}) for e in range(3))

    def test_rejects_bad_rank(self):
        inner = GraphicMatroid(build_named_graph("complete", 3))
        with pytest.raises(PreconditionError):
            TruncatedMatroid(inner, 3)
        with pytest.raises(PreconditionError):
            TruncatedMatroid(inner, -1)


class TestGuards:
    def test_circuit_brute_guard(self):
        g = MultiGraph(16, [(i, j) for i in range(6) for j in range(i + 1, 6)])
        mat = GraphicMatroid(g)
        with pytest.raises(SizeGuardError):
            mat.circuits()
        assert mat.circuits(force=True)

    def test_enumeration_budget(self):
        g = build_named_graph("complete", 6)
        mat = GraphicMatroid(g)
        assert mat.independent_sets_by_size().total() > 100
