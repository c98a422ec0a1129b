"""Broken-circuit complexes: membership, enumeration, face numbers, links,
extension, and the equivalence of the incremental engine with brute force."""

import itertools

import pytest

from nbcwalk import (
    ElementOrder,
    FaceNumbers,
    GraphicMatroid,
    Matroid,
    MultiGraph,
    NbcComplex,
    PreconditionError,
    TruncatedMatroid,
    VerificationError,
    build_named_graph,
    contains_broken_circuit_bruteforce,
    enumerate_nbc_bases,
    extend_to_nbc_base,
    face_numbers,
    is_log_concave,
    is_nbc,
    link_facets,
)
from helpers import (
    brute_nbc_faces,
    graphic_indep,
    random_graph_corpus,
    random_orders,
    theta_graph,
    truncated_indep,
)


class _OpaqueMatroid(Matroid):
    """Wraps a graphic matroid behind the generic interface only, forcing the
    non-graphic enumeration path."""

    def __init__(self, graph):
        super().__init__()
        self.ground_size = graph.edge_count
        self._inner = GraphicMatroid(graph)

    def is_independent(self, s) -> bool:
        return self._inner.is_independent(s)


class TestElementOrder:
    def test_identity(self):
        order = ElementOrder.identity(3)
        assert order.ranking == (0, 1, 2)
        assert order.smallest({1, 2}) == 1

    def test_custom_ranking(self):
        order = ElementOrder((2, 0, 1))
        assert order.smallest({0, 1}) == 0
        assert order.smallest({0, 1, 2}) == 2
        assert order.positions() == (1, 2, 0)

    def test_rejects_non_permutations(self):
        with pytest.raises(PreconditionError):
            ElementOrder((0, 0, 1))
        with pytest.raises(PreconditionError):
            ElementOrder((0, 2))

    def test_smallest_needs_elements(self):
        with pytest.raises(PreconditionError):
            ElementOrder.identity(3).smallest(())


class TestIsNbc:
    def test_triangle_faces(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("complete", 3)))
        expected = {
            frozenset(),
            frozenset({0}),
            frozenset({1}),
            frozenset({2}),
            frozenset({0, 1}),
            frozenset({0, 2}),
        }
        for size in range(4):
            for combo in itertools.combinations(range(3), size):
                s = frozenset(combo)
                assert is_nbc(x, s) == (s in expected)

    def test_respects_order(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("complete", 3)), ElementOrder((2, 0, 1)))
        assert is_nbc(x, {1, 2})
        assert not is_nbc(x, {0, 1})

    def test_matches_bruteforce_membership(self):
        for g in random_graph_corpus(count=3):
            x = NbcComplex(GraphicMatroid(g))
            for size in range(4):
                for combo in itertools.combinations(range(g.edge_count), size):
                    s = frozenset(combo)
                    expected = x.matroid.is_independent(s) and not contains_broken_circuit_bruteforce(x, s)
                    assert is_nbc(x, s) == expected

    def test_rejects_bad_elements(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("complete", 3)))
        with pytest.raises(PreconditionError):
            is_nbc(x, {0, 7})


class TestEnumeration:
    def test_triangle_bases(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("complete", 3)))
        assert [sorted(b) for b in enumerate_nbc_bases(x)] == [[0, 1], [0, 2]]

    def test_engine_matches_bruteforce(self):
        for g in random_graph_corpus(count=6):
            for ranking in [tuple(range(g.edge_count))] + random_orders(g.edge_count, 3):
                x = NbcComplex(GraphicMatroid(g), ElementOrder(ranking))
                faces = brute_nbc_faces(g.edge_count, graphic_indep(g), ranking)
                rank = x.rank
                expected = sorted((f for f in faces if len(f) == rank), key=sorted)
                assert sorted(enumerate_nbc_bases(x), key=sorted) == expected

    def test_engine_matches_generic_path(self):
        for g in random_graph_corpus(count=4):
            for ranking in [tuple(range(g.edge_count))] + random_orders(g.edge_count, 2):
                fast = NbcComplex(GraphicMatroid(g), ElementOrder(ranking))
                slow = NbcComplex(_OpaqueMatroid(g), ElementOrder(ranking))
                assert enumerate_nbc_bases(fast) == enumerate_nbc_bases(slow)
                assert face_numbers(fast) == face_numbers(slow)

    def test_truncated_engine_matches_bruteforce(self):
        g = build_named_graph("cycle", 5)
        for rank in (1, 2, 3, 4):
            for ranking in [tuple(range(5))] + random_orders(5, 3):
                mat = TruncatedMatroid(GraphicMatroid(g), rank)
                x = NbcComplex(mat, ElementOrder(ranking))
                faces = brute_nbc_faces(5, truncated_indep(g, rank), ranking)
                expected = sorted((f for f in faces if len(f) == rank), key=sorted)
                assert sorted(enumerate_nbc_bases(x), key=sorted) == expected


class TestFaceNumbers:
    def test_known_vectors(self):
        cases = [
            ("complete", 3, (1, 3, 2)),
            ("cycle", 4, (1, 4, 6, 3)),
            ("complete", 4, (1, 6, 11, 6)),
            ("cycle", 5, (1, 5, 10, 10, 4)),
        ]
        for kind, n, expected in cases:
            x = NbcComplex(GraphicMatroid(build_named_graph(kind, n)))
            assert face_numbers(x).counts == expected

    def test_truncated_pentagon(self):
        mat = TruncatedMatroid(GraphicMatroid(build_named_graph("cycle", 5)), 2)
        assert face_numbers(NbcComplex(mat)).counts == (1, 5, 4)

    def test_counts_match_bruteforce(self):
        for g in random_graph_corpus(count=4):
            x = NbcComplex(GraphicMatroid(g))
            faces = brute_nbc_faces(g.edge_count, graphic_indep(g), tuple(range(g.edge_count)))
            fn = face_numbers(x)
            for k in range(len(fn.counts)):
                assert fn[k] == sum(1 for f in faces if len(f) == k)
            assert fn.total() == len(faces)

    def test_empty_complex(self):
        mat = TruncatedMatroid(GraphicMatroid(build_named_graph("complete", 3)), 0)
        x = NbcComplex(mat)
        assert face_numbers(x).counts == (0,)
        assert enumerate_nbc_bases(x) == ()

    def test_order_invariance_exhaustive(self):
        g = build_named_graph("cycle", 4)
        seen = {
            face_numbers(NbcComplex(GraphicMatroid(g), ElementOrder(p))).counts
            for p in itertools.permutations(range(4))
        }
        assert len(seen) == 1

    def test_face_numbers_type(self):
        fn = FaceNumbers((1, 3, 2))
        assert fn[1] == 3 and fn[9] == 0
        assert fn.total() == 6
        with pytest.raises(PreconditionError):
            FaceNumbers(())


class TestLogConcavity:
    def test_accepts_face_numbers(self):
        assert is_log_concave(FaceNumbers((1, 3, 2)))
        assert is_log_concave((1, 5, 10, 10, 4))

    def test_detects_violation(self):
        assert not is_log_concave((1, 1, 2))

    def test_short_sequences(self):
        assert is_log_concave((5,))
        assert is_log_concave((1, 2))


class TestLinkFacets:
    def test_whole_complex_at_empty_face(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("complete", 3)))
        assert sorted(link_facets(x, ()), key=sorted) == [frozenset({0, 1}), frozenset({0, 2})]

    def test_strips_tau(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("complete", 4)))
        facets = link_facets(x, {0})
        assert all(0 not in f for f in facets)
        full = [f for f in enumerate_nbc_bases(x) if 0 in f]
        assert len(facets) == len(full)

    def test_rejects_non_face(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("complete", 3)))
        with pytest.raises(PreconditionError):
            link_facets(x, {1, 2})

    def test_matches_bruteforce(self):
        g = random_graph_corpus(count=1)[0]
        x = NbcComplex(GraphicMatroid(g))
        faces = brute_nbc_faces(g.edge_count, graphic_indep(g), tuple(range(g.edge_count)))
        rank = x.rank
        tau = frozenset({0})
        if tau in faces:
            expected = sorted(
                (f - tau for f in faces if len(f) == rank and tau <= f), key=sorted
            )
            assert sorted(link_facets(x, tau), key=sorted) == expected


class TestExtendToBase:
    def test_triangle_extensions(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("complete", 3)))
        assert extend_to_nbc_base(x, ()) == frozenset({0, 1})
        assert extend_to_nbc_base(x, {1}) == frozenset({0, 1})
        assert extend_to_nbc_base(x, {2}) == frozenset({0, 2})

    def test_returns_superset_facet(self):
        for g in random_graph_corpus(count=3):
            x = NbcComplex(GraphicMatroid(g))
            faces = brute_nbc_faces(g.edge_count, graphic_indep(g), tuple(range(g.edge_count)))
            rank = x.rank
            for face in sorted(faces, key=sorted)[:200]:
                base = extend_to_nbc_base(x, face)
                assert face <= base
                assert len(base) == rank
                assert is_nbc(x, base)

    def test_rejects_non_face(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("complete", 3)))
        with pytest.raises(PreconditionError):
            extend_to_nbc_base(x, {1, 2})

    def test_generic_path(self):
        g = build_named_graph("cycle", 4)
        fast = NbcComplex(GraphicMatroid(g))
        slow = NbcComplex(_OpaqueMatroid(g))
        for e in range(4):
            assert extend_to_nbc_base(fast, {e}) == extend_to_nbc_base(slow, {e})


class TestThetaGraph:
    def test_matches_long_edge_layout(self):
        g = theta_graph(5)
        x = NbcComplex(GraphicMatroid(g))
        bases = sorted(enumerate_nbc_bases(x), key=sorted)
        assert bases == [
            frozenset({0, 1, 2}),
            frozenset({0, 1, 3}),
            frozenset({0, 2, 3}),
            frozenset({0, 2, 4}),
        ]


class TestComplexConstruction:
    def test_order_length_must_match(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        with pytest.raises(PreconditionError):
            NbcComplex(mat, ElementOrder((0, 1)))

    def test_accepts_ranking_sequence(self):
        mat = GraphicMatroid(build_named_graph("complete", 3))
        x = NbcComplex(mat, (2, 0, 1))
        assert x.order.ranking == (2, 0, 1)

    def test_broken_circuits(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("complete", 3)))
        assert x.broken_circuits() == (frozenset({1, 2}),)

    def test_facets_cached(self):
        x = NbcComplex(GraphicMatroid(build_named_graph("cycle", 5)))
        assert x.facets() is x.facets()
