"""Broken circuits by hand on the triangle, then the Whitney connection.

A circuit minus its smallest edge is a broken circuit; independent sets
avoiding all broken circuits form a complex whose face counts are the
absolute coefficients of the chromatic polynomial.
"""

from nbcwalk import (
    GraphicMatroid,
    NbcComplex,
    build_named_graph,
    chromatic_polynomial,
    count_acyclic_orientations,
    face_numbers,
)

g = build_named_graph("complete", 3)
print(f"triangle: {g.vertex_count} vertices, edges {list(g.edges)}")

x = NbcComplex(GraphicMatroid(g))
print(f"circuits: {[sorted(c) for c in x.matroid.circuits()]}")
print(f"broken circuits: {[sorted(b) for b in x.broken_circuits()]}")

# The only circuit is {0,1,2}; dropping its smallest edge leaves {1,2},
# so exactly one of the three 2-subsets is forbidden.
f = face_numbers(x)
print(f"face numbers: {tuple(f)}")
assert tuple(f) == (1, 3, 2)

chi = chromatic_polynomial(g)
print(f"chromatic coefficients (low to high): {chi.coefficients}")
assert [abs(chi.coefficients[g.vertex_count - k]) for k in range(len(f))] == list(f)

total = sum(f)
print(f"total faces {total} = acyclic orientations {count_acyclic_orientations(g)}")
assert total == count_acyclic_orientations(g) == abs(chi(-1))

# The same identities on a graph with more structure.
k23 = build_named_graph("complete_bipartite", 2, 3)
f23 = face_numbers(NbcComplex(GraphicMatroid(k23)))
chi23 = chromatic_polynomial(k23)
print(f"K_{{2,3}} face numbers: {tuple(f23)}")
assert all(
    n == abs(chi23.coefficients[k23.vertex_count - k]) for k, n in enumerate(f23)
)
assert sum(f23) == count_acyclic_orientations(k23)
print("all identities check out")
