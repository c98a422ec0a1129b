"""Shared test oracles, all deliberately independent of the package's own
algorithms: acyclicity by component counting (not union-find), spanning trees
by matrix-tree with exact rationals, colorings and broken circuits by direct
brute force."""

import itertools
import random
from fractions import Fraction

from nbcwalk import MultiGraph

SEED = 20260816


def random_graph_corpus(count=20, vertices=6, min_edges=6, max_edges=10, seed=SEED):
    """Seeded connected random graphs with distinct simple edges."""
    rng = random.Random(seed)
    possible = list(itertools.combinations(range(vertices), 2))
    out = []
    while len(out) < count:
        m = rng.randint(min_edges, max_edges)
        g = MultiGraph(vertices, sorted(rng.sample(possible, m)))
        if g.is_connected():
            out.append(g)
    return out


def random_orders(m, count, seed=SEED):
    rng = random.Random(seed + m)
    return [tuple(rng.sample(range(m), m)) for _ in range(count)]


def subset_acyclic(g, ids):
    """Acyclic iff every component spanned by the subset has |E| = |V| - 1."""
    ids = list(ids)
    verts = set()
    adj = {}
    for e in ids:
        u, v = g.edges[e]
        verts.update((u, v))
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = set()
    comps = 0
    for r in verts:
        if r in seen:
            continue
        comps += 1
        seen.add(r)
        stack = [r]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(ids) == len(verts) - comps


def brute_circuits(m, indep):
    """Minimal dependent subsets of 0..m-1 under the given independence test."""
    circuits = []
    for size in range(1, m + 1):
        for combo in itertools.combinations(range(m), size):
            s = frozenset(combo)
            if any(c <= s for c in circuits):
                continue
            if not indep(s):
                circuits.append(s)
    return circuits


def brute_nbc_faces(m, indep, ranking):
    """All subsets that are independent and contain no broken circuit."""
    pos = {e: i for i, e in enumerate(ranking)}
    broken = [c - {min(c, key=pos.__getitem__)} for c in brute_circuits(m, indep)]
    faces = set()
    for size in range(m + 1):
        for combo in itertools.combinations(range(m), size):
            s = frozenset(combo)
            if indep(s) and not any(b <= s for b in broken):
                faces.add(s)
    return faces


def graphic_indep(g):
    return lambda s: subset_acyclic(g, s)


def truncated_indep(g, rank):
    return lambda s: len(s) <= rank and subset_acyclic(g, s)


def spanning_tree_count(g):
    """Matrix-tree determinant with exact rational elimination."""
    n = g.vertex_count
    if n == 0:
        return 0
    if n == 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    mat = [row[1:] for row in lap[1:]]
    size = n - 1
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, size):
            factor = mat[r][col] * inv
            if factor:
                for c in range(col, size):
                    mat[r][c] -= factor * mat[col][c]
    assert det.denominator == 1
    return int(det)


def proper_colorings(g, q):
    """Count proper q-colorings by direct enumeration."""
    count = 0
    for coloring in itertools.product(range(q), repeat=g.vertex_count):
        if all(coloring[u] != coloring[v] for u, v in g.edges):
            count += 1
    return count


def theta_graph(n):
    """The odd-n theta graph used by the long-edge construction."""
    half = (n - 1) // 2
    edges = []
    for i in range(1, half + 1):
        edges.append((0, 1 + i))
        edges.append((1 + i, 1))
    edges.append((0, 1))
    return MultiGraph(2 + half, edges)
