"""Labeled multigraphs and the exact counting oracles built on them.

Everything here is deterministic and exact: chromatic polynomials come from
deletion-contraction over integers, orientation / independent-set / parking
counts from bounded brute force.  Edge indices double as the element ids of the
graphic matroid layered on top, so edge order matters and is part of the data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import PreconditionError, SizeGuardError

CHROMATIC_MAX_EDGES = 20
ORIENTATION_MAX_EDGES = 16
INDEP_COUNT_MAX_VERTICES = 26
PARKING_MAX_NONROOT = 8
PARKING_MAX_FUNCTIONS = 2_000_000


class MultiGraph:
    """Immutable multigraph on vertices 0..n-1 with ordered, indexed edges.

    Parallel edges are allowed and keep separate indices; self-loops are rejected.
    Endpoint pairs are stored sorted, but the edge list order is preserved exactly
    as given (it defines element ids downstream).
    """

    __slots__ = ("vertex_count", "edges", "_eu", "_ev")

    def __init__(self, vertex_count: int, edges):
        vertex_count = int(vertex_count)
        if vertex_count < 0:
            raise PreconditionError("vertex_count must be non-negative")
        normalized = []
        for k, pair in enumerate(edges):
            u, v = pair
            u, v = int(u), int(v)
            if u == v:
                raise PreconditionError(f"edge {k} is a self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise PreconditionError(f"edge {k} has endpoint out of range: ({u}, {v})")
            normalized.append((u, v) if u < v else (v, u))
        self.vertex_count = vertex_count
        self.edges = tuple(normalized)
        self._eu = None
        self._ev = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Number of edge endpoints at v, counting parallel edges."""
        if not 0 <= v < self.vertex_count:
            raise PreconditionError(f"vertex {v} out of range")
        return sum((u == v) + (w == v) for u, w in self.edges)

    def endpoint_arrays(self):
        """Per-edge endpoint arrays (cached), used by the enumeration engines."""
        if self._eu is None:
            self._eu = np.fromiter((e[0] for e in self.edges), dtype=np.int64, count=len(self.edges))
            self._ev = np.fromiter((e[1] for e in self.edges), dtype=np.int64, count=len(self.edges))
        return self._eu, self._ev

    def validate_edge_ids(self, ids) -> frozenset:
        out = frozenset(int(e) for e in ids)
        for e in out:
            if not 0 <= e < self.edge_count:
                raise PreconditionError(f"edge id {e} out of range")
        return out

    def is_connected(self) -> bool:
        """True for the one-vertex and empty graph; otherwise BFS over all edges."""
        n = self.vertex_count
        if n <= 1:
            return True
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        return count == n

    def __eq__(self, other):
        return (
            isinstance(other, MultiGraph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"MultiGraph({self.vertex_count}, {list(self.edges)})"


def build_named_graph(kind: str, *params) -> MultiGraph:
    """Construct a canonical named graph.

    Kinds: complete n; complete_bipartite a b; cycle n (n >= 3); path n (n >= 1
    vertices); disjoint_union_of_copies inner_kind inner_params... copies.
    Edge lists come out in lexicographic endpoint order.
    """
    if kind == "complete":
        (n,) = _int_params(params, 1, kind)
        if n < 0:
            raise PreconditionError("complete: n must be non-negative")
        return MultiGraph(n, list(itertools.combinations(range(n), 2)))
    if kind == "complete_bipartite":
        a, b = _int_params(params, 2, kind)
        if a < 1 or b < 1:
            raise PreconditionError("complete_bipartite: both part sizes must be at least 1")
        return MultiGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "cycle":
        (n,) = _int_params(params, 1, kind)
        if n < 3:
            raise PreconditionError("cycle: length must be at least 3")
        edges = sorted(tuple(sorted((i, (i + 1) % n))) for i in range(n))
        return MultiGraph(n, edges)
    if kind == "path":
        (n,) = _int_params(params, 1, kind)
        if n < 1:
            raise PreconditionError("path: need at least one vertex")
        return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "disjoint_union_of_copies":
        if len(params) < 2:
            raise PreconditionError("disjoint_union_of_copies: need inner kind and copy count")
        inner_kind = params[0]
        try:
            copies = int(params[-1])
        except ValueError:
            raise PreconditionError(f"disjoint_union_of_copies: bad copy count {params[-1]!r}")
        if copies < 0:
            raise PreconditionError("disjoint_union_of_copies: copies must be non-negative")
        inner = build_named_graph(inner_kind, *params[1:-1])
        g = MultiGraph(0, [])
        for _ in range(copies):
            g = disjoint_union(g, inner)
        return g
    raise PreconditionError(f"unknown graph kind {kind!r}")


def _int_params(params, want, kind):
    if len(params) != want:
        raise PreconditionError(f"{kind}: expected {want} parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise PreconditionError(f"{kind}: parameters must be integers, got {params!r}")


def disjoint_union(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    """Disjoint union; g keeps its vertex and edge ids, h is shifted after it."""
    off = g.vertex_count
    edges = list(g.edges) + [(u + off, v + off) for u, v in h.edges]
    return MultiGraph(g.vertex_count + h.vertex_count, edges)


def is_forest(g: MultiGraph, edge_ids) -> bool:
    """True iff the edge set induces no cycle; a parallel pair already fails."""
    s = g.validate_edge_ids(edge_ids)
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in s:
        u, v = g.edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _forest_path(g: MultiGraph, edge_ids, s: int, t: int):
    """Edge ids along the unique s-t path in a forest, or None if disconnected."""
    adj = {}
    for e in edge_ids:
        u, v = g.edges[e]
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    prev = {s: None}
    stack = [s]
    while stack:
        x = stack.pop()
        if x == t:
            break
        for y, e in adj.get(x, ()):
            if y not in prev:
                prev[y] = (x, e)
                stack.append(y)
    if t not in prev:
        return None
    path = []
    x = t
    while prev[x] is not None:
        x, e = prev[x]
        path.append(e)
    return path


def fundamental_cycle(g: MultiGraph, forest, e: int) -> frozenset:
    """The unique cycle created by adding edge e to a forest that does not contain it."""
    f = g.validate_edge_ids(forest)
    e = int(e)
    if not 0 <= e < g.edge_count:
        raise PreconditionError(f"edge id {e} out of range")
    if e in f:
        raise PreconditionError("e already belongs to the forest")
    if not is_forest(g, f):
        raise PreconditionError("the given edge set is not a forest")
    u, v = g.edges[e]
    path = _forest_path(g, f, u, v)
    if path is None:
        raise PreconditionError("adding e keeps the set a forest; no cycle to return")
    return frozenset(path) | {e}


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coefficients[i] multiplies x**i, highest entry nonzero."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def monomial(cls, power: int, scale: int = 1) -> "IntPolynomial":
        return cls((0,) * power + (scale,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)))

    def __sub__(self, other):
        return self + IntPolynomial(tuple(-c for c in other.coefficients))

    def __repr__(self):
        return f"IntPolynomial({self.coefficients})"


def chromatic_polynomial(g: MultiGraph, force: bool = False) -> IntPolynomial:
    """Exact chromatic polynomial by deletion-contraction.

    Parallel edges collapse first (they do not change proper colorings), and
    contraction drops the loops it creates for the same reason.
    """
    if g.edge_count > CHROMATIC_MAX_EDGES and not force:
        raise SizeGuardError(
            f"{g.edge_count} edges exceeds CHROMATIC_MAX_EDGES={CHROMATIC_MAX_EDGES}"
        )
    memo = {}

    def rec(nv, edges):
        if not edges:
            return IntPolynomial.monomial(nv)
        key = (nv, edges)
        hit = memo.get(key)
        if hit is not None:
            return hit
        u, v = min(edges)
        deleted = edges - {(u, v)}
        contracted = set()
        for a, b in deleted:
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2:
                contracted.add((a2, b2) if a2 < b2 else (b2, a2))
        res = rec(nv, deleted) - rec(nv - 1, frozenset(contracted))
        memo[key] = res
        return res

    return rec(g.vertex_count, frozenset(g.edges))


def count_acyclic_orientations(g: MultiGraph, force: bool = False) -> int:
    """Exhaustive count of orientations whose digraph has no directed cycle."""
    m = g.edge_count
    if m > ORIENTATION_MAX_EDGES and not force:
        raise SizeGuardError(f"{m} edges exceeds ORIENTATION_MAX_EDGES={ORIENTATION_MAX_EDGES}")
    n = g.vertex_count
    edges = g.edges
    count = 0
    for mask in range(1 << m):
        out = [[] for _ in range(n)]
        indeg = [0] * n
        for k in range(m):
            u, v = edges[k]
            if mask >> k & 1:
                u, v = v, u
            out[u].append(v)
            indeg[v] += 1
        queue = [x for x in range(n) if indeg[x] == 0]
        done = 0
        while queue:
            x = queue.pop()
            done += 1
            for y in out[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        if done == n:
            count += 1
    return count


@dataclass(frozen=True)
class SizeCounts:
    """counts[k] = number of objects of size k; the last entry is nonzero."""

    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if not counts or any(c < 0 for c in counts):
            raise PreconditionError("counts must be a non-empty tuple of non-negative ints")
        object.__setattr__(self, "counts", counts)

    def __getitem__(self, k):
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def total(self) -> int:
        return sum(self.counts)

    def convolve(self, other: "SizeCounts") -> "SizeCounts":
        out = [0] * (len(self.counts) + len(other.counts) - 1)
        for i, a in enumerate(self.counts):
            for j, b in enumerate(other.counts):
                out[i + j] += a * b
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return SizeCounts(tuple(out))


def iter_independent_sets(g: MultiGraph, force: bool = False):
    """Yield every independent vertex set exactly once, in lexicographic order."""
    n = g.vertex_count
    if n > INDEP_COUNT_MAX_VERTICES and not force:
        raise SizeGuardError(f"{n} vertices exceeds INDEP_COUNT_MAX_VERTICES={INDEP_COUNT_MAX_VERTICES}")
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    def rec(chosen, allowed):
        yield chosen
        a = allowed
        while a:
            v = (a & -a).bit_length() - 1
            a &= a - 1
            yield from rec(chosen + (v,), a & ~nbr[v])

    for vs in rec((), (1 << n) - 1):
        yield frozenset(vs)


def count_independent_sets_by_size(g: MultiGraph, force: bool = False) -> SizeCounts:
    """Tally independent vertex sets by cardinality, one plain enumeration.

    Deliberately no component splitting or convolution here: disjoint-union
    identities are checked against this count, so it must stay independent.
    """
    counts = []
    for s in iter_independent_sets(g, force=force):
        k = len(s)
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return SizeCounts(tuple(counts))


def hardcore_partition(g: MultiGraph, fugacity, force: bool = False) -> Fraction:
    """Independence polynomial evaluated exactly at the given fugacity."""
    lam = Fraction(fugacity)
    counts = count_independent_sets_by_size(g, force=force)
    acc = Fraction(0)
    power = Fraction(1)
    for c in counts:
        acc += c * power
        power *= lam
    return acc


def count_g_parking_functions(g: MultiGraph, root: int, force: bool = False) -> int:
    """Count maps f on the non-root vertices where every nonempty subset S of them
    has some v in S with f(v) strictly below the number of edges from v leaving S."""
    if not 0 <= root < g.vertex_count:
        raise PreconditionError(f"root {root} out of range")
    if not g.is_connected():
        raise PreconditionError("parking functions need a connected graph")
    nonroot = [v for v in range(g.vertex_count) if v != root]
    if len(nonroot) > PARKING_MAX_NONROOT and not force:
        raise SizeGuardError(
            f"{len(nonroot)} non-root vertices exceeds PARKING_MAX_NONROOT={PARKING_MAX_NONROOT}"
        )
    degs = [g.degree(v) for v in nonroot]
    space = 1
    for d in degs:
        space *= max(d, 1)
    if space > PARKING_MAX_FUNCTIONS and not force:
        raise SizeGuardError(
            f"{space} candidate functions exceeds PARKING_MAX_FUNCTIONS={PARKING_MAX_FUNCTIONS}"
        )
    pos = {v: i for i, v in enumerate(nonroot)}
    k = len(nonroot)
    # For every subset S (as a bitmask over nonroot) precompute out-degrees into
    # the complement, root included.
    subset_outdeg = []
    for mask in range(1, 1 << k):
        out = []
        for i in range(k):
            if not mask >> i & 1:
                continue
            v = nonroot[i]
            d = 0
            for u, w in g.edges:
                if u != v and w != v:
                    continue
                other = w if u == v else u
                if other == root or not mask >> pos[other] & 1:
                    d += 1
            out.append((i, d))
        subset_outdeg.append(out)
    count = 0
    for f in itertools.product(*(range(d) for d in degs)):
        if all(any(f[i] < d for i, d in out) for out in subset_outdeg):
            count += 1
    return count
