"""Broken-circuit complexes: membership, enumeration, face numbers, links.

A circuit with its order-smallest element removed is a broken circuit; the NBC
complex holds every independent set containing none of them.  The production
membership test inspects one fundamental circuit per single-element extension
(equivalent to the containment definition because fundamental circuits are
unique); the brute-force containment test stays available as the cross-check
oracle.  Enumeration runs on a component-label engine that only re-examines
cycles created by the newest element, which keeps gadget-scale link
enumerations fast.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError, SizeGuardError, VerificationError
from .matroids import GraphicMatroid, Matroid, TruncatedMatroid

MAX_NBC_BASES = 1_000_000
MAX_NBC_FACES = 2_000_000


class ElementOrder:
    """Total order on ground elements: ranking[0] is the smallest element."""

    __slots__ = ("ranking", "_pos", "_pos_arr")

    def __init__(self, ranking):
        ranking = tuple(int(x) for x in ranking)
        if sorted(ranking) != list(range(len(ranking))):
            raise PreconditionError("ranking must be a permutation of 0..m-1")
        self.ranking = ranking
        pos = [0] * len(ranking)
        for i, e in enumerate(ranking):
            pos[e] = i
        self._pos = tuple(pos)
        self._pos_arr = None

    @classmethod
    def identity(cls, m: int) -> "ElementOrder":
        return cls(range(m))

    def positions(self) -> tuple:
        """positions()[e] = rank of element e (0 = smallest)."""
        return self._pos

    def position_array(self) -> np.ndarray:
        if self._pos_arr is None:
            self._pos_arr = np.array(self._pos, dtype=np.int64)
        return self._pos_arr

    def smallest(self, subset) -> int:
        items = list(subset)
        if not items:
            raise PreconditionError("smallest() needs a nonempty subset")
        return min(items, key=self._pos.__getitem__)

    def __len__(self):
        return len(self.ranking)

    def __eq__(self, other):
        return isinstance(other, ElementOrder) and self.ranking == other.ranking

    def __hash__(self):
        return hash(self.ranking)

    def __repr__(self):
        return f"ElementOrder({list(self.ranking)})"


class NbcComplex:
    """A matroid plus an element order; faces are the NBC independent sets."""

    def __init__(self, matroid: Matroid, order=None):
        if not isinstance(matroid, Matroid):
            raise PreconditionError("NbcComplex needs a Matroid")
        if order is None:
            order = ElementOrder.identity(matroid.ground_size)
        elif not isinstance(order, ElementOrder):
            order = ElementOrder(order)
        if len(order) != matroid.ground_size:
            raise PreconditionError("order length must equal the matroid ground size")
        self.matroid = matroid
        self.order = order
        self._facet_cache = None
        self._broken_cache = None

    @property
    def rank(self) -> int:
        return self.matroid.rank

    def facets(self, force: bool = False):
        if self._facet_cache is None:
            self._facet_cache = enumerate_nbc_bases(self, force=force)
        return self._facet_cache

    def broken_circuits(self, force: bool = False):
        """Every circuit minus its order-smallest element; cached."""
        if self._broken_cache is None:
            self._broken_cache = tuple(
                c - {self.order.smallest(c)} for c in self.matroid.circuits(force=force)
            )
        return self._broken_cache

    def __repr__(self):
        return f"NbcComplex({self.matroid!r}, {self.order!r})"


def is_nbc(x: NbcComplex, s) -> bool:
    """Independent, and no single-element extension closes a circuit whose
    order-smallest element is the new one (which would put a broken circuit
    inside s)."""
    m_ = x.matroid
    sub = m_.check_subset(s)
    if not m_.is_independent(sub):
        return False
    pos = x.order.positions()
    for e in range(m_.ground_size):
        if e in sub:
            continue
        circuit = m_.fundamental_circuit(sub, e)
        if circuit is not None and min(circuit, key=pos.__getitem__) == e:
            return False
    return True


def contains_broken_circuit_bruteforce(x: NbcComplex, s, force: bool = False) -> bool:
    """Containment test straight from the definition, via full circuit
    enumeration; desk scale only."""
    sub = x.matroid.check_subset(s)
    return any(b <= sub for b in x.broken_circuits(force=force))


@dataclass(frozen=True)
class FaceNumbers:
    """counts[k] = number of NBC faces of cardinality k, k = 0..rank."""

    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if not counts or any(c < 0 for c in counts):
            raise PreconditionError("counts must be non-empty and non-negative")
        object.__setattr__(self, "counts", counts)

    def __getitem__(self, k):
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def total(self) -> int:
        return sum(self.counts)


def is_log_concave(f) -> bool:
    """n_i^2 >= n_{i-1} * n_{i+1} at every interior index."""
    seq = list(f.counts if isinstance(f, FaceNumbers) else f)
    return all(seq[i] * seq[i] >= seq[i - 1] * seq[i + 1] for i in range(1, len(seq) - 1))


def _resolve_graphic(matroid):
    """(graph, truncation rank) when the matroid is graphic under the hood."""
    if isinstance(matroid, GraphicMatroid):
        return matroid.graph, matroid.rank
    if isinstance(matroid, TruncatedMatroid) and isinstance(matroid.inner, GraphicMatroid):
        return matroid.inner.graph, matroid.target_rank
    return None


class _GraphicEngine:
    """Incremental NBC-face state for (possibly truncated) graphic matroids.

    Keeps union-find-style component labels for the current face; can_add(e)
    decides whether face + e stays NBC by checking, beyond independence, only
    the cycles the new edge creates: absent edges bridging the two merged
    components, plus (at full truncation size) absent elements ranked below the
    face minimum (those would close a size circuit whose smallest element they
    are).  Cycles internal to old components were vetted when the face grew.
    """

    def __init__(self, graph, order: ElementOrder, trunc_rank: int):
        self.m = graph.edge_count
        self.nv = graph.vertex_count
        self.rprime = trunc_rank
        self.rank_arr = order.position_array()
        self.rank_list = list(order.positions())
        self.eu, self.ev = graph.endpoint_arrays()
        self.eu_list = [e[0] for e in graph.edges]
        self.ev_list = [e[1] for e in graph.edges]
        self.in_set = np.zeros(self.m, dtype=bool)
        self.members = []
        self.adj = [[] for _ in range(self.nv)]
        self.labels = np.arange(self.nv, dtype=np.int64)
        self.lu = self.labels[self.eu] if self.m else np.zeros(0, dtype=np.int64)
        self.lv = self.labels[self.ev] if self.m else np.zeros(0, dtype=np.int64)
        self._saved = []
        self._minstack = [self.m]  # order positions are < m, so m acts as +infinity
        self._visit = [0] * self.nv
        self._gen = 0

    def can_add(self, e: int) -> bool:
        """True iff the current face (assumed NBC) stays NBC after adding e."""
        if len(self.members) >= self.rprime or self.in_set[e]:
            return False
        la = int(self.lu[e])
        lb = int(self.lv[e])
        if la == lb:
            return False
        rank_e = self.rank_list[e]
        new_min = rank_e if rank_e < self._minstack[-1] else self._minstack[-1]
        self.in_set[e] = True
        try:
            if len(self.members) + 1 == self.rprime:
                if bool(np.any((self.rank_arr < new_min) & ~self.in_set)):
                    return False
            lu2 = np.where(self.lu == lb, la, self.lu)
            lv2 = np.where(self.lv == lb, la, self.lv)
            cand = np.nonzero((lu2 == lv2) & (self.lu != self.lv) & ~self.in_set)[0]
            if cand.size:
                u, v = self.eu_list[e], self.ev_list[e]
                self.adj[u].append((v, e))
                self.adj[v].append((u, e))
                try:
                    for f in cand.tolist():
                        if self.rank_list[f] < self._path_min(self.eu_list[f], self.ev_list[f]):
                            return False
                finally:
                    self.adj[u].pop()
                    self.adj[v].pop()
            return True
        finally:
            self.in_set[e] = False

    def push(self, e: int):
        la = int(self.lu[e])
        lb = int(self.lv[e])
        self._saved.append((self.labels, self.lu, self.lv))
        labels = self.labels.copy()
        labels[labels == lb] = la
        self.labels = labels
        self.lu = labels[self.eu]
        self.lv = labels[self.ev]
        u, v = self.eu_list[e], self.ev_list[e]
        self.adj[u].append((v, e))
        self.adj[v].append((u, e))
        self.in_set[e] = True
        self.members.append(e)
        rank_e = self.rank_list[e]
        self._minstack.append(rank_e if rank_e < self._minstack[-1] else self._minstack[-1])

    def pop(self):
        e = self.members.pop()
        self._minstack.pop()
        self.in_set[e] = False
        u, v = self.eu_list[e], self.ev_list[e]
        self.adj[u].pop()
        self.adj[v].pop()
        self.labels, self.lu, self.lv = self._saved.pop()

    def _path_min(self, s: int, t: int) -> int:
        """Min order position along the unique s..t path in the current forest."""
        self._gen += 1
        gen = self._gen
        visit = self._visit
        visit[s] = gen
        stack = [(s, self.m)]
        while stack:
            x, mn = stack.pop()
            for y, eid in self.adj[x]:
                if visit[y] == gen:
                    continue
                r = self.rank_list[eid]
                m2 = r if r < mn else mn
                if y == t:
                    return m2
                visit[y] = gen
                stack.append((y, m2))
        raise AssertionError("path endpoints are not connected")

    def current_face_is_nbc(self) -> bool:
        """Full check with no incremental assumption; used on the root face."""
        cur_min = self._minstack[-1]
        if len(self.members) == self.rprime:
            if bool(np.any((self.rank_arr < cur_min) & ~self.in_set)):
                return False
        closers = np.nonzero((self.lu == self.lv) & ~self.in_set)[0]
        for f in closers.tolist():
            if self.rank_list[f] < self._path_min(self.eu_list[f], self.ev_list[f]):
                return False
        return True


def _explore_graphic(x: NbcComplex, root, on_face, force: bool):
    """Visit every NBC face containing root (root included), additions in
    ascending element id.  Returns False when root itself is not a face."""
    graph, rprime = _resolve_graphic(x.matroid)
    eng = _GraphicEngine(graph, x.order, rprime)
    for e in sorted(root):
        if not eng.can_add(e):
            return False
        eng.push(e)
    if not eng.current_face_is_nbc():
        return False
    budget = [MAX_NBC_FACES]

    def rec(start):
        if budget[0] <= 0 and not force:
            raise SizeGuardError(f"more than MAX_NBC_FACES={MAX_NBC_FACES} NBC faces visited")
        budget[0] -= 1
        on_face(eng.members)
        if len(eng.members) >= eng.rprime:
            return
        for e in range(start, eng.m):
            if not eng.in_set[e] and eng.can_add(e):
                eng.push(e)
                rec(e + 1)
                eng.pop()

    rec(0)
    return True


def _explore_generic(x: NbcComplex, root, on_face, force: bool):
    """Oracle-driven fallback walk for matroids that are not graphic."""
    sub = x.matroid.check_subset(root)
    if not is_nbc(x, sub):
        return False
    rprime = x.matroid.rank
    budget = [MAX_NBC_FACES]
    members = sorted(sub)
    current = set(sub)

    def rec(start):
        if budget[0] <= 0 and not force:
            raise SizeGuardError(f"more than MAX_NBC_FACES={MAX_NBC_FACES} NBC faces visited")
        budget[0] -= 1
        on_face(members)
        if len(members) >= rprime:
            return
        for e in range(start, x.matroid.ground_size):
            if e not in current and is_nbc(x, current | {e}):
                current.add(e)
                members.append(e)
                rec(e + 1)
                members.pop()
                current.discard(e)

    rec(0)
    return True


def _explore(x: NbcComplex, root, on_face, force: bool):
    if _resolve_graphic(x.matroid) is not None:
        return _explore_graphic(x, root, on_face, force)
    return _explore_generic(x, root, on_face, force)


def enumerate_nbc_bases(x: NbcComplex, force: bool = False):
    """All NBC bases (facets), in lexicographic order of sorted element tuples."""
    rank = x.matroid.rank
    out = []

    def on_face(members):
        if len(members) == rank:
            if len(out) >= MAX_NBC_BASES and not force:
                raise SizeGuardError(f"more than MAX_NBC_BASES={MAX_NBC_BASES} NBC bases")
            out.append(frozenset(members))

    _explore(x, (), on_face, force)
    out.sort(key=lambda s: tuple(sorted(s)))
    return tuple(out)


def face_numbers(x: NbcComplex, force: bool = False) -> FaceNumbers:
    """Exact Whitney numbers n_0..n_rank by pruned enumeration."""
    counts = [0] * (x.matroid.rank + 1)

    def on_face(members):
        counts[len(members)] += 1

    _explore(x, (), on_face, force)
    return FaceNumbers(tuple(counts))


def link_facets(x: NbcComplex, tau, force: bool = False):
    """sigma minus tau for every NBC base sigma containing tau, lexicographic."""
    sub = x.matroid.check_subset(tau)
    rank = x.matroid.rank
    out = []

    def on_face(members):
        if len(members) == rank:
            if len(out) >= MAX_NBC_BASES and not force:
                raise SizeGuardError(f"more than MAX_NBC_BASES={MAX_NBC_BASES} link facets")
            out.append(frozenset(members) - sub)

    ok = _explore(x, sub, on_face, force)
    if not ok:
        raise PreconditionError("tau is not an NBC face")
    out.sort(key=lambda s: tuple(sorted(s)))
    return tuple(out)


def extend_to_nbc_base(x: NbcComplex, i, force: bool = False) -> frozenset:
    """Backtracking depth-first extension, smallest element id first; returns
    the lexicographically smallest NBC base containing i."""
    sub = x.matroid.check_subset(i)
    rank = x.matroid.rank
    resolved = _resolve_graphic(x.matroid)
    if resolved is not None:
        graph, rprime = resolved
        eng = _GraphicEngine(graph, x.order, rprime)
        for e in sorted(sub):
            if not eng.can_add(e):
                raise PreconditionError("the given set is not an NBC face")
            eng.push(e)
        if not eng.current_face_is_nbc():
            raise PreconditionError("the given set is not an NBC face")

        def rec():
            if len(eng.members) == rank:
                return frozenset(eng.members)
            for e in range(eng.m):
                if not eng.in_set[e] and eng.can_add(e):
                    eng.push(e)
                    got = rec()
                    if got is not None:
                        return got
                    eng.pop()
            return None

        found = rec()
    else:
        if not is_nbc(x, sub):
            raise PreconditionError("the given set is not an NBC face")

        def rec(cur):
            if len(cur) == rank:
                return frozenset(cur)
            for e in range(x.matroid.ground_size):
                if e not in cur and is_nbc(x, cur | {e}):
                    got = rec(cur | {e})
                    if got is not None:
                        return got
            return None

        found = rec(sub)
    if found is None:
        raise VerificationError("purity violated: the NBC face does not extend to a base")
    return found
