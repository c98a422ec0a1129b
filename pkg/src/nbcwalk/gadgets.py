"""Gadget builders and verifiers: long polytope edges, link bottlenecks, and
the optimization / counting / external-field / hardcore reductions.

Every builder returns the constructed instance together with the exact
certificate its construction promises, and every verifier re-derives the
certified quantity by exhaustive enumeration in exact arithmetic.  A failed
certificate raises VerificationError rather than returning a degraded report.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .chains import conductance, down_up_matrix, neighbor_ratio, spectral_gap
from .errors import PreconditionError, SizeGuardError, VerificationError
from .graphs import (
    MultiGraph,
    build_named_graph,
    count_independent_sets_by_size,
    disjoint_union,
    iter_independent_sets,
)
from .matroids import GraphicMatroid, Matroid, TruncatedMatroid
from .nbc import ElementOrder, NbcComplex, enumerate_nbc_bases, is_nbc, link_facets

MAX_GADGET_GROUND = 5000
HARDCORE_MAX_COPIES = 3
HARDCORE_MAX_BASE_VERTICES = 10


class WeightVector:
    """Exact rational weights indexed by element id."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        self.weights = tuple(Fraction(w) for w in weights)

    @classmethod
    def constant(cls, length: int, value=1) -> "WeightVector":
        return cls([Fraction(value)] * int(length))

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, e):
        return self.weights[e]

    def __iter__(self):
        return iter(self.weights)

    def weight_of(self, subset) -> Fraction:
        """Inner product with the subset's indicator vector."""
        return sum((self.weights[e] for e in subset), Fraction(0))

    def product_over(self, subset) -> Fraction:
        out = Fraction(1)
        for e in subset:
            out *= self.weights[e]
        return out

    def __eq__(self, other):
        return isinstance(other, WeightVector) and self.weights == other.weights

    def __repr__(self):
        return f"WeightVector({[str(w) for w in self.weights]})"


@dataclass(eq=False)
class GadgetInstance:
    """A constructed graph with its order, matroid, distinguished face and
    named element sets, plus construction parameters and optional weights."""

    graph: MultiGraph
    order: ElementOrder
    matroid: Matroid
    tau: frozenset
    marked_sets: dict
    params: dict
    weights: WeightVector | None = None
    base_graph: MultiGraph | None = None

    def complex(self) -> NbcComplex:
        return NbcComplex(self.matroid, self.order)


@dataclass(eq=False)
class ReductionReport:
    """Certified sandwich: verdict is exactly lower <= target <= upper."""

    source_quantity: Fraction
    target_quantity: Fraction
    lower_bound: Fraction
    upper_bound: Fraction
    verdict: bool
    mode: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.lower_bound > self.upper_bound:
            raise PreconditionError("lower_bound exceeds upper_bound")
        expected = self.lower_bound <= self.target_quantity <= self.upper_bound
        if self.verdict != expected:
            raise PreconditionError("verdict does not match the recomputed bounds")


def build_long_edge_instance(n: int) -> GadgetInstance:
    """Theta graph whose NBC base polytope has the certified long edge {B, B'}.

    (n-1)/2 two-edge paths join the rim vertices, edge n-1 joins them directly;
    B is the long edge plus the upper path edges, B' the first edge plus the
    lower ones.  The long edge's weight is computed (not assumed) to equalize
    the two bases, then the full edge-witness condition is certified
    exhaustively.
    """
    n = int(n)
    if n < 3 or n % 2 == 0:
        raise PreconditionError("n must be an odd integer >= 3")
    half = (n - 1) // 2
    edges = []
    for i in range(1, half + 1):
        mid = 1 + i
        edges.append((0, mid))
        edges.append((mid, 1))
    edges.append((0, 1))
    graph = MultiGraph(2 + half, edges)
    order = ElementOrder.identity(n)
    matroid = GraphicMatroid(graph)
    b1 = frozenset({n - 1} | {2 * i - 2 for i in range(1, half + 1)})
    b2 = frozenset({0} | {2 * i - 1 for i in range(1, half + 1)})
    weights = [Fraction(j % 2) for j in range(n - 1)]
    long_weight = sum(weights[e] for e in b2) - sum(weights[e] for e in b1 if e != n - 1)
    weights.append(long_weight)
    w = WeightVector(weights)
    x = NbcComplex(matroid, order)
    bases = enumerate_nbc_bases(x)
    if b1 not in bases or b2 not in bases:
        raise VerificationError("distinguished bases are not NBC bases")
    if not verify_edge_witness(bases, w, b1, b2):
        raise VerificationError("computed weight vector fails the edge-witness conditions")
    return GadgetInstance(
        graph=graph,
        order=order,
        matroid=matroid,
        tau=frozenset(),
        marked_sets={"B": b1, "B_prime": b2, "long_edge": frozenset({n - 1})},
        params={"n": n, "common_value": w.weight_of(b1)},
        weights=w,
    )


def verify_edge_witness(bases, w: WeightVector, b1, b2) -> bool:
    """True iff b1 and b2 tie for the strict maximum of <w, 1_base>."""
    bases = [frozenset(b) for b in bases]
    b1, b2 = frozenset(b1), frozenset(b2)
    if b1 == b2:
        raise PreconditionError("the two bases must be distinct")
    if b1 not in bases or b2 not in bases:
        raise PreconditionError("both bases must belong to the given facet list")
    v1 = w.weight_of(b1)
    if v1 != w.weight_of(b2):
        return False
    return all(w.weight_of(b) < v1 for b in bases if b != b1 and b != b2)


def build_link_gadget(
    base_graph: MultiGraph, l: int, target_size: int, force: bool = False
) -> GadgetInstance:
    """Apex-and-subdivision gadget: pendant y via e0, apex z, and l two-edge
    chains z - z_{v,i} - v per base vertex; truncated to rank l*|V| + m + 1
    with order blocks e0 < E < e-chain edges < f-chain edges and tau = the
    e-chain edges."""
    if not isinstance(base_graph, MultiGraph):
        raise PreconditionError("base_graph must be a MultiGraph")
    l = int(l)
    m = int(target_size)
    nv = base_graph.vertex_count
    me = base_graph.edge_count
    if l < 1:
        raise PreconditionError("l must be at least 1")
    if not 0 <= m <= nv:
        raise PreconditionError(f"target_size must lie in 0..{nv} (the base vertex count)")
    if nv < 1:
        raise PreconditionError("the base graph needs at least one vertex")
    ground = 1 + me + 2 * nv * l
    if ground > MAX_GADGET_GROUND and not force:
        raise SizeGuardError(f"ground size {ground} exceeds MAX_GADGET_GROUND={MAX_GADGET_GROUND}")
    z = nv
    y = nv + 1

    def chain_vertex(v, i):
        return nv + 2 + v * l + i

    edges = [(z, y)]
    edges.extend(base_graph.edges)
    for v in range(nv):
        for i in range(l):
            edges.append((z, chain_vertex(v, i)))
    for v in range(nv):
        for i in range(l):
            edges.append((chain_vertex(v, i), v))
    graph = MultiGraph(nv + 2 + nv * l, edges)
    order = ElementOrder.identity(graph.edge_count)
    trunc_rank = l * nv + m + 1
    matroid = TruncatedMatroid(GraphicMatroid(graph), trunc_rank)
    e_start = 1 + me
    f_start = e_start + nv * l
    tau = frozenset(range(e_start, f_start))
    marked = {
        "e0": frozenset({0}),
        "E": frozenset(range(1, e_start)),
        "e_edges": tau,
        "f_edges": frozenset(range(f_start, graph.edge_count)),
    }
    inst = GadgetInstance(
        graph=graph,
        order=order,
        matroid=matroid,
        tau=tau,
        marked_sets=marked,
        params={"l": l, "m": m, "trunc_rank": trunc_rank, "base_vertices": nv, "base_edges": me},
        base_graph=base_graph,
    )
    if not is_nbc(inst.complex(), tau):
        raise VerificationError("tau is not an NBC face of the constructed complex")
    return inst


def _bipartition(g: MultiGraph):
    """Canonical 2-coloring classes (class of the smallest vertex first per
    component), or None when an odd cycle exists."""
    color = [-1] * g.vertex_count
    adj = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for start in range(g.vertex_count):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for ynb in adj[x]:
                if color[ynb] == -1:
                    color[ynb] = 1 - color[x]
                    stack.append(ynb)
                elif color[ynb] == color[x]:
                    return None
    side_a = frozenset(v for v in range(g.vertex_count) if color[v] == 0)
    side_b = frozenset(v for v in range(g.vertex_count) if color[v] == 1)
    return side_a, side_b


@dataclass(eq=False)
class LinkPartition:
    """Link facets split by how they meet the two f-edge families."""

    by_a: dict
    by_b: dict
    neutral: tuple
    f_a: frozenset
    f_b: frozenset

    @property
    def s_a(self) -> tuple:
        return tuple(f for i in sorted(self.by_a) for f in self.by_a[i])

    @property
    def s_b(self) -> tuple:
        return tuple(f for i in sorted(self.by_b) for f in self.by_b[i])

    def count_a(self, i: int) -> int:
        return len(self.by_a.get(i, ()))

    def count_b(self, i: int) -> int:
        return len(self.by_b.get(i, ()))


def partition_link_facets(inst: GadgetInstance, facets) -> LinkPartition:
    """Split link facets by their f-edge side and certify the proof's counting
    claims: no facet meets both sides, every facet contains e0, the all-A level
    has exactly l^m facets, and the neutral / B-side levels obey the binomial
    bounds."""
    if inst.base_graph is None or "f_edges" not in inst.marked_sets:
        raise PreconditionError("instance was not built by build_link_gadget")
    parts = _bipartition(inst.base_graph)
    if parts is None:
        raise PreconditionError("the base graph is not bipartite")
    l = inst.params["l"]
    m = inst.params["m"]
    me = inst.params["base_edges"]
    side_a, side_b = parts
    if len(side_a) != m:
        if len(side_b) == m:
            side_a, side_b = side_b, side_a
        else:
            raise PreconditionError(
                f"no bipartition side has size m={m}; sides have sizes "
                f"{len(side_a)} and {len(side_b)}"
            )
    f_start = min(inst.marked_sets["f_edges"])

    def owner(f_edge):
        return (f_edge - f_start) // l

    f_a = frozenset(e for e in inst.marked_sets["f_edges"] if owner(e) in side_a)
    f_b = frozenset(e for e in inst.marked_sets["f_edges"] if owner(e) in side_b)
    by_a, by_b, neutral = {}, {}, []
    for facet in facets:
        facet = frozenset(facet)
        na, nb = len(facet & f_a), len(facet & f_b)
        if na and nb:
            raise VerificationError(f"facet {sorted(facet)} meets both f-edge sides")
        if 0 not in facet:
            raise VerificationError(f"facet {sorted(facet)} does not contain e0")
        if na:
            by_a.setdefault(na, []).append(facet)
        elif nb:
            by_b.setdefault(nb, []).append(facet)
        else:
            neutral.append(facet)
    part = LinkPartition(
        by_a={i: tuple(v) for i, v in by_a.items()},
        by_b={i: tuple(v) for i, v in by_b.items()},
        neutral=tuple(neutral),
        f_a=f_a,
        f_b=f_b,
    )
    if part.count_a(m) != l**m:
        raise VerificationError(
            f"|S_A,{m}| = {part.count_a(m)} differs from l^m = {l**m}"
        )
    if len(part.neutral) > math.comb(me, m):
        raise VerificationError("neutral facet count exceeds C(|E|, m)")
    if part.count_b(1) > len(side_b) * l * math.comb(me, max(m - 1, 0)):
        raise VerificationError("|S_B,1| exceeds its binomial bound")
    return part


def gap_certificate(inst: GadgetInstance, force: bool = False) -> dict:
    """Measure the link walk's gap and certify the bottleneck inequalities on
    the A-side facet family; the paper_bound key carries the closed-form
    bottleneck bound m^{2m}(1+l)/l^m."""
    l = inst.params["l"]
    m = inst.params["m"]
    x = inst.complex()
    facets = link_facets(x, inst.tau, force=force)
    part = partition_link_facets(inst, facets)
    walk = down_up_matrix(facets)
    gap = spectral_gap(walk, force=force)
    s_a = part.s_a
    if not s_a or len(s_a) == len(facets):
        raise PreconditionError("the A-side family is empty or exhausts the facets")
    phi = conductance(walk, s_a)
    ratio = neighbor_ratio(walk, s_a)
    at_most_half = 2 * len(s_a) <= len(facets)
    if at_most_half:
        if gap / 2 > float(phi) + 1e-7:
            raise VerificationError(
                f"Cheeger lower bound fails: gap/2 = {gap / 2} > conductance = {float(phi)}"
            )
        if phi > ratio:
            raise VerificationError(
                f"conductance {phi} exceeds neighbor ratio {ratio}"
            )
    return {
        "measured_gap": gap,
        "conductance": phi,
        "neighbor_ratio": ratio,
        "paper_bound": Fraction(m ** (2 * m) * (1 + l), l**m),
        "facet_count": len(facets),
        "s_a_size": len(s_a),
        "s_a_at_most_half": at_most_half,
    }


def build_opt_reduction(g: MultiGraph, vertex_weights: WeightVector):
    """Apex construction carrying vertex weights onto apex edges: maximizing
    NBC base weight then solves max-weight independent set on g."""
    if not isinstance(g, MultiGraph):
        raise PreconditionError("g must be a MultiGraph")
    if not isinstance(vertex_weights, WeightVector):
        vertex_weights = WeightVector(vertex_weights)
    if len(vertex_weights) != g.vertex_count:
        raise PreconditionError("need exactly one weight per vertex")
    if any(w < 0 for w in vertex_weights):
        raise PreconditionError("vertex weights must be non-negative")
    z = g.vertex_count
    edges = list(g.edges) + [(v, z) for v in range(g.vertex_count)]
    graph = MultiGraph(g.vertex_count + 1, edges)
    order = ElementOrder.identity(graph.edge_count)
    matroid = GraphicMatroid(graph)
    edge_weights = WeightVector(
        [Fraction(0)] * g.edge_count + list(vertex_weights)
    )
    inst = GadgetInstance(
        graph=graph,
        order=order,
        matroid=matroid,
        tau=frozenset(),
        marked_sets={
            "E": frozenset(range(g.edge_count)),
            "apex_edges": frozenset(range(g.edge_count, graph.edge_count)),
        },
        params={"apex": z},
        weights=edge_weights,
        base_graph=g,
    )
    return inst, edge_weights


def max_weight_independent_set(g: MultiGraph, vertex_weights: WeightVector, force: bool = False):
    """Exhaustive maximizer over vertex independent sets; ties keep the
    lexicographically greatest set."""
    if not isinstance(vertex_weights, WeightVector):
        vertex_weights = WeightVector(vertex_weights)
    if len(vertex_weights) != g.vertex_count:
        raise PreconditionError("need exactly one weight per vertex")
    best = None
    best_set = None
    for s in iter_independent_sets(g, force=force):
        val = vertex_weights.weight_of(s)
        if best is None or val >= best:
            best = val
            best_set = s
    return best_set, best


def max_weight_nbc_base(x: NbcComplex, w: WeightVector, force: bool = False):
    """Exhaustive maximizer over NBC bases; ties keep the lexicographically
    greatest base."""
    if not isinstance(w, WeightVector):
        w = WeightVector(w)
    if len(w) != x.matroid.ground_size:
        raise PreconditionError("need exactly one weight per element")
    bases = x.facets(force=force)
    if not bases:
        raise PreconditionError("the complex has no bases")
    best = None
    best_base = None
    for b in bases:
        val = w.weight_of(b)
        if best is None or val >= best:
            best = val
            best_base = b
    return best_base, best


def build_field_reduction(g: MultiGraph, m: int, l):
    """Apex-plus-pendant gadget truncated to rank m+1 with field weight l on
    the apex edges; its weighted NBC base count sandwiches i_m(g)."""
    if not isinstance(g, MultiGraph):
        raise PreconditionError("g must be a MultiGraph")
    m = int(m)
    l = Fraction(l)
    if l < 1:
        raise PreconditionError("the field value l must be at least 1")
    counts = count_independent_sets_by_size(g)
    if not 0 <= m < len(counts.counts):
        raise PreconditionError(
            f"m={m} exceeds the independence number {len(counts.counts) - 1}"
        )
    if l < 2 * g.edge_count:
        warnings.warn(
            f"l = {l} is below 2|E| = {2 * g.edge_count}; the sandwich bounds are not guaranteed",
            stacklevel=2,
        )
    z = g.vertex_count
    y = g.vertex_count + 1
    edges = [(y, z)] + list(g.edges) + [(v, z) for v in range(g.vertex_count)]
    graph = MultiGraph(g.vertex_count + 2, edges)
    order = ElementOrder.identity(graph.edge_count)
    matroid = TruncatedMatroid(GraphicMatroid(graph), m + 1)
    apex_start = 1 + g.edge_count
    lam = WeightVector(
        [Fraction(1)] * apex_start + [l] * g.vertex_count
    )
    inst = GadgetInstance(
        graph=graph,
        order=order,
        matroid=matroid,
        tau=frozenset(),
        marked_sets={
            "e0": frozenset({0}),
            "E": frozenset(range(1, apex_start)),
            "apex_edges": frozenset(range(apex_start, graph.edge_count)),
        },
        params={"l": l, "m": m, "trunc_rank": m + 1},
        weights=lam,
        base_graph=g,
    )
    return inst, lam


def nbc_partition_function(x: NbcComplex, lam: WeightVector, force: bool = False) -> Fraction:
    """Sum over NBC bases of the product of element weights."""
    if not isinstance(lam, WeightVector):
        lam = WeightVector(lam)
    if len(lam) != x.matroid.ground_size:
        raise PreconditionError("need exactly one weight per element")
    return sum(
        (lam.product_over(b) for b in enumerate_nbc_bases(x, force=force)), Fraction(0)
    )


def verify_counting_sandwich(g: MultiGraph, m: int, l: int, mode: str, force: bool = False) -> ReductionReport:
    """Certify l^m * i_m(g) <= target <= 2 l^m * i_m(g), the target being the
    link-gadget facet count or the field-gadget partition function."""
    if mode not in ("facet-count", "partition-function"):
        raise PreconditionError("mode must be 'facet-count' or 'partition-function'")
    m = int(m)
    l = int(l)
    if m < 1:
        raise PreconditionError("m must be at least 1")
    counts = count_independent_sets_by_size(g, force=force)
    if m >= len(counts.counts):
        raise PreconditionError(f"m={m} exceeds the independence number {len(counts.counts) - 1}")
    for k in range(m):
        if counts[k] > counts[m]:
            raise PreconditionError(
                f"precondition i_k <= i_m fails at k={k}: {counts[k]} > {counts[m]}"
            )
    if l < 2 * g.edge_count:
        raise PreconditionError(f"l must be at least 2|E| = {2 * g.edge_count}")
    n_source = counts[m]
    if mode == "facet-count":
        inst = build_link_gadget(g, l, m, force=force)
        target = Fraction(len(link_facets(inst.complex(), inst.tau, force=force)))
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            inst, lam = build_field_reduction(g, m, l)
        target = nbc_partition_function(inst.complex(), lam, force=force)
    lower = Fraction(l**m * n_source)
    upper = 2 * lower
    return ReductionReport(
        source_quantity=Fraction(n_source),
        target_quantity=target,
        lower_bound=lower,
        upper_bound=upper,
        verdict=lower <= target <= upper,
        mode=mode,
        params={"m": m, "l": l},
    )


def build_hardcore_reduction(g: MultiGraph, r: int) -> MultiGraph:
    """Disjoint union of g with r copies of the complete graph on 8 vertices."""
    r = int(r)
    if r < 0:
        raise PreconditionError("r must be non-negative")
    k8 = build_named_graph("complete", 8)
    out = g
    for _ in range(r):
        out = disjoint_union(out, k8)
    return out


def verify_hardcore_identities(g: MultiGraph, r: int, force: bool = False) -> dict:
    """Exhaustively certify the disjoint-union counting identities: the
    closed-form i_m(r K8) = C(r,m) 8^m, the convolution for the union, the
    count-ratio closed form, and the T_{S,k} levels with their successor
    ratio.  Any exact mismatch raises with the failing identity."""
    r = int(r)
    if r < 0:
        raise PreconditionError("r must be non-negative")
    if (r > HARDCORE_MAX_COPIES or g.vertex_count > HARDCORE_MAX_BASE_VERTICES) and not force:
        raise SizeGuardError(
            f"r={r}, |V|={g.vertex_count} exceeds desk scale "
            f"(r <= {HARDCORE_MAX_COPIES}, |V| <= {HARDCORE_MAX_BASE_VERTICES})"
        )
    union = build_hardcore_reduction(g, r)
    counts_g = count_independent_sets_by_size(g, force=True)
    copies = build_named_graph("disjoint_union_of_copies", "complete", 8, r)
    counts_copies = count_independent_sets_by_size(copies, force=True)
    for mm in range(len(counts_copies.counts)):
        expected = math.comb(r, mm) * 8**mm
        if counts_copies[mm] != expected:
            raise VerificationError(
                f"i_{mm}(rK8) = {counts_copies[mm]} differs from C(r,{mm})*8^{mm} = {expected}"
            )
    if len(counts_copies.counts) != r + 1:
        raise VerificationError("r K8 independence counts do not stop at size r")
    counts_union = count_independent_sets_by_size(union, force=True)
    for k in range(len(counts_union.counts)):
        conv = sum(counts_g[j] * counts_copies[k - j] for j in range(k + 1))
        if counts_union[k] != conv:
            raise VerificationError(
                f"convolution fails at size {k}: union has {counts_union[k]}, formula {conv}"
            )
    for mm in range(r + 1):
        for j in range(mm + 1):
            direct = Fraction(counts_copies[mm - j], counts_copies[mm])
            formula = Fraction(1, 8**j)
            for i in range(j):
                formula *= Fraction(mm - i, r - mm + j - i)
            if direct != formula:
                raise VerificationError(
                    f"count-ratio closed form fails at m={mm}, j={j}: {direct} != {formula}"
                )
    base_vertices = frozenset(range(g.vertex_count))
    levels = {}
    for ind in iter_independent_sets(union, force=True):
        key = (ind & base_vertices, len(ind))
        levels[key] = levels.get(key, 0) + 1
    for s in iter_independent_sets(g, force=True):
        for k in range(len(s), len(s) + r + 1):
            expected = math.comb(r, k - len(s)) * 8 ** (k - len(s))
            got = levels.get((s, k), 0)
            if got != expected:
                raise VerificationError(
                    f"|T_S,k| fails for S={sorted(s)}, k={k}: {got} != {expected}"
                )
            if k > len(s):
                prev = levels.get((s, k - 1), 0)
                ratio = Fraction(got, prev)
                formula = Fraction(8 * (r - k + len(s) + 1), k - len(s))
                if ratio != formula:
                    raise VerificationError(
                        f"successor ratio fails for S={sorted(s)}, k={k}: {ratio} != {formula}"
                    )
    return {
        "r": r,
        "union_vertices": union.vertex_count,
        "union_edges": union.edge_count,
        "counts_g": tuple(counts_g),
        "counts_copies": tuple(counts_copies),
        "counts_union": tuple(counts_union),
        "checked_levels": len(levels),
    }


def critical_threshold(delta: int) -> Fraction:
    """Hardcore critical fugacity (Delta-1)^(Delta-1) / (Delta-2)^Delta."""
    delta = int(delta)
    if delta < 3:
        raise PreconditionError("delta must be at least 3")
    return Fraction((delta - 1) ** (delta - 1), (delta - 2) ** delta)
