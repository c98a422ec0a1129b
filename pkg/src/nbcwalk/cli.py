"""Command-line front end: parse instance files or named-graph specs, dispatch
computations, and emit deterministic JSON reports.

Exit codes: 0 success, 1 malformed input file, 2 precondition or verification
failure (including bad flags), 3 size-guard rejection.  Every report embeds a
digest of the resolved input and the parameter set used.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from .chains import (
    down_up_matrix,
    local_spectral_profile,
    local_to_global_bound,
    spectral_gap,
)
from .errors import PreconditionError, SizeGuardError, VerificationError
from .gadgets import (
    WeightVector,
    build_link_gadget,
    build_long_edge_instance,
    build_opt_reduction,
    gap_certificate,
    max_weight_independent_set,
    max_weight_nbc_base,
    nbc_partition_function,
    partition_link_facets,
    verify_counting_sandwich,
    verify_hardcore_identities,
)
from .graphs import (
    MultiGraph,
    build_named_graph,
    chromatic_polynomial,
    count_acyclic_orientations,
    count_g_parking_functions,
    count_independent_sets_by_size,
    hardcore_partition,
)
from .matroids import GraphicMatroid, TruncatedMatroid
from .nbc import (
    ElementOrder,
    NbcComplex,
    enumerate_nbc_bases,
    face_numbers,
    is_log_concave,
    link_facets,
)
from .verify import run_suite


class MalformedInputError(Exception):
    """Instance file missing, unreadable, or schema-invalid."""


def _float12(x) -> float:
    return float(f"{float(x):.12g}")


def _rational(x) -> str:
    return str(Fraction(x))


def _parse_fraction(text, where):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInputError(f"{where}: cannot parse rational {text!r}: {exc}")


def _load_instance_file(path: str) -> dict:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path}: invalid JSON: {exc}")
    if not isinstance(data, dict):
        raise MalformedInputError(f"{path}: top level must be a JSON object")
    known = {"vertices", "edges", "order", "truncate", "weights"}
    extra = set(data) - known
    if extra:
        raise MalformedInputError(f"{path}: unknown keys {sorted(extra)}")
    if not isinstance(data.get("vertices"), int) or isinstance(data.get("vertices"), bool):
        raise MalformedInputError(f"{path}: 'vertices' must be an integer")
    edges = data.get("edges")
    if not isinstance(edges, list):
        raise MalformedInputError(f"{path}: 'edges' must be a list of [u, v] pairs")
    for k, pair in enumerate(edges):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in pair)
        ):
            raise MalformedInputError(f"{path}: edge {k} is not a pair of integers")
    m = len(edges)
    if "order" in data:
        order = data["order"]
        if (
            not isinstance(order, list)
            or sorted(order) != list(range(m))
        ):
            raise MalformedInputError(f"{path}: 'order' must be a permutation of 0..{m - 1}")
    if "truncate" in data and (
        not isinstance(data["truncate"], int) or isinstance(data["truncate"], bool)
    ):
        raise MalformedInputError(f"{path}: 'truncate' must be an integer")
    if "weights" in data:
        weights = data["weights"]
        if not isinstance(weights, list) or len(weights) != m:
            raise MalformedInputError(f"{path}: 'weights' must list one rational per edge")
        for w in weights:
            _parse_fraction(w, path)
    return data


def _parse_graph_spec(spec: str) -> MultiGraph:
    parts = spec.split(":")
    kind, params = parts[0], parts[1:]
    for p in params:
        if not (p.lstrip("-").isdigit() or kind == "disjoint_union_of_copies"):
            raise PreconditionError(f"graph spec parameter {p!r} is not an integer")
    return build_named_graph(kind, *params)


def _csv_ints(text: str, what: str):
    if text.strip() == "":
        return []
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise PreconditionError(f"--{what} must be a comma-separated list of integers")


def _resolve_instance(args):
    """Build (graph, order, truncate, weights, canonical-dict) from the flags."""
    if getattr(args, "input", None) and getattr(args, "graph", None):
        raise PreconditionError("give exactly one of --input and --graph")
    order_list = None
    truncate = None
    weights = None
    if getattr(args, "input", None):
        data = _load_instance_file(args.input)
        graph = _instance_graph(args.input, data)
        order_list = data.get("order")
        truncate = data.get("truncate")
        if "weights" in data:
            weights = [_parse_fraction(w, args.input) for w in data["weights"]]
    elif getattr(args, "graph", None):
        graph = _parse_graph_spec(args.graph)
    else:
        raise PreconditionError("this command needs --input FILE or --graph SPEC")
    if getattr(args, "order", None) is not None:
        order_list = _csv_ints(args.order, "order")
    if getattr(args, "truncate", None) is not None:
        truncate = args.truncate
    if getattr(args, "weights", None) is not None:
        weights = [_parse_fraction(w, "--weights") for w in args.weights.split(",")]
        if len(weights) != graph.edge_count:
            raise PreconditionError("--weights must list one rational per edge")
    canonical = {
        "vertices": graph.vertex_count,
        "edges": [[u, v] for u, v in graph.edges],
        "order": order_list,
        "truncate": truncate,
        "weights": [str(Fraction(w)) for w in weights] if weights is not None else None,
    }
    order = ElementOrder(order_list) if order_list is not None else ElementOrder.identity(graph.edge_count)
    return graph, order, truncate, weights, canonical


def _instance_graph(path, data) -> MultiGraph:
    try:
        return MultiGraph(data["vertices"], [tuple(e) for e in data["edges"]])
    except PreconditionError as exc:
        raise MalformedInputError(f"{path}: {exc}")


def _digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _complex_from(graph, order, truncate) -> NbcComplex:
    matroid = GraphicMatroid(graph)
    if truncate is not None:
        matroid = TruncatedMatroid(matroid, truncate)
    return NbcComplex(matroid, order)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="instance file (UTF-8 JSON)")
    common.add_argument("--graph", help="named graph spec, e.g. complete:3 or cycle:5")
    common.add_argument("--order", help="element order as a comma-separated permutation")
    common.add_argument("--truncate", type=int, help="truncate the matroid to this rank")
    common.add_argument("--weights", help="per-edge rationals, comma separated")
    common.add_argument("--seed", type=int, default=None, help="reserved; no randomized core paths")
    common.add_argument("--force-size", action="store_true", help="override size guards")
    common.add_argument("--out", help="duplicate the report to this file")

    parser = argparse.ArgumentParser(
        prog="nbcwalk",
        description="Broken-circuit complexes of graphic matroids: walks, gaps, gadgets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("face-numbers", parents=[common], help="face-number vector and log-concavity")
    sub.add_parser("nbc-bases", parents=[common], help="enumerate the NBC bases")
    sub.add_parser("walk-gap", parents=[common], help="down-up walk spectral gap and local-to-global bound")
    sub.add_parser("local-profile", parents=[common], help="local-walk second eigenvalues by level")
    p_link = sub.add_parser("link", parents=[common], help="facets of the link at a face")
    p_link.add_argument("--tau", default="", help="face as comma-separated element ids")

    p_gadget = sub.add_parser("gadget", parents=[common], help="build a certified gadget")
    p_gadget.add_argument("kind", choices=["long-edge", "link"])
    p_gadget.add_argument("--n", type=int, required=True, help="long-edge: ground size; link: bipartite part size")
    p_gadget.add_argument("--l", type=int, help="link gadget chains per vertex")
    p_gadget.add_argument("--m", type=int, help="link gadget target size (default n)")
    p_gadget.add_argument("--report", action="store_true", help="link gadget: add partition and gap certificate")

    p_reduce = sub.add_parser("reduce", parents=[common], help="run a reduction on the input graph")
    p_reduce.add_argument("kind", choices=["opt", "count", "field", "hardcore"])
    p_reduce.add_argument("--vertex-weights", help="opt: per-vertex rationals, comma separated")
    p_reduce.add_argument("--m", type=int, help="count/field: independent-set size")
    p_reduce.add_argument("--l", type=int, help="count/field: chain multiplicity / field value")
    p_reduce.add_argument("--r", type=int, help="hardcore: number of complete-graph copies")

    p_oracle = sub.add_parser("oracle", parents=[common], help="exact counting oracles on the input graph")
    p_oracle.add_argument("kind", choices=["chromatic", "acyclic", "indep", "parking", "hardcore"])
    p_oracle.add_argument("--root", type=int, default=0, help="parking: root vertex")
    p_oracle.add_argument("--fugacity", default="1", help="hardcore: rational fugacity")

    p_verify = sub.add_parser("verify", parents=[common], help="run a named self-check suite")
    p_verify.add_argument("suite", choices=["core", "spectral", "gadgets", "all"])
    return parser


def _params_of(args, keys) -> dict:
    out = {"command": args.command}
    if getattr(args, "kind", None):
        out["kind"] = args.kind
    for key in keys:
        out[key] = getattr(args, key, None)
    out["seed"] = args.seed
    out["force_size"] = bool(args.force_size)
    return out


def _cmd_face_numbers(args):
    graph, order, truncate, _, canonical = _resolve_instance(args)
    x = _complex_from(graph, order, truncate)
    fn = face_numbers(x, force=args.force_size)
    return {
        "n": list(fn.counts),
        "log_concave": is_log_concave(fn),
        "input_digest": _digest(canonical),
        "params": _params_of(args, ["truncate"]),
    }


def _cmd_nbc_bases(args):
    graph, order, truncate, weights, canonical = _resolve_instance(args)
    x = _complex_from(graph, order, truncate)
    bases = enumerate_nbc_bases(x, force=args.force_size)
    report = {
        "count": len(bases),
        "bases": [sorted(b) for b in bases],
        "input_digest": _digest(canonical),
        "params": _params_of(args, ["truncate"]),
    }
    if weights is not None:
        report["weighted_count"] = _rational(
            nbc_partition_function(x, WeightVector(weights), force=args.force_size)
        )
    return report


def _cmd_walk_gap(args):
    graph, order, truncate, _, canonical = _resolve_instance(args)
    x = _complex_from(graph, order, truncate)
    gap = spectral_gap(down_up_matrix(x), force=args.force_size)
    profile = local_spectral_profile(x, force=args.force_size)
    bound = local_to_global_bound(profile, x.rank)
    return {
        "gap": _float12(gap),
        "ltg_bound": _float12(bound),
        "input_digest": _digest(canonical),
        "params": _params_of(args, ["truncate"]),
    }


def _cmd_local_profile(args):
    graph, order, truncate, _, canonical = _resolve_instance(args)
    x = _complex_from(graph, order, truncate)
    profile = local_spectral_profile(x, force=args.force_size)
    d = x.rank
    scaled = [g * (d - k) for k, g in enumerate(profile.gammas)]
    return {
        "gammas": [_float12(g) for g in profile.gammas],
        "ltg_bound": _float12(local_to_global_bound(profile, d)),
        "gamma_scaled_max": _float12(max(scaled)) if scaled else None,
        "rank": d,
        "input_digest": _digest(canonical),
        "params": _params_of(args, ["truncate"]),
    }


def _cmd_link(args):
    graph, order, truncate, _, canonical = _resolve_instance(args)
    x = _complex_from(graph, order, truncate)
    tau = frozenset(_csv_ints(args.tau, "tau"))
    facets = link_facets(x, tau, force=args.force_size)
    return {
        "tau": sorted(tau),
        "facet_count": len(facets),
        "facets": sorted(sorted(f) for f in facets),
        "input_digest": _digest(canonical),
        "params": _params_of(args, ["truncate", "tau"]),
    }


def _cmd_gadget(args):
    if args.kind == "long-edge":
        inst = build_long_edge_instance(args.n)
        canonical = {"gadget": "long-edge", "n": args.n}
        return {
            "n": args.n,
            "B": sorted(inst.marked_sets["B"]),
            "B_prime": sorted(inst.marked_sets["B_prime"]),
            "weights": [_rational(w) for w in inst.weights],
            "common_value": _rational(inst.params["common_value"]),
            "distance_squared": len(inst.marked_sets["B"] ^ inst.marked_sets["B_prime"]),
            "verified": True,
            "input_digest": _digest(canonical),
            "params": _params_of(args, ["n"]),
        }
    if args.l is None:
        raise PreconditionError("gadget link needs --l")
    if args.n < 1:
        raise PreconditionError("gadget link needs --n >= 1")
    m = args.m if args.m is not None else args.n
    base = build_named_graph("complete_bipartite", args.n, args.n)
    inst = build_link_gadget(base, args.l, m, force=args.force_size)
    canonical = {"gadget": "link", "n": args.n, "l": args.l, "m": m}
    report = {
        "ground_size": inst.graph.edge_count,
        "trunc_rank": inst.params["trunc_rank"],
        "tau_size": len(inst.tau),
        "input_digest": _digest(canonical),
        "params": _params_of(args, ["n", "l", "m"]),
    }
    if args.report:
        x = inst.complex()
        facets = link_facets(x, inst.tau, force=args.force_size)
        part = partition_link_facets(inst, facets)
        cert = gap_certificate(inst, force=args.force_size)
        report.update(
            {
                "facet_count": len(facets),
                "S_A_n": part.count_a(m),
                "S_B_1": part.count_b(1),
                "S_0": len(part.neutral),
                "claim_disjoint": True,
                "measured_gap": _float12(cert["measured_gap"]),
                "conductance": _rational(cert["conductance"]),
                "neighbor_ratio": _rational(cert["neighbor_ratio"]),
                "paper_bound": _rational(cert["paper_bound"]),
                "s_a_at_most_half": cert["s_a_at_most_half"],
            }
        )
    return report


def _cmd_reduce(args):
    graph, order, truncate, _, canonical = _resolve_instance(args)
    if args.kind == "opt":
        if not args.vertex_weights:
            raise PreconditionError("reduce opt needs --vertex-weights")
        w = WeightVector([_parse_fraction(p, "--vertex-weights") for p in args.vertex_weights.split(",")])
        inst, edge_w = build_opt_reduction(graph, w)
        base, base_val = max_weight_nbc_base(inst.complex(), edge_w, force=args.force_size)
        ind, ind_val = max_weight_independent_set(graph, w, force=args.force_size)
        recovered = sorted(e - graph.edge_count for e in base if e >= graph.edge_count)
        return {
            "max_independent_weight": _rational(ind_val),
            "max_nbc_weight": _rational(base_val),
            "equal": ind_val == base_val,
            "independent_set": sorted(ind),
            "nbc_base": sorted(base),
            "recovered_set": recovered,
            "input_digest": _digest(canonical),
            "params": _params_of(args, ["vertex_weights"]),
        }
    if args.kind in ("count", "field"):
        if args.m is None or args.l is None:
            raise PreconditionError(f"reduce {args.kind} needs --m and --l")
        mode = "facet-count" if args.kind == "count" else "partition-function"
        report = verify_counting_sandwich(graph, args.m, args.l, mode, force=args.force_size)
        return {
            "mode": mode,
            "source_i_m": _rational(report.source_quantity),
            "target": _rational(report.target_quantity),
            "lower": _rational(report.lower_bound),
            "upper": _rational(report.upper_bound),
            "verdict": report.verdict,
            "input_digest": _digest(canonical),
            "params": _params_of(args, ["m", "l"]),
        }
    if args.r is None:
        raise PreconditionError("reduce hardcore needs --r")
    result = verify_hardcore_identities(graph, args.r, force=args.force_size)
    return {
        "r": result["r"],
        "counts_g": list(result["counts_g"]),
        "counts_copies": list(result["counts_copies"]),
        "counts_union": list(result["counts_union"]),
        "checked_levels": result["checked_levels"],
        "all_identities_hold": True,
        "input_digest": _digest(canonical),
        "params": _params_of(args, ["r"]),
    }


def _cmd_oracle(args):
    graph, order, truncate, _, canonical = _resolve_instance(args)
    params_key = []
    if args.kind == "chromatic":
        chi = chromatic_polynomial(graph, force=args.force_size)
        body = {"coefficients": list(chi.coefficients), "degree": chi.degree, "at_minus_one": chi(-1)}
    elif args.kind == "acyclic":
        body = {"count": count_acyclic_orientations(graph, force=args.force_size)}
    elif args.kind == "indep":
        counts = count_independent_sets_by_size(graph, force=args.force_size)
        body = {"counts": list(counts.counts), "total": counts.total()}
    elif args.kind == "parking":
        body = {
            "count": count_g_parking_functions(graph, args.root, force=args.force_size),
            "root": args.root,
        }
        params_key = ["root"]
    else:
        lam = _parse_fraction(args.fugacity, "--fugacity")
        body = {
            "partition_function": _rational(hardcore_partition(graph, lam, force=args.force_size)),
            "fugacity": _rational(lam),
        }
        params_key = ["fugacity"]
    body["input_digest"] = _digest(canonical)
    body["params"] = _params_of(args, params_key)
    return body


def _cmd_verify(args):
    checks = run_suite(args.suite)
    return {
        "suite": args.suite,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
        "all_passed": all(c.passed for c in checks),
        "input_digest": _digest({"suite": args.suite}),
        "params": _params_of(args, ["suite"]),
    }


_DISPATCH = {
    "face-numbers": _cmd_face_numbers,
    "nbc-bases": _cmd_nbc_bases,
    "walk-gap": _cmd_walk_gap,
    "local-profile": _cmd_local_profile,
    "link": _cmd_link,
    "gadget": _cmd_gadget,
    "reduce": _cmd_reduce,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        report = _DISPATCH[args.command](args)
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (PreconditionError, VerificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    text = json.dumps(report, indent=2, sort_keys=True)
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
