"""Command-line front end; every command prints one JSON report on stdout.

Exit status: 0 when all checks are equal, 2 when any check fails, 1 on
usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
from fractions import Fraction
from typing import Any, Sequence

from .complexity import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    DisconnectedGraphError,
    enumerate_spanning_trees,
    kappa_cofactor,
    kappa_enumerate,
    kappa_sigma_enumerate,
    kappa_sigma_jet,
    kruskal_min_sigma,
    reduced_incidence_det,
)
from .detfun import (
    BARTHOLDI_WARNING,
    PRESET_NAMES,
    Anchor,
    AnchorError,
    CheckReport,
    DetFunSpec,
    bartholdi_anchor_audit,
    normalize_var,
    phi_eval,
    preset,
    verify_corollary,
    verify_theorem1,
    verify_theorem2,
)
from .generators import random_anchored_spec, random_connected_graph
from .graph import (
    GraphFormatError,
    WeightedGraph,
    complete_graph,
    default_orientation,
    dumps_graph,
    laplacian,
    load_graph,
)
from .hamming import (
    DEFAULT_VERTEX_BUDGET,
    HammingSpec,
    build_graph,
    divide_out_spectrum,
    kappa_closed_form,
    kappa_sigma_closed_form,
    mst_closed_form,
    spectrum_closed_form,
)
from .linalg import berkowitz_charpoly
from .ring import format_rational, parse_rational

CHECK_LIMIT = 16  # largest prod(m_i) cross-checked against the general engine


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _q(x: Any) -> str:
    return format_rational(x)


def _report(command: str, inputs: dict, results: dict | None = None,
            checks: Sequence[CheckReport] = (), warnings: Sequence[str] = ()) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results or {},
        "checks": [c.to_json() for c in checks],
        "warnings": list(warnings),
    }


def _graph_summary(g: WeightedGraph) -> dict:
    return {"nu": g.vertex_count, "eps": g.edge_count, "omega": _q(g.total_weight())}


def _split_list(text: str) -> list[str]:
    return [t for t in (s.strip() for s in text.split(",")) if t]


# --------------------------------------------------------------------- kappa


def cmd_kappa(args) -> dict:
    g = load_graph(args.graph)
    inputs = {"graph": args.graph, "method": args.method, **_graph_summary(g)}
    warnings = [] if g.graph.is_connected() else ["graph is disconnected"]
    if args.method == "cofactor":
        i, j = args.index or (1, 1)
        inputs["index"] = [i, j]
        results = {"kappa": _q(kappa_cofactor(g, i, j))}
    else:
        trees = enumerate_spanning_trees(g, budget=args.budget)
        results = {"kappa": _q(kappa_enumerate(g, budget=args.budget)), "tree_count": str(len(trees))}
    return _report("kappa", inputs, results, warnings=warnings)


def cmd_kappa_sigma(args) -> dict:
    g = load_graph(args.graph)
    inputs = {"graph": args.graph, "method": args.method, **_graph_summary(g)}
    warnings = [] if g.graph.is_connected() else ["graph is disconnected"]
    if args.method == "jet":
        k, ks = kappa_sigma_jet(g)
        results = {"kappa_sigma": _q(ks), "kappa_underlying": _q(k)}
    else:
        trees = enumerate_spanning_trees(g, budget=args.budget)
        results = {
            "kappa_sigma": _q(kappa_sigma_enumerate(g, budget=args.budget)),
            "tree_count": str(len(trees)),
        }
    return _report("kappa-sigma", inputs, results, warnings=warnings)


# -------------------------------------------------------------------- detfun


def _load_spec(ref: str):
    """Preset name or spec file -> (spec, anchor point or None, preset or None)."""
    if ref in PRESET_NAMES:
        p = preset(ref)
        return p.spec, p.anchor.point(), p
    if not os.path.exists(ref):
        raise UsageError(f"{ref!r} is neither a preset ({', '.join(PRESET_NAMES)}) nor a file")
    with open(ref, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{ref}: line {exc.lineno}: {exc.msg}") from None
    spec = DetFunSpec.from_json(doc)
    point = None
    if doc.get("anchor") is not None:
        a, b = doc["anchor"]
        point = (parse_rational(str(a)), parse_rational(str(b)))
    return spec, point, None


def cmd_detfun(args) -> dict:
    g = load_graph(args.graph)
    spec, point, p = _load_spec(args.spec)
    inputs = {"graph": args.graph, "spec": args.spec, "action": args.action, **_graph_summary(g)}
    results: dict[str, Any] = {}
    checks: list[CheckReport] = []
    warnings: list[str] = []
    if p is not None and p.name == "bartholdi":
        warnings.append(BARTHOLDI_WARNING)

    if args.action == "eval":
        if len(args.params) != 2:
            raise UsageError("eval needs two values: LAMBDA MU")
        l0, m0 = (parse_rational(x) for x in args.params)
        inputs["point"] = [_q(l0), _q(m0)]
        results["phi"] = _q(phi_eval(spec, g, l0, m0))
        return _report("detfun", inputs, results, warnings=warnings)

    if len(args.params) != 1:
        raise UsageError(f"{args.action} needs one variable name")
    var = normalize_var(args.params[0])
    inputs["var"] = "lambda" if var == "l" else "mu"
    if point is None:
        raise UsageError("spec file has no anchor; partial and mixed need one")
    anchor = Anchor(spec, *point)
    inputs["anchor"] = [_q(anchor.alpha), _q(anchor.beta)]

    if args.action == "partial":
        rep = verify_theorem1(spec, g, var, anchor)
        results["partial"] = _q(rep.lhs)
        checks.append(rep)
        if p is not None:
            ok_var = var == p.variable or p.name == "bartholdi"
            if ok_var and (g.is_unit() or not p.unit_weights_only):
                checks.append(verify_corollary(p.name, g, var))
            elif ok_var:
                warnings.append(f"{p.name}: corollary is stated for unit weights; only the general identity was checked")
    else:
        rep = verify_theorem2(spec, g, var, anchor)
        results["mixed_partial"] = _q(rep.lhs)
        checks.append(rep)
    return _report("detfun", inputs, results, checks, warnings)


# -------------------------------------------------------------------- verify

DEFAULT_COUNTS = {"lemma1": 30, "lemma2": 100, "theorem1": 100, "theorem2": 50, "corollaries": 10}


def _graphs(args, suite: str, rng: random.Random, **kw) -> list[tuple[str, WeightedGraph]]:
    if args.graph:
        return [(args.graph, load_graph(args.graph))]
    count = args.count if args.count is not None else DEFAULT_COUNTS[suite]
    return [(f"random#{k}", random_connected_graph(rng, **kw)) for k in range(count)]


def _lemma1_checks(label: str, g: WeightedGraph) -> list[CheckReport]:
    n = g.vertex_count
    o = default_orientation(g)
    unit = g.unit()
    tree_sets = set(enumerate_spanning_trees(g, budget=max(DEFAULT_BUDGET, g.edge_count)))
    sign_ok = fact_ok = zero_ok = total = 0
    for subset in itertools.combinations(range(g.edge_count), n - 1):
        weight = Fraction(1)
        for e in subset:
            weight *= g.weights[e]
        d1 = reduced_incidence_det(g, o, subset, 1)
        is_tree = subset in tree_sets
        for i in range(1, n + 1):
            di = d1 if i == 1 else reduced_incidence_det(g, o, subset, i)
            ui = reduced_incidence_det(unit, o, subset, i)
            total += 1
            sign_ok += di == (-1) ** (i - 1) * d1
            fact_ok += di == weight * ui
            # a zero edge weight kills the weighted minor of a tree; fall back to the unweighted one
            zero_ok += ((di if weight else ui) == 0) == (not is_tree)
    return [
        CheckReport(f"lemma1[{label}] sign law", sign_ok, total, sign_ok == total),
        CheckReport(f"lemma1[{label}] weight factorization", fact_ok, total, fact_ok == total),
        CheckReport(f"lemma1[{label}] zero iff not a tree", zero_ok, total, zero_ok == total),
    ]


def _lemma2_check(label: str, g: WeightedGraph, budget: int) -> CheckReport:
    n = g.vertex_count
    values = {kappa_cofactor(g, i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    lhs = _q(next(iter(values))) if len(values) == 1 else "inconsistent:" + ",".join(sorted(map(_q, values)))
    rhs = kappa_enumerate(g, budget=budget)
    return CheckReport(f"lemma2[{label}] all cofactors = tree sum", lhs, _q(rhs), len(values) == 1 and lhs == _q(rhs))


def _specs(args, rng: random.Random):
    if args.spec:
        spec, point, p = _load_spec(args.spec)
        if point is None:
            raise UsageError("spec file has no anchor")
        anchor = p.anchor if p is not None else Anchor(spec, *point)
        while True:
            yield spec, anchor, (p.variable if p is not None else rng.choice("lm"))
    while True:
        spec, anchor = random_anchored_spec(rng)
        yield spec, anchor, rng.choice("lm")


def _corollary_checks(label: str, g: WeightedGraph) -> list[CheckReport]:
    out = []
    for name in PRESET_NAMES:
        target = g.unit() if preset(name).unit_weights_only else g
        rep = verify_corollary(name, target)
        out.append(CheckReport(f"{name}[{label}]", rep.lhs, rep.rhs, rep.equal))
    return out


def run_suite(suite: str, args) -> tuple[list[CheckReport], dict, list[str]]:
    rng = random.Random(args.seed)
    checks: list[CheckReport] = []
    results: dict[str, Any] = {}
    warnings: list[str] = []
    if suite == "lemma1":
        for label, g in _graphs(args, suite, rng, min_vertices=2, max_vertices=7, max_edges=11):
            checks.extend(_lemma1_checks(label, g))
    elif suite == "lemma2":
        for label, g in _graphs(args, suite, rng, max_vertices=7, max_edges=18):
            checks.append(_lemma2_check(label, g, args.budget))
    elif suite in ("theorem1", "theorem2"):
        verify = verify_theorem1 if suite == "theorem1" else verify_theorem2
        specs = _specs(args, rng)
        kw = {"max_vertices": 7 if suite == "theorem1" else 6, "max_edges": 18}
        for label, g in _graphs(args, suite, rng, **kw):
            spec, anchor, var = next(specs)
            checks.append(verify(spec, g, var, anchor, name=f"{suite}[{label}] d/d{'lambda' if var == 'l' else 'mu'}"))
    elif suite == "corollaries":
        for label, g in _graphs(args, suite, rng, max_vertices=6, max_edges=15):
            checks.extend(_corollary_checks(label, g))
        audit = bartholdi_anchor_audit()
        results["bartholdi_anchor"] = audit
        if not args.graph:
            probe = complete_graph(4)
        else:
            probe = load_graph(args.graph).unit()
        u_rep = verify_corollary("bartholdi", probe, "u")
        results["bartholdi_u_identity"] = u_rep.to_json()
        if not u_rep.equal:
            checks.append(u_rep)
        warnings.append(BARTHOLDI_WARNING)
    else:
        raise UsageError(f"unknown suite {suite!r}")
    return checks, results, warnings


SUITES = ("lemma1", "lemma2", "theorem1", "theorem2", "corollaries")


def cmd_verify(args) -> dict:
    inputs = {"suite": args.suite, "seed": args.seed, "count": args.count, "graph": args.graph, "spec": args.spec}
    suites = SUITES if args.suite == "all" else (args.suite,)
    checks, results, warnings = [], {}, []
    for s in suites:
        c, r, w = run_suite(s, args)
        checks.extend(c)
        results.update(r)
        warnings.extend(w)
        results[f"{s}_cases"] = str(len(c))
        results[f"{s}_failures"] = str(sum(not x.equal for x in c))
    return _report("verify", inputs, results, checks, warnings)


# ----------------------------------------------------------------------- gen


def _sizes(text: str) -> list[int]:
    try:
        return [int(x) for x in _split_list(text)]
    except ValueError:
        raise UsageError(f"bad size list {text!r}") from None


def _weights(text: str | None, n: int) -> list[Fraction]:
    if text is None:
        return [Fraction(1)] * n
    ws = [parse_rational(x) for x in _split_list(text)]
    if len(ws) != n:
        raise UsageError(f"expected {n} weights, got {len(ws)}")
    return ws


def cmd_gen(args) -> dict:
    budget = args.budget if args.budget is not None else DEFAULT_VERTEX_BUDGET
    if args.kind == "complete":
        n = int(args.param)
        if n > budget:
            raise UsageError(f"{n} vertices exceeds the vertex budget {budget}")
        w = _weights(args.w, 1)[0]
        g = complete_graph(n, w)
    elif args.kind == "hypercube":
        n = int(args.param)
        g = build_graph(HammingSpec((2,) * n, _weights(args.w, n)), budget)
    else:
        sizes = _sizes(args.param)
        g = build_graph(HammingSpec(tuple(sizes), _weights(args.w, len(sizes))), budget)
    inputs = {"kind": args.kind, "param": args.param, "w": args.w, "out": args.out}
    results: dict[str, Any] = _graph_summary(g)
    text = dumps_graph(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        results["graph"] = json.loads(text)
    return _report("gen", inputs, results)


# ------------------------------------------------------------------- hamming


def _hamming_spec(args) -> HammingSpec:
    ref = args.sizes
    if os.path.exists(ref):
        with open(ref, encoding="utf-8") as fh:
            spec = HammingSpec.loads(fh.read())
        if args.w is not None:
            spec = HammingSpec(spec.sizes, tuple(_weights(args.w, len(spec.sizes))))
        return spec
    sizes = _sizes(ref)
    return HammingSpec(tuple(sizes), tuple(_weights(args.w, len(sizes))))


def cmd_hamming(args) -> dict:
    spec = _hamming_spec(args)
    inputs = {**spec.to_json(), "what": args.what, "check": args.check}
    results: dict[str, Any] = {}
    checks: list[CheckReport] = []
    budget = args.budget if args.budget is not None else DEFAULT_VERTEX_BUDGET
    do_check = args.check and spec.order <= CHECK_LIMIT
    if args.check and not do_check:
        results["check_skipped"] = f"prod(m_i) = {spec.order} exceeds {CHECK_LIMIT}"
    g = build_graph(spec, budget) if do_check else None

    if args.what == "kappa":
        value = kappa_closed_form(spec)
        results["kappa"] = _q(value)
        if g is not None:
            checks.append(CheckReport("kappa closed form = cofactor", value, kappa_cofactor(g), value == kappa_cofactor(g)))
    elif args.what == "kappa-sigma":
        value = kappa_sigma_closed_form(spec)
        results["kappa_sigma"] = _q(value)
        if g is not None:
            ks = kappa_sigma_jet(g)[1]
            checks.append(CheckReport("kappa_sigma closed form = jet", value, ks, value == ks))
    elif args.what == "spectrum":
        spectrum = spectrum_closed_form(spec)
        results["spectrum"] = [{"eigenvalue": _q(k), "multiplicity": v} for k, v in spectrum.items()]
        if g is not None:
            quotient, exact = divide_out_spectrum(spec, berkowitz_charpoly(laplacian(g)))
            ok = exact and quotient == [1]
            checks.append(CheckReport("det(xI-L) factorization", "exact" if ok else "remainder", "exact", ok))
    else:
        if not spec.is_hypercube():
            raise UsageError("mst closed form needs every size equal to 2")
        n = len(spec.sizes)
        value = mst_closed_form(n, spec.weights)
        results["mst"] = _q(value)
        if g is not None:
            kr = kruskal_min_sigma(g)
            checks.append(CheckReport("mst closed form = kruskal", value, kr, value == kr))
    return _report("hamming", inputs, results, checks)


# ---------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wcomplexity", description=__doc__.splitlines()[0])
    parser.add_argument("--budget", type=int, default=None,
                        help=f"enumeration edge budget (default {DEFAULT_BUDGET}) / vertex budget (default {DEFAULT_VERTEX_BUDGET})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("kappa", help="weighted complexity")
    p.add_argument("graph")
    p.add_argument("--method", choices=("cofactor", "enumerate"), default="cofactor")
    p.add_argument("--index", type=int, nargs=2, metavar=("I", "J"))
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("kappa-sigma", help="sigma weighted complexity")
    p.add_argument("graph")
    p.add_argument("--method", choices=("jet", "enumerate"), default="jet")
    p.set_defaults(func=cmd_kappa_sigma)

    p = sub.add_parser("detfun", help="evaluate or differentiate the determinant function")
    p.add_argument("graph")
    p.add_argument("spec", help=f"preset ({', '.join(PRESET_NAMES)}) or spec JSON file")
    p.add_argument("action", choices=("eval", "partial", "mixed"))
    p.add_argument("params", nargs="+", help="LAMBDA MU for eval, a variable name otherwise")
    p.set_defaults(func=cmd_detfun)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--graph")
    p.add_argument("--spec")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a graph JSON file")
    p.add_argument("kind", choices=("complete", "hypercube", "hamming"))
    p.add_argument("param", help="n for complete/hypercube, comma-separated sizes for hamming")
    p.add_argument("--w", help="comma-separated rational weights")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hamming", help="closed forms for products of complete graphs")
    p.add_argument("sizes", help="comma-separated sizes or a HammingSpec JSON file")
    p.add_argument("what", choices=("kappa", "kappa-sigma", "spectrum", "mst"))
    p.add_argument("--w", help="comma-separated rational weights")
    p.add_argument("--check", action="store_true", help="cross-check against the general engine when prod(m_i) <= 16")
    p.set_defaults(func=cmd_hamming)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("kappa", "kappa-sigma", "verify") and args.budget is None:
        args.budget = DEFAULT_BUDGET
    try:
        report = args.func(args)
    except (UsageError, GraphFormatError, AnchorError, BudgetExceeded, DisconnectedGraphError,
            ValueError, IndexError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"wcomplexity {args.command}: error: {msg}", file=sys.stderr)
        return 1
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 2 if any(not c["equal"] for c in report["checks"]) else 0


if __name__ == "__main__":
    sys.exit(main())
