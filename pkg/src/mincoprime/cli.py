"""Command-line front end: ``mincoprime <subcommand> ...`` (or ``python -m mincoprime``).

Exit status: 0 on success, 1 when a labeling fails verification or a value
cannot be certified, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from pathlib import Path
from typing import Optional

from . import graphs
from .constructions import (
    ConstructionError,
    PreconditionError,
    complete_bipartite_labeling,
    corona_labeling,
    cycle_join_labeling,
    explain_formula,
    in_exceptional_window,
    path_join_labeling,
    special_join_values,
)
from .experiments import (
    ExperimentReport,
    Row,
    conjecture1_table,
    corona_table,
    path_join_sweep,
    random_pr_experiment,
)
from .family import Atom, FamilyExpr, FamilyParseError, build, parse_family
from .graphs import Graph, GraphError
from .labeling import (
    CertificationError,
    Labeling,
    LabelingError,
    PrValue,
    check_consistency,
    lower_bound_independence,
    lower_bound_prime_multiples,
    verify_coprime_labeling,
)
from .numtheory import nth_prime, verify_lemma11_range
from .solver import (
    SearchConfig,
    clique_number,
    default_threads,
    independence_number,
    min_coprime_number_exact,
)


class UsageError(Exception):
    pass


class Failure(Exception):
    """Verification or certification failed (exit status 1)."""


# --- graph input --------------------------------------------------------------


def load_graph(source: str) -> tuple[Graph, Optional[FamilyExpr]]:
    """A family expression, or the path of an edge-list file."""
    path = Path(source)
    if path.is_file():
        try:
            return graphs.parse_edge_list(path.read_text()), None
        except GraphError as exc:
            raise UsageError(f"{source}: {exc}") from exc
    try:
        expr = parse_family(source)
        return build(expr), expr
    except (FamilyParseError, GraphError) as exc:
        raise UsageError(f"{source!r}: {exc}") from exc


def _rotate(val: PrValue, k: int) -> PrValue:
    """Move the first k labels to the end (the factors were given in the other order)."""
    labels = val.witness.labels
    return replace(val, witness=Labeling(labels[k:] + labels[:k]))


def construct(expr: Optional[FamilyExpr]) -> Optional[PrValue]:
    """Dispatch to the construction for the family, or None if there is none."""
    try:
        if isinstance(expr, Atom) and expr.kind == "Kbip":
            a, b = expr.params
            val = complete_bipartite_labeling(min(a, b), max(a, b))
            return _rotate(val, b) if a > b else val
        if expr is None or isinstance(expr, Atom):
            return None
        left, right = expr.left, expr.right
        if not (isinstance(left, Atom) and isinstance(right, Atom)):
            return None
        if expr.op == "corona" and left.kind == "K" and right.kind == "E":
            return corona_labeling(left.params[0], right.params[0])
        if expr.op != "join" or {left.kind, right.kind} - {"P", "C"}:
            return None
        a, b = left.params[0], right.params[0]
        if left.kind == right.kind == "P":
            if in_exceptional_window(a, b):
                return special_join_values(a, b)
            return path_join_labeling(a, b)
        if a >= b:
            return cycle_join_labeling(a, b, left.kind + right.kind)
        return _rotate(cycle_join_labeling(b, a, right.kind + left.kind), b)
    except PreconditionError:
        return None


def search_config(args) -> SearchConfig:
    return SearchConfig(
        max_k=getattr(args, "max_k", None),
        node_limit=getattr(args, "node_limit", None),
        time_limit=getattr(args, "time_limit", None),
        parallel_width=getattr(args, "threads", None) or default_threads(),
    )


def exact_value(g: Graph, cfg: SearchConfig) -> tuple[Optional[PrValue], dict]:
    res = min_coprime_number_exact(g, cfg)
    info = {"status": res.status, "nodes": res.nodes, "start_k": res.start_k}
    if not res.certified:
        info["lower"] = res.lower
    return res.value, info


# --- output -------------------------------------------------------------------


def emit(args, payload: dict, text: str, rows: Optional[list[Row]] = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
    elif args.format == "csv":
        rep = ExperimentReport(args.command, {}, rows or [])
        sys.stdout.write(rep.to_csv(args.timing))
    else:
        print(text)


def emit_report(args, rep: ExperimentReport) -> None:
    if args.format == "json":
        print(rep.to_json(args.timing))
    elif args.format == "csv":
        sys.stdout.write(rep.to_csv(args.timing))
    else:
        print(rep.to_text())


def _value_row(source: str, g: Graph, val: Optional[PrValue], seconds: float) -> Row:
    return Row(
        source, None, g.n, val.value if val else None, val.provenance if val else "none",
        bool(val and val.kind == "exact"), seconds,
    )


# --- subcommands --------------------------------------------------------------


def cmd_compute(args) -> int:
    g, expr = load_graph(args.graph)
    t = time.perf_counter()
    method = args.method
    val: Optional[PrValue] = None
    info: dict = {}
    window = (
        expr is not None
        and not isinstance(expr, Atom)
        and expr.op == "join"
        and all(isinstance(s, Atom) and s.kind == "P" for s in (expr.left, expr.right))
        and in_exceptional_window(expr.left.params[0], expr.right.params[0])
    )
    if expr is not None and (method == "formula" or (method == "auto" and not window)):
        val, reason = explain_formula(expr)
        info["formula"] = reason
    if val is None and method in ("construct", "auto") and not (method == "auto" and window):
        val = construct(expr)
    if val is None and method in ("exact", "auto"):
        val, search = exact_value(g, search_config(args))
        info["search"] = search
    seconds = time.perf_counter() - t
    if val is None:
        msg = info.get("formula") or "no value could be certified"
        emit(args, {"graph": args.graph, "value": None, "info": info}, f"{args.graph}: {msg}")
        return 1
    payload = {"graph": args.graph, **val.to_dict(), "certified": val.kind == "exact", "info": info}
    if args.timing:
        payload["seconds"] = round(seconds, 6)
    text = f"pr({args.graph}) {'=' if val.kind == 'exact' else '<='} {val.value}  [{val.provenance}]"
    if val.note:
        text += f"  {val.note}"
    emit(args, payload, text, [_value_row(args.graph, g, val, seconds)])
    return 0


def cmd_exact(args) -> int:
    g, _ = load_graph(args.graph)
    t = time.perf_counter()
    val, info = exact_value(g, search_config(args))
    seconds = time.perf_counter() - t
    payload = {"graph": args.graph, "certified": info["status"] == "exact", "search": info}
    if val is not None:
        payload.update(val.to_dict())
    if args.timing:
        payload["seconds"] = round(seconds, 6)
    if val is None:
        text = f"pr({args.graph}): inconclusive, every k < {info['lower']} ruled out"
    else:
        text = f"pr({args.graph}) = {val.value}  [exact-search, {info['nodes']} nodes]"
    emit(args, payload, text, [_value_row(args.graph, g, val, seconds)])
    return 0 if val is not None else 1


def cmd_verify(args) -> int:
    try:
        doc = json.loads(Path(args.labeling).read_text())
        labels = [int(x) for x in doc["labels"]]
        if doc.get("graph", "edges") == "edges":
            n = int(doc.get("n", len(labels)))
            g = graphs.Graph.from_edges(n, [tuple(e) for e in doc["edges"]])
        else:
            g = build(parse_family(doc["graph"]))
    except (OSError, ValueError, KeyError, TypeError, FamilyParseError, GraphError) as exc:
        raise UsageError(f"cannot read labeling {args.labeling}: {exc}") from exc
    try:
        verdict = verify_coprime_labeling(g, labels)
    except LabelingError as exc:
        emit(args, {"ok": False, "violations": [str(exc)]}, f"INVALID: {exc}")
        return 1
    problems = verdict.describe()
    top = max(labels, default=0)
    if "max" in doc and int(doc["max"]) != top:
        problems.append(f"declared max {doc['max']} but largest label is {top}")
    ok = not problems
    text = "\n".join([f"{'valid' if ok else 'INVALID'} coprime labeling, max label {top}"] + problems)
    emit(args, {"ok": ok, "max": top, "violations": problems}, text)
    return 0 if ok else 1


def cmd_bounds(args) -> int:
    g, expr = load_graph(args.graph)
    alpha, omega = independence_number(g), clique_number(g)
    ind = lower_bound_independence(g, alpha)
    pm = lower_bound_prime_multiples(g, alpha)
    upper = nth_prime(g.n - 1) if g.n > 1 else 1
    values = [ind] + ([pm] if pm else [])
    formula = None
    if expr is not None:
        formula, _ = explain_formula(expr)
        if formula is not None:
            values.append(formula)
    try:
        check_consistency(values)
    except CertificationError as exc:
        raise Failure(str(exc)) from exc
    payload = {
        "graph": args.graph,
        "n": g.n,
        "alpha": alpha,
        "omega": omega,
        "independence_bound": ind.value,
        "prime_multiple_bound": pm.value if pm else None,
        "upper_bound": upper,
        "formula": formula.value if formula else None,
    }
    lines = [f"{k}: {v}" for k, v in payload.items()]
    emit(args, payload, "\n".join(lines))
    return 0


def cmd_table(args) -> int:
    if args.which == "corona":
        rep = corona_table(args.n_max or 40, args.m_max or 8)
    elif args.which == "conjecture1":
        rep = conjecture1_table(args.m_max or 20, args.n_max or 200)
    else:
        n_range = range(args.n_min, (args.n_max or 7) + 1)
        m_range = range(args.m_min, (args.m_max or 12) + 1)
        rep = path_join_sweep(n_range, m_range, args.exact_vertices, search_config(args))
    emit_report(args, rep)
    return 0


def cmd_lemma11(args) -> int:
    failures = verify_lemma11_range(args.x_max)
    payload = {"x_max": args.x_max, "failures": failures}
    text = f"x <= {args.x_max}: {len(failures)} failures" + (f" {failures[:20]}" if failures else "")
    emit(args, payload, text)
    return 0 if not failures else 1


def cmd_random(args) -> int:
    rep = random_pr_experiment(
        args.n, args.p, args.trials, args.seed, search_config(args), args.exact_cap
    )
    emit_report(args, rep)
    return 0


# --- parser -------------------------------------------------------------------


def _positive(kind):
    def conv(text: str):
        v = kind(text)
        if v <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return v

    return conv


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--timing", action="store_true", help="include wall-clock times in output")

    limits = argparse.ArgumentParser(add_help=False)
    limits.add_argument("--max-k", type=_positive(int))
    limits.add_argument("--node-limit", type=_positive(int))
    limits.add_argument("--time-limit", type=_positive(float))
    limits.add_argument("--threads", type=_positive(int), help="default: $MINCOPRIME_THREADS or 1")

    p = argparse.ArgumentParser(prog="mincoprime", description="Minimum coprime labelings of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common, limits], help="pr of a family or edge-list file")
    c.add_argument("graph")
    c.add_argument("--method", choices=("formula", "construct", "exact", "auto"), default="auto")
    c.set_defaults(func=cmd_compute)

    e = sub.add_parser("exact", parents=[common, limits], help="exact search with limits")
    e.add_argument("graph")
    e.set_defaults(func=cmd_exact)

    v = sub.add_parser("verify", parents=[common], help="check a labeling JSON file")
    v.add_argument("labeling")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", parents=[common], help="lower and upper bounds")
    b.add_argument("graph")
    b.set_defaults(func=cmd_bounds)

    t = sub.add_parser("table", parents=[common, limits], help="corona, pathjoin or conjecture1 tables")
    t.add_argument("which", choices=("corona", "pathjoin", "conjecture1"))
    t.add_argument("--n-max", type=_positive(int))
    t.add_argument("--m-max", type=_positive(int))
    t.add_argument("--n-min", type=_positive(int), default=2)
    t.add_argument("--m-min", type=_positive(int), default=2)
    t.add_argument("--exact-vertices", type=int, default=17, help="pathjoin: solve joins up to this size")
    t.set_defaults(func=cmd_table)

    lm = sub.add_parser("lemma11", parents=[common], help="check the mod-11 prime witness up to x")
    lm.add_argument("--x-max", type=_positive(int), default=1331)
    lm.set_defaults(func=cmd_lemma11)

    r = sub.add_parser("random", parents=[common, limits], help="seeded G(n, p) study")
    r.add_argument("--n", type=_positive(int), required=True)
    r.add_argument("--p", type=float, required=True)
    r.add_argument("--trials", type=_positive(int), default=20)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--exact-cap", type=int, default=14)
    r.set_defaults(func=cmd_random)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"mincoprime {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError) as exc:
        print(f"mincoprime {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (Failure, CertificationError, ConstructionError) as exc:
        print(f"mincoprime {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
