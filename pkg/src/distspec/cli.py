"""Command-line front end.

Graph inputs use a small family language:

  petersen              the Petersen graph
  path:N  star:N        path / star on N vertices
  cycle:N complete:N    cycle / complete graph on N vertices
  dstar:A,B             double star with A and B leaves
  t42:Q                 spider with Q legs of length two
  tfam:A1,A2,...        tree grown by P4 attachments (empty list gives P2)
  kpart:P1,P2,...       complete multipartite graph with the given part sizes
  g6:CODE               inline graph6 string

Where an input is optional, newline-separated graph6 strings are read from
standard input instead.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Any, Callable, Iterable, Sequence

from . import families as fam
from .canon import certificate
from .exact import eigen_multiplicity_exact
from .graph import Graph, GraphError, diameter, distance_matrix, girth, parse_graph6
from .numeric import GROUP_TOL, SNAP_TOL, distance_spectrum, inertia
from .schemas import SCHEMAS
from .search import KINDS, run_search
from . import theorems as th


def _ints(arg: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(x) for x in arg.split(",")] if arg.strip() else []
    except ValueError:
        raise GraphError(f"expected comma-separated integers, got {arg!r}") from None
    if count is not None and len(vals) != count:
        raise GraphError(f"expected {count} integer(s), got {arg!r}")
    return vals


_FAMILIES: dict[str, Callable[[str], Graph]] = {
    "path": lambda a: fam.path(*_ints(a, 1)),
    "star": lambda a: fam.star(*_ints(a, 1)),
    "cycle": lambda a: fam.cycle(*_ints(a, 1)),
    "complete": lambda a: fam.complete(*_ints(a, 1)),
    "dstar": lambda a: fam.double_star(*_ints(a, 2)),
    "t42": lambda a: fam.t42_spider(*_ints(a, 1)),
    "tfam": lambda a: fam.build_t_family(fam.TreeRecipe.parse(a)),
    "kpart": lambda a: fam.complete_multipartite(_ints(a)),
    "g6": parse_graph6,
}


def parse_input(text: str) -> Graph:
    """A graph from a family spec or a ``g6:`` string."""
    text = text.strip()
    if text == "petersen":
        return fam.petersen()
    name, sep, arg = text.partition(":")
    if not sep or name not in _FAMILIES:
        raise GraphError(f"unknown graph spec {text!r}; see --help for the family language")
    return _FAMILIES[name](arg)


def _inputs(items: Sequence[str], stdin: Iterable[str]) -> list[tuple[str, Graph]]:
    if items:
        return [(s, parse_input(s)) for s in items]
    return [(line.strip(), parse_graph6(line.strip())) for line in stdin if line.strip()]


# --- spectrum ----------------------------------------------------------------

def spectrum_report(label: str, g: Graph, group_tol: float, snap_tol: float) -> dict[str, Any]:
    spec = distance_spectrum(g, group_tol=group_tol, snap_tol=snap_tol)
    d = distance_matrix(g)
    exact = {str(k): eigen_multiplicity_exact(d, k) for k in sorted(spec.exact, reverse=True)}
    return {
        "input": label,
        "graph6": certificate(g),
        "n": g.n,
        "diameter": diameter(g),
        "girth": girth(g),
        "spectrum": spec.to_json(),
        "spectrum_text": str(spec),
        "inertia": list(inertia(spec)),
        "exact_integer_eigenvalues": exact,
    }


def cmd_spectrum(args, out) -> int:
    reports = [spectrum_report(lbl, g, args.group_tol, args.snap_tol)
               for lbl, g in _inputs(args.inputs, sys.stdin)]
    if args.json:
        json.dump(reports if len(reports) != 1 else reports[0], out, indent=2)
        out.write("\n")
    elif args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["input", "graph6", "value", "multiplicity", "exact"])
        for r in reports:
            for item in r["spectrum"]:
                w.writerow([r["input"], r["graph6"], repr(item["value"]), item["multiplicity"], int(item["exact"])])
    else:
        for r in reports:
            out.write(f"{r['input']}  ({r['graph6']})\n")
            out.write(f"  n={r['n']}  diameter={r['diameter']}  girth={r['girth'] if r['girth'] else 'inf'}\n")
            out.write(f"  spectrum: {r['spectrum_text']}\n")
            pos, zero, neg = r["inertia"]
            out.write(f"  inertia: +{pos} 0:{zero} -{neg}\n")
            if r["exact_integer_eigenvalues"]:
                conf = ", ".join(f"{k} (nullity {m})" for k, m in r["exact_integer_eigenvalues"].items())
                out.write(f"  exact integer eigenvalues: {conf}\n")
    return 0


# --- check -------------------------------------------------------------------

def _graph_claim(fn) -> Callable[[str, argparse.Namespace], th.Verdict]:
    return lambda s, a: fn(parse_input(s))


def _int_claim(fn) -> Callable[[str, argparse.Namespace], th.Verdict]:
    return lambda s, a: fn(*_ints(s, 1))


def _dstar_claim(s: str, a) -> th.Verdict:
    return th.check_double_star_quartic(*_ints(s, 2))


def _submatrix_eigs(s: str, a) -> th.Verdict:
    v1, v2 = th.remark3_second_eigenvalues()
    holds = round(v1, 4) == 0.0841 and round(v2, 4) == 0.3542
    return th.Verdict("f-submatrices", holds, {"f1": v1, "f2": v2})


def _path_secular(s: str, a) -> th.Verdict:
    (n,) = _ints(s, 1)
    got = th.path_secular_spectrum(n)
    ref = sorted(th.eig_symmetric(distance_matrix(fam.path(n))))
    err = max(abs(x - y) for x, y in zip(got, ref))
    return th.Verdict("path-secular", err <= a.tol, {"n": n, "max_abs_error": err})


CLAIMS: dict[str, tuple[str, Callable[[str, argparse.Namespace], th.Verdict]]] = {
    "graham-pollack": ("tree", _graph_claim(th.check_graham_pollack)),
    "merris": ("tree", lambda s, a: th.check_merris_interlacing(parse_input(s), a.tol)),
    "inertia": ("tree", _graph_claim(th.check_tree_inertia)),
    "smallest-bound": ("graph", lambda s, a: th.check_smallest_eig_bound(parse_input(s), a.tol)),
    "laplacian-distinct": ("graph", _graph_claim(th.check_laplacian_distinct_bound)),
    "collins": ("tree", _graph_claim(th.check_collins_bound)),
    "three-distinct-class": ("graph", lambda s, a: th.classify_three_distinct(parse_input(s), a.group_tol).to_verdict()),
    "path-minus-one": ("k", _int_claim(th.check_path_minus_one)),
    "path-secular": ("n", _path_secular),
    "dstar-quartic": ("s,t", _dstar_claim),
    "t42-cubic": ("q", lambda s, a: th.check_t42_cubic(*_ints(s, 1), a.tol)),
    "form-exclusions": ("q_max", _int_claim(th.check_form_exclusions)),
    "s22-p4": ("depth", _int_claim(th.s22_plus_p4_negative_check)),
    "f-submatrices": ("-", _submatrix_eigs),
}


def _graph_input_claim(kind: str) -> bool:
    return kind in ("tree", "graph")


def cmd_check(args, out) -> int:
    kind, fn = CLAIMS[args.claim]
    if args.inputs:
        items = list(args.inputs)
    elif kind == "-":
        items = [""]
    elif _graph_input_claim(kind):
        items = ["g6:" + line.strip() for line in sys.stdin if line.strip()]
    else:
        raise GraphError(f"claim {args.claim} needs an argument ({kind})")
    verdicts = []
    for item in items:
        v = fn(item, args).to_json()
        if item:
            v["input"] = item
        verdicts.append(v)
    json.dump(verdicts[0] if len(verdicts) == 1 else verdicts, out, indent=2, sort_keys=True)
    out.write("\n")
    return 0 if all(v["holds"] for v in verdicts) else 1


# --- search / family / schema --------------------------------------------

def cmd_search(args, out) -> int:
    corpus = None
    if args.corpus:
        corpus = sys.stdin if args.corpus == "-" else open(args.corpus)
    try:
        report = run_search(args.kind, args.n_max, tol=args.group_tol, workers=args.workers,
                            checkpoint=args.checkpoint, corpus=corpus,
                            inject_petersen=not args.no_petersen)
    finally:
        if corpus is not None and corpus is not sys.stdin:
            corpus.close()
    if args.json:
        out.write(report.dumps(meta=not args.no_meta) + "\n")
    elif args.csv:
        out.write(report.to_csv())
    else:
        out.write(f"{report.kind}: scanned {report.scanned} graphs, {len(report.hits)} hits\n")
        for h in report.hits:
            extra = " ".join(f"{k}={h[k]}" for k in ("category", "recipe", "count", "star") if k in h)
            out.write(f"  n={h['n']:<3} {h['graph6']:<12} {extra}\n")
        for k, v in report.summary.items():
            out.write(f"  {k}: {v}\n")
        if not args.no_meta:
            out.write(f"  elapsed: {report.elapsed:.2f}s\n")
    return 0


def cmd_family(args, out) -> int:
    out.write(certificate(parse_input(args.spec)) + "\n")
    return 0


def cmd_schema(args, out) -> int:
    json.dump(SCHEMAS[args.name], out, indent=2)
    out.write("\n")
    return 0


def _positive(text: str) -> float:
    val = float(text)
    if not val > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return val


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="distspec", description="Distance spectra of graphs.",
                                epilog=__doc__.split("\n", 2)[2], formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive, default=1e-8, help="slack for weak inequalities (default 1e-8)")
    common.add_argument("--group-tol", type=_positive, default=GROUP_TOL, help="eigenvalue grouping tolerance")
    common.add_argument("--snap-tol", type=_positive, default=SNAP_TOL, help="integer snapping tolerance")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable output")
    fmt.add_argument("--csv", action="store_true", help="CSV spectra")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", parents=[common], help="distance spectrum and basic invariants")
    s.add_argument("inputs", nargs="*", help="graph specs; graph6 lines on stdin if omitted")
    s.set_defaults(func=cmd_spectrum)

    c = sub.add_parser("check", parents=[common], help="evaluate one claim; exit 0 iff it holds")
    c.add_argument("claim", choices=sorted(CLAIMS))
    c.add_argument("inputs", nargs="*", help="graph spec or integer argument; graph6 lines on stdin if omitted")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("search", parents=[common], help="exhaustive search")
    r.add_argument("kind", choices=KINDS)
    r.add_argument("--n-max", type=int, required=True)
    r.add_argument("--workers", type=int, default=1)
    r.add_argument("--checkpoint", help="state file for resumable scans")
    r.add_argument("--corpus", help="scan graph6 lines from this file ('-' for stdin) instead of enumerating")
    r.add_argument("--no-meta", action="store_true", help="omit timing so output is byte-reproducible")
    r.add_argument("--no-petersen", action="store_true", help="do not inject the Petersen graph (c3c4free-minus3)")
    r.set_defaults(func=cmd_search)

    f = sub.add_parser("family", help="canonical graph6 of a family member")
    f.add_argument("spec")
    f.set_defaults(func=cmd_family)

    sc = sub.add_parser("schema", help="print a JSON schema")
    sc.add_argument("name", choices=sorted(SCHEMAS))
    sc.set_defaults(func=cmd_schema)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args, out)
    except (GraphError, ArithmeticError, OSError) as exc:
        print(f"distspec: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
