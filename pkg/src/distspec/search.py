"""Exhaustive searches over enumerated trees and small graphs.

Every search streams graph6 strings through a per-kind scanner. Work is cut
into chunks of ``CHECKPOINT_EVERY`` graphs; chunks may run in a process pool,
and results are merged in chunk order so the report does not depend on the
worker count. With a checkpoint path, the state after each chunk is written
to disk and a rerun with the same parameters resumes from it.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Any, Callable, Iterable, Iterator

from .canon import certificate, isomorphism
from .exact import det_bareiss, eigen_multiplicity_exact, shifted
from .families import TreeRecipe, build_t_family, double_star, petersen
from .graph import (Graph, GraphError, distance_matrix, encode_graph6, is_c3c4_free, is_tree,
                    parse_graph6)
from .numeric import GROUP_TOL, count_distinct, distance_spectrum, eig_symmetric, group_spectrum
from .enumeration import enumerate_connected_graphs, enumerate_free_trees, graph_bound, tree_bound

CHECKPOINT_EVERY = 10_000
KINDS = ("three-distinct-trees", "minus-one-trees", "c3c4free-minus3", "interval-count")


@dataclass
class SearchReport:
    kind: str
    parameters: dict[str, Any]
    hits: list[dict[str, Any]] = field(default_factory=list)
    scanned: int = 0
    elapsed: float = 0.0
    summary: dict[str, Any] = field(default_factory=dict)

    def to_json(self, meta: bool = True) -> dict[str, Any]:
        out = {"kind": self.kind, "parameters": self.parameters, "scanned": self.scanned,
               "hits": self.hits, "summary": self.summary}
        if meta:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def dumps(self, meta: bool = True) -> str:
        return json.dumps(self.to_json(meta), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph6", "n", "value", "multiplicity", "exact"])
        for h in self.hits:
            for item in h.get("spectrum", ()):
                w.writerow([h["graph6"], h["n"], repr(item["value"]), item["multiplicity"], int(item["exact"])])
        return buf.getvalue()

    def graph6_set(self) -> set[str]:
        return {h["graph6"] for h in self.hits}


# --- tree helpers ----------------------------------------------------------

def _remove(g: Graph, drop: set[int]) -> tuple[Graph, list[int]]:
    keep = [v for v in range(g.n) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(keep), edges), keep


def _pendant_p4s(t: Graph) -> Iterator[tuple[int, list[int]]]:
    """(attachment vertex, [w1, w2, w3, w4]) for every removable pendant P4."""
    for w4 in range(t.n):
        if t.degree(w4) != 1:
            continue
        chain = [w4]
        prev, cur = w4, t.adj[w4][0]
        ok = True
        for _ in range(3):
            if t.degree(cur) != 2:
                ok = False
                break
            chain.append(cur)
            prev, cur = cur, next(x for x in t.adj[cur] if x != prev)
        if ok:
            yield cur, chain[::-1]


def recognize_t_family(t: Graph, _memo: dict | None = None) -> TreeRecipe | None:
    """A recipe whose built tree is isomorphic to ``t``, or None."""
    if not is_tree(t):
        raise GraphError("recognize_t_family needs a tree")
    memo: dict[str, TreeRecipe | None] = {} if _memo is None else _memo
    if t.n == 2:
        return TreeRecipe(())
    if t.n < 6 or (t.n - 2) % 4:
        return None
    key = certificate(t)
    if key in memo:
        return memo[key]
    memo[key] = None
    for a, chain in _pendant_p4s(t):
        rest, keep = _remove(t, set(chain))
        sub = recognize_t_family(rest, memo)
        if sub is None:
            continue
        phi = isomorphism(rest, build_t_family(sub))
        recipe = TreeRecipe(sub.steps + (phi[keep.index(a)],))
        if isomorphism(t, build_t_family(recipe)) is None:
            raise GraphError(f"recipe {recipe} does not rebuild the input tree")
        memo[key] = recipe
        return recipe
    return None


def count_eigs_in_interval(t: Graph) -> int:
    """Distance eigenvalues in [-1, 0), with multiplicity; -1 decided exactly."""
    if not is_tree(t):
        raise GraphError("count_eigs_in_interval needs a tree")
    d = distance_matrix(t)
    vals = eig_symmetric(d)
    mult = eigen_multiplicity_exact(d, -1) if det_bareiss(shifted(d, -1)) == 0 else 0
    # the `mult` numeric values nearest -1 are the exact ones; classify the rest numerically
    order = sorted(range(len(vals)), key=lambda i: abs(vals[i] + 1))
    exact_idx = set(order[:mult])
    rest = [v for i, v in enumerate(vals) if i not in exact_idx]
    return mult + sum(1 for v in rest if -1 < v < 0)


# --- per-kind scanners -----------------------------------------------------

def _spectrum_record(g: Graph, code: str, **extra) -> dict[str, Any]:
    spec = distance_spectrum(g)
    return {"graph6": code, "n": g.n, "spectrum": spec.to_json(), **extra}


def _scan_three_distinct(code: str, params: dict) -> dict | None:
    g = parse_graph6(code)
    if g.n < 2:
        return None
    quick = group_spectrum(eig_symmetric(distance_matrix(g)), params["tol"])
    if count_distinct(quick) != 3:
        return None
    is_star = max(g.degrees()) == g.n - 1
    return _spectrum_record(g, code, star=is_star)


_S22 = certificate(double_star(2, 2))


def _scan_minus_one(code: str, params: dict) -> dict | None:
    g = parse_graph6(code)
    d = distance_matrix(g)
    if det_bareiss(shifted(d, -1)) != 0:
        return None
    mult = eigen_multiplicity_exact(d, -1)
    recipe = recognize_t_family(g)
    if recipe is not None:
        category, extra = "t-family", {"recipe": list(recipe.steps)}
    elif certificate(g) == _S22:
        category, extra = "s22", {}
    else:
        category, extra = "others", {}
    return _spectrum_record(g, code, multiplicity=mult, category=category, **extra)


def _scan_c3c4free(code: str, params: dict) -> dict | None:
    g = parse_graph6(code)
    if g.n < 2 or not is_c3c4_free(g):
        return None
    quick = group_spectrum(eig_symmetric(distance_matrix(g)), params["tol"])
    if count_distinct(quick) != 3:
        return None
    spec = distance_spectrum(g, group_tol=params["tol"])
    lam3 = spec.items[-1][0]
    if lam3 != -3 or -3 not in spec.exact:
        return None
    return _spectrum_record(g, code)


def _scan_interval(code: str, params: dict) -> dict | None:
    g = parse_graph6(code)
    count = count_eigs_in_interval(g)
    return {"graph6": code, "n": g.n, "count": count}


_SCANNERS: dict[str, Callable[[str, dict], dict | None]] = {
    "three-distinct-trees": _scan_three_distinct,
    "minus-one-trees": _scan_minus_one,
    "c3c4free-minus3": _scan_c3c4free,
    "interval-count": _scan_interval,
}


def _scan_chunk(kind: str, params: dict, codes: list[str]) -> list[dict]:
    scan = _SCANNERS[kind]
    return [r for r in (scan(c, params) for c in codes) if r is not None]


# --- driver ----------------------------------------------------------------

def _source(kind: str, n_max: int, inject: bool) -> Iterator[str]:
    if kind == "c3c4free-minus3":
        if n_max > graph_bound():
            raise GraphError(f"n_max {n_max} exceeds the connected-graph bound {graph_bound()}")
        for n in range(1, n_max + 1):
            for g in enumerate_connected_graphs(n):
                yield encode_graph6(g)
        if inject:
            yield certificate(petersen())
        return
    if n_max > tree_bound():
        raise GraphError(f"n_max {n_max} exceeds the tree bound {tree_bound()}")
    for n in range(1, n_max + 1):
        for g in enumerate_free_trees(n):
            yield encode_graph6(g)


def _chunks(codes: Iterable[str], size: int) -> Iterator[list[str]]:
    it = iter(codes)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def _finish(report: SearchReport, raw: list[dict]) -> None:
    if report.kind == "interval-count":
        worst: dict[int, int] = {}
        ratio = 0.0
        for r in raw:
            n, c = r["n"], r["count"]
            worst[n] = max(worst.get(n, 0), c)
            if n >= 2:
                ratio = max(ratio, c / (n // 2))
        report.summary = {"max_count_by_n": {str(k): worst[k] for k in sorted(worst)}, "max_ratio": ratio}
        report.hits = sorted((r for r in raw if r["count"] > r["n"] // 2), key=lambda r: (r["n"], r["graph6"]))
        return
    report.hits = sorted(raw, key=lambda r: (r["n"], r["graph6"]))
    if report.kind == "minus-one-trees":
        cats: dict[str, int] = {"t-family": 0, "s22": 0, "others": 0}
        for h in report.hits:
            cats[h["category"]] += 1
        report.summary = {"categories": cats}
    elif report.kind == "three-distinct-trees":
        report.summary = {"all_stars": all(h["star"] for h in report.hits)}


def _load_checkpoint(path: str, kind: str, params: dict) -> tuple[int, list[dict]]:
    if not path or not os.path.exists(path):
        return 0, []
    with open(path) as fh:
        state = json.load(fh)
    if state.get("kind") != kind or state.get("parameters") != params:
        raise GraphError(f"checkpoint {path} belongs to a different search")
    return state["scanned"], state["raw"]


def _save_checkpoint(path: str, kind: str, params: dict, scanned: int, raw: list[dict]) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump({"kind": kind, "parameters": params, "scanned": scanned, "raw": raw}, fh)
    os.replace(tmp, path)


def run_search(kind: str, n_max: int, tol: float = GROUP_TOL, workers: int = 1,
               checkpoint: str | None = None, corpus: Iterable[str] | None = None,
               inject_petersen: bool = True) -> SearchReport:
    """Run one search kind. ``corpus`` replaces enumeration with given graph6 strings."""
    if kind not in _SCANNERS:
        raise GraphError(f"unknown search kind {kind!r}; expected one of {', '.join(KINDS)}")
    if not tol > 0:
        raise GraphError("tolerance must be positive")
    start = time.perf_counter()
    params: dict[str, Any] = {"n_max": n_max, "tol": tol}
    if kind == "c3c4free-minus3":
        params["inject_petersen"] = inject_petersen
    if corpus is not None:
        codes: Iterable[str] = [c.strip() for c in corpus if c.strip()]
        params["corpus"] = True
        if kind != "c3c4free-minus3":
            for c in codes:
                if not is_tree(parse_graph6(c)):
                    raise GraphError(f"corpus entry {c!r} is not a tree")
    else:
        codes = _source(kind, n_max, inject_petersen)
    done, raw = _load_checkpoint(checkpoint or "", kind, params)
    codes = islice(codes, done, None)
    scanned = done
    chunks = _chunks(codes, CHECKPOINT_EVERY)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pending = []
            for chunk in chunks:
                pending.append((len(chunk), pool.submit(_scan_chunk, kind, params, chunk)))
            for size, fut in pending:
                raw += fut.result()
                scanned += size
                if checkpoint:
                    _save_checkpoint(checkpoint, kind, params, scanned, raw)
    else:
        for chunk in chunks:
            raw += _scan_chunk(kind, params, chunk)
            scanned += len(chunk)
            if checkpoint:
                _save_checkpoint(checkpoint, kind, params, scanned, raw)
    report = SearchReport(kind, params, scanned=scanned)
    _finish(report, raw)
    report.elapsed = time.perf_counter() - start
    return report


def search_three_distinct_trees(n_max: int, tol: float = GROUP_TOL, **kw) -> SearchReport:
    return run_search("three-distinct-trees", n_max, tol, **kw)


def search_trees_with_minus_one(n_max: int, **kw) -> SearchReport:
    return run_search("minus-one-trees", n_max, **kw)


def search_c3c4free_minus3(n_max: int, tol: float = GROUP_TOL, inject_petersen: bool = True, **kw) -> SearchReport:
    return run_search("c3c4free-minus3", n_max, tol, inject_petersen=inject_petersen, **kw)


def search_interval_count(n_max: int, **kw) -> SearchReport:
    return run_search("interval-count", n_max, **kw)
