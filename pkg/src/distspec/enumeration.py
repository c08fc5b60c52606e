"""Exhaustive generation of unlabeled free trees and connected graphs."""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Iterator

from .canon import certificate
from .graph import Graph, GraphError, is_connected, parse_graph6

TREE_MAX_N = 18
GRAPH_MAX_N = 7


def _bound(default: int) -> int:
    env = os.environ.get("DISTSPEC_MAX_N")
    return int(env) if env else default


def tree_bound() -> int:
    return _bound(TREE_MAX_N)


def graph_bound() -> int:
    return _bound(GRAPH_MAX_N)


# --- free trees: level sequences rooted at a center ------------------------

def _split(layout: list[int]) -> tuple[list[int], list[int]]:
    # left: first subtree of the root (levels shifted up); rest: root + the others
    second = next((i for i in range(2, len(layout)) if layout[i] == 1), len(layout))
    left = [x - 1 for x in layout[1:second]]
    rest = [0] + layout[second:]
    return left, rest


def _next_rooted(layout: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    out = list(layout)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _next_free(candidate: list[int]) -> list[int] | None:
    left, rest = _split(candidate)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and lh == rh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return candidate
    p = len(left)
    nxt = _next_rooted(candidate, p)
    if nxt is not None and candidate[p] > 2:
        new_left, _ = _split(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def level_sequence_to_graph(layout: list[int]) -> Graph:
    stack: list[int] = []
    edges = []
    for v, depth in enumerate(layout):
        del stack[depth:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Graph.from_edges(len(layout), edges)


def free_tree_level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences, one per unlabeled tree on ``n`` vertices."""
    if n == 1:
        yield [0]
        return
    if n == 2:
        yield [0, 1]
        return
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        if layout is not None:
            yield layout
            layout = _next_rooted(layout)


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """Each unlabeled tree on ``n`` vertices exactly once."""
    if not 1 <= n <= tree_bound():
        raise GraphError(f"tree enumeration supports 1 <= n <= {tree_bound()} (set DISTSPEC_MAX_N to raise)")
    for layout in free_tree_level_sequences(n):
        yield level_sequence_to_graph(layout)


# --- connected graphs: vertex augmentation + canonical dedup ---------------

@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[str, ...]:
    """Canonical graph6 strings of all graphs on ``n`` vertices."""
    if n == 1:
        return (certificate(Graph(1, ((),))),)
    out = set()
    for code in _all_graphs(n - 1):
        g = parse_graph6(code)
        base = list(g.edges())
        for mask in range(1 << (n - 1)):
            nbrs = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            out.add(certificate(Graph.from_edges(n, base + nbrs)))
    return tuple(sorted(out))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Each unlabeled connected graph on ``n`` vertices exactly once, in canonical form."""
    if not 1 <= n <= graph_bound():
        raise GraphError(f"graph enumeration supports 1 <= n <= {graph_bound()} (set DISTSPEC_MAX_N to raise)")
    for code in _all_graphs(n):
        g = parse_graph6(code)
        if is_connected(g):
            yield g
