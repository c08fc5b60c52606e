"""Canonical labeling and isomorphism for small graphs.

Individualization-refinement search: equitable colour refinement, then
branching on the first non-singleton cell. Automorphisms discovered at
leaves prune sibling branches that lie in one orbit of the pointwise
stabilizer of the current prefix.
"""

from __future__ import annotations

from collections import defaultdict

from .graph import Graph, encode_graph6


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        index = {}
        for i, c in enumerate(cells):
            for v in c:
                index[v] = i
        new: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
            for v in c:
                groups[tuple(sorted(index[w] for w in g.adj[v]))].append(v)
            for key in sorted(groups):
                new.append(groups[key])
        if len(new) == len(cells):
            return new
        cells = new


def _orbit_rep(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def canonical_labeling(g: Graph) -> list[int]:
    """``lab[v]`` is the canonical label of vertex ``v``."""
    n = g.n
    edges = list(g.edges())
    gens: list[list[int]] = []
    seen: dict[tuple, list[int]] = {}
    best: list = [None, None]

    def leaf(cells: list[list[int]], prefix: list[int]) -> int | None:
        lab = [0] * n
        for i, c in enumerate(cells):
            lab[c[0]] = i
        cert = tuple(sorted((min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in edges))
        hit = seen.get(cert)
        if hit is None:
            seen[cert] = (lab, prefix)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, lab
            return None
        other, other_prefix = hit
        inv = [0] * n
        for v, label in enumerate(other):
            inv[label] = v
        perm = [inv[lab[v]] for v in range(n)]
        if perm != list(range(n)):
            gens.append(perm)
        # The subtree below the divergence point maps onto an explored one.
        common = 0
        while common < min(len(prefix), len(other_prefix)) and prefix[common] == other_prefix[common]:
            common += 1
        return common

    def search(cells: list[list[int]], prefix: list[int]) -> int | None:
        ti = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if ti is None:
            return leaf(cells, prefix)
        tried: list[int] = []
        for v in sorted(cells[ti]):
            if tried:
                parent = list(range(n))
                for perm in gens:
                    if all(perm[x] == x for x in prefix):
                        for x in range(n):
                            a, b = _orbit_rep(parent, x), _orbit_rep(parent, perm[x])
                            if a != b:
                                parent[a] = b
                rv = _orbit_rep(parent, v)
                if any(_orbit_rep(parent, u) == rv for u in tried):
                    continue
            tried.append(v)
            rest = [w for w in cells[ti] if w != v]
            jump = search(_refine(g, cells[:ti] + [[v], rest] + cells[ti + 1:]), prefix + [v])
            if jump is not None and jump < len(prefix):
                return jump
        return None

    search(_refine(g, [list(range(n))]), [])
    return best[1]


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def certificate(g: Graph) -> str:
    """graph6 string of the canonical form; equal iff isomorphic."""
    return encode_graph6(canonical_form(g))


def isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A vertex map ``phi`` with ``g.has_edge(u, v) <=> h.has_edge(phi[u], phi[v])``."""
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    lg, lh = canonical_labeling(g), canonical_labeling(h)
    if g.relabel(lg) != h.relabel(lh):
        return None
    inv_h = [0] * h.n
    for v, label in enumerate(lh):
        inv_h[label] = v
    return [inv_h[lg[v]] for v in range(g.n)]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return isomorphism(g, h) is not None
