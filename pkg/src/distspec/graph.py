"""Simple undirected graphs, graph6 I/O and metric structure.

Vertices are dense 0-based integer labels. All matrices returned here are
read-only ``numpy.int64`` arrays; exact routines convert them to Python ints.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction or a violated precondition."""


class DisconnectedGraphError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: vertices {u} and {v} lie in different components")
        self.u = u
        self.v = v


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphError(f"label {v} out of range for n={self.n}")
                if v == u:
                    raise GraphError(f"self-loop at vertex {u}")
                if u not in self.adj[v]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in sets))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        a.flags.writeable = False
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


# --- graph6 -----------------------------------------------------------------

def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_size(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(">>graph6<<"):
        base = 10
        s = s[10:]
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the printable graph6 range", base + i)
    if not s:
        raise Graph6Error("empty graph6 string", base)

    def word(start: int, count: int) -> int:
        if len(s) < start + count:
            raise Graph6Error("truncated size header", base + len(s))
        val = 0
        for ch in s[start:start + count]:
            val = (val << 6) | (ord(ch) - 63)
        return val

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == "~":
        n, pos = word(2, 6), 8
    else:
        n, pos = word(1, 3), 4
    if n < 1:
        raise Graph6Error("graph6 header encodes zero vertices", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes, found {len(body)}", base + len(s))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency data", base + pos + need)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# --- metric structure -------------------------------------------------------

def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d >= 0]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return all(d >= 0 for d in bfs_distances(g, 0))


def require_connected(g: Graph) -> None:
    dist = bfs_distances(g, 0)
    for v, d in enumerate(dist):
        if d < 0:
            raise DisconnectedGraphError(0, v)


def distance_matrix(g: Graph) -> np.ndarray:
    d = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        row = bfs_distances(g, s)
        for v, dv in enumerate(row):
            if dv < 0:
                raise DisconnectedGraphError(s, v)
        d[s] = row
    d.flags.writeable = False
    return d


def laplacian_matrix(g: Graph) -> np.ndarray:
    lap = -np.asarray(g.adjacency_matrix())
    lap[np.diag_indices(g.n)] = g.degrees()
    lap.flags.writeable = False
    return lap


def diameter(g: Graph) -> int:
    return int(distance_matrix(g).max())


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for v in g.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_c3c4_free(g: Graph) -> bool:
    gi = girth(g)
    return gi is None or gi >= 5


def is_tree(g: Graph) -> bool:
    return g.num_edges == g.n - 1 and is_connected(g)


def pendant_counts(g: Graph) -> tuple[int, int]:
    """(number of leaves, number of vertices adjacent to a leaf) of a tree."""
    if g.n < 2 or not is_tree(g):
        raise GraphError("pendant_counts needs a tree on at least two vertices")
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    support = {g.adj[v][0] for v in leaves}
    return len(leaves), len(support)


def multipartite_parts(g: Graph) -> list[list[int]] | None:
    """Parts of a complete multipartite graph (independent sets), else ``None``."""
    # Non-adjacency (made reflexive) must be an equivalence relation.
    classes = [frozenset(set(range(g.n)) - set(g.adj[v])) for v in range(g.n)]
    if not all(classes[u] == classes[v] for v in range(g.n) for u in classes[v]):
        return None
    return sorted(sorted(c) for c in set(classes))


def is_complete_multipartite(g: Graph) -> bool:
    return multipartite_parts(g) is not None
