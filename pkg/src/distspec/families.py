"""Constructors for the graph families used throughout the package.

Labelings are fixed so that vectors indexed by vertex are reproducible:

* ``path(n)``: consecutive, 0-1-...-(n-1)
* ``star(n)``: center 0, leaves 1..n-1
* ``double_star(a, b)``: centers 0 and 1, leaves of 0 are 2..a+1, leaves of 1 follow
* ``t42_spider(q)``: center 0, middle vertices 1..q, leaf ``q+i`` hangs off middle ``i``
* ``build_t_family``: P2 on {0, 1}; step i appends w1..w4 as labels 4i-2..4i+1
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graph import Graph, GraphError


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    """K_{1,n-1} on ``n`` vertices."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def double_star(a: int, b: int) -> Graph:
    """S_{a,b}: an edge 0-1 with ``a`` leaves on 0 and ``b`` leaves on 1."""
    if a < 1 or b < 1:
        raise GraphError("double star needs a >= 1 and b >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + j) for j in range(b)]
    return Graph.from_edges(a + b + 2, edges)


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4} (lexicographic), adjacent when disjoint."""
    verts = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(verts[i]) & set(verts[j])]
    return Graph.from_edges(10, edges)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise GraphError("complete multipartite graph needs at least two parts of size >= 1")
    owner = [k for k, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph.from_edges(n, ((i, j) for i, j in combinations(range(n), 2) if owner[i] != owner[j]))


def t42_spider(q: int) -> Graph:
    """Center with ``q`` legs of length two (n = 2q + 1, diameter 4)."""
    if q < 2:
        raise GraphError("spider needs q >= 2")
    edges = [(0, i) for i in range(1, q + 1)] + [(i, q + i) for i in range(1, q + 1)]
    return Graph.from_edges(2 * q + 1, edges)


@dataclass(frozen=True)
class TreeRecipe:
    """Attachment vertices a_1..a_k; step i hangs a new P4 by an endpoint from a_i."""

    steps: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(a) for a in self.steps))
        for i, a in enumerate(self.steps, start=1):
            if not 0 <= a <= 4 * i - 3:
                raise GraphError(f"recipe step {i}: attachment vertex {a} outside [0, {4 * i - 3}]")

    @classmethod
    def parse(cls, text: str) -> "TreeRecipe":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError:
            raise GraphError(f"bad recipe {text!r}: expected comma-separated integers") from None

    @property
    def order(self) -> int:
        return 4 * len(self.steps) + 2

    def __str__(self) -> str:
        return ",".join(map(str, self.steps))


def build_t_family(recipe: TreeRecipe | Sequence[int]) -> Graph:
    if not isinstance(recipe, TreeRecipe):
        recipe = TreeRecipe(tuple(recipe))
    edges = [(0, 1)]
    for i, a in enumerate(recipe.steps, start=1):
        w1 = 4 * i - 2
        edges += [(a, w1), (w1, w1 + 1), (w1 + 1, w1 + 2), (w1 + 2, w1 + 3)]
    return Graph.from_edges(recipe.order, edges)


def all_recipes(max_steps: int) -> Iterator[TreeRecipe]:
    """Every recipe with at most ``max_steps`` steps, shortest first."""
    frontier: list[tuple[int, ...]] = [()]
    for k in range(max_steps + 1):
        yield from (TreeRecipe(r) for r in frontier)
        if k == max_steps:
            break
        frontier = [r + (a,) for r in frontier for a in range(4 * (k + 1) - 2)]


def attach_p4(g: Graph, v: int) -> Graph:
    """Hang a new path w1-w2-w3-w4 (labels n..n+3) from ``v`` by w1."""
    n = g.n
    edges: Iterable[tuple[int, int]] = list(g.edges()) + [(v, n), (n, n + 1), (n + 1, n + 2), (n + 2, n + 3)]
    return Graph.from_edges(n + 4, edges)


F1_SUBMATRIX = (
    (0, 1, 2, 1, 1),
    (1, 0, 1, 2, 2),
    (2, 1, 0, 1, 2),
    (1, 2, 1, 0, 2),
    (1, 2, 2, 2, 0),
)

F2_SUBMATRIX = (
    (0, 1, 2, 1, 2),
    (1, 0, 1, 2, 1),
    (2, 1, 0, 1, 2),
    (1, 2, 1, 0, 1),
    (2, 1, 2, 1, 0),
)


def f1_submatrix() -> list[list[int]]:
    """Principal block of D(G) on an induced C4 plus pendant vertex, G of diameter 2."""
    return [list(r) for r in F1_SUBMATRIX]


def f2_submatrix() -> list[list[int]]:
    """Principal block of D(G) on an induced K_{2,3}."""
    return [list(r) for r in F2_SUBMATRIX]
