"""Vertex partitions, equitability and quotient matrices."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import int_rows
from .graph import Graph, GraphError
from .numeric import eig_symmetric


class PartitionError(GraphError):
    pass


@dataclass(frozen=True)
class Partition:
    """Ordered list of disjoint nonempty blocks.

    Block order is kept as given, since it fixes the row order of the quotient
    matrix; :meth:`canonical` sorts blocks by their smallest label.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(v) for v in b)) for b in self.blocks)
        if any(not b for b in blocks):
            raise PartitionError("partition blocks must be nonempty")
        seen: set[int] = set()
        for b in blocks:
            for v in b:
                if v in seen:
                    raise PartitionError(f"vertex {v} appears in two blocks")
                seen.add(v)
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """``"0,1;2;3,4"`` -> three blocks."""
        try:
            return cls(tuple(tuple(int(x) for x in blk.split(",")) for blk in text.split(";")))
        except ValueError:
            raise PartitionError(f"bad partition {text!r}") from None

    @property
    def order(self) -> int:
        return sum(len(b) for b in self.blocks)

    def check_covers(self, n: int) -> None:
        labels = sorted(v for b in self.blocks for v in b)
        if labels != list(range(n)):
            raise PartitionError(f"partition does not cover 0..{n - 1} exactly")

    def canonical(self) -> "Partition":
        return Partition(tuple(sorted(self.blocks, key=min)))

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def __str__(self) -> str:
        return ";".join(",".join(map(str, b)) for b in self.blocks)


@dataclass(frozen=True)
class QuotientResult:
    matrix: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    def as_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.matrix])


def quotient(m, p: Partition) -> QuotientResult:
    """Block-average row-sum matrix; equitability is decided exactly."""
    a = int_rows(m)
    p.check_covers(len(a))
    out = []
    equitable = True
    for bi in p.blocks:
        row = []
        for bj in p.blocks:
            sums = [sum(a[u][v] for v in bj) for u in bi]
            if any(s != sums[0] for s in sums):
                equitable = False
            row.append(Fraction(sum(sums), len(bi)))
        out.append(tuple(row))
    return QuotientResult(tuple(out), equitable)


def degree_partition(g: Graph) -> Partition:
    """Vertices grouped by degree, blocks in ascending degree order."""
    by_deg: dict[int, list[int]] = defaultdict(list)
    for v in range(g.n):
        by_deg[g.degree(v)].append(v)
    return Partition(tuple(tuple(by_deg[d]) for d in sorted(by_deg)))


def double_star_orbit_partition(s: int, t: int) -> Partition:
    """(left leaves, left center, right center, right leaves) of ``double_star(s+1, t+1)``."""
    left = tuple(range(2, s + 3))
    right = tuple(range(s + 3, s + t + 4))
    return Partition((left, (0,), (1,), right))


def double_star_quotient(s: int, t: int) -> list[list[Fraction]]:
    if s < 0 or t < 0:
        raise PartitionError("double star quotient needs s, t >= 0")
    rows = [
        [2 * s, 1, 2, 3 * (t + 1)],
        [s + 1, 0, 1, 2 * (t + 1)],
        [2 * (s + 1), 1, 0, t + 1],
        [3 * (s + 1), 2, 1, 2 * t],
    ]
    return [[Fraction(x) for x in r] for r in rows]


def spider_quotient(q: int) -> list[list[Fraction]]:
    """Quotient of D(t42_spider(q)) over (center, middles, leaves)."""
    rows = [
        [0, q, 2 * q],
        [1, 2 * (q - 1), 3 * (q - 1) + 1],
        [2, 3 * (q - 1) + 1, 4 * (q - 1)],
    ]
    return [[Fraction(x) for x in r] for r in rows]


def quotient_eigenvalues(matrix: Sequence[Sequence[Fraction]], sizes: Sequence[int]) -> list[float]:
    """Eigenvalues of an equitable quotient of a symmetric matrix, ascending.

    ``diag(sqrt(sizes)) B diag(1/sqrt(sizes))`` is symmetric, so the Jacobi
    solver applies.
    """
    b = np.array([[float(x) for x in row] for row in matrix])
    r = np.sqrt(np.asarray(sizes, dtype=float))
    sym = b * r[:, None] / r[None, :]
    return eig_symmetric((sym + sym.T) / 2)


def _irreducible_nonnegative(a: list[list[int]]) -> bool:
    n = len(a)
    if any(x < 0 for row in a for x in row):
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(n):
            if v not in seen and (a[u][v] or a[v][u]):
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def quotient_eigs_subset_check(m, p: Partition, tol: float = 1e-7) -> bool:
    """Quotient eigenvalues embed (as a multiset) in those of ``m``.

    For nonnegative irreducible ``m`` the largest eigenvalues must coincide too.
    """
    q = quotient(m, p)
    if not q.equitable:
        raise PartitionError("partition is not equitable; the quotient eigenvalue lemma does not apply")
    a = int_rows(m)
    full = eig_symmetric(a)
    sub = quotient_eigenvalues(q.matrix, p.sizes())
    used = [False] * len(full)
    for mu in sub:
        best = None
        for i, lam in enumerate(full):
            if not used[i] and abs(lam - mu) <= tol and (best is None or abs(lam - mu) < abs(full[best] - mu)):
                best = i
        if best is None:
            return False
        used[best] = True
    if _irreducible_nonnegative(a) and abs(max(full) - max(sub)) > tol:
        return False
    return True
