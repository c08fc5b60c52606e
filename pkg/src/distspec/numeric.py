"""Floating-point spectra: cyclic Jacobi eigensolver and spectrum grouping."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .exact import eigen_multiplicity_exact
from .graph import Graph, distance_matrix, laplacian_matrix, require_connected

GROUP_TOL = 1e-7
SNAP_TOL = 1e-6
ZERO_TOL = 1e-9
JACOBI_MAX_SWEEPS = 100


class SpectrumError(ArithmeticError):
    pass


def eig_symmetric(m, rel_tol: float = 1e-12, max_sweeps: int = JACOBI_MAX_SWEEPS) -> list[float]:
    """Eigenvalues of a real symmetric matrix, ascending.

    Cyclic-by-row Jacobi: sweeps over (p, q) with p < q in row order until the
    off-diagonal Frobenius norm drops below ``rel_tol * ||m||_F``.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SpectrumError("matrix must be square")
    n = a.shape[0]
    if n and np.abs(a - a.T).max() > 1e-12 * max(1.0, np.abs(a).max()):
        raise SpectrumError("matrix is not symmetric")
    a = (a + a.T) / 2
    target = rel_tol * np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off <= target:
            return sorted(float(x) for x in np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                if apq == 0.0:
                    continue
                diff = float(a[q, q] - a[p, p])
                if abs(apq) < 1e-18 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q]
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :]
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = a[q, p] = 0.0
    raise SpectrumError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues (descending) with multiplicities.

    ``exact`` holds the integer values whose multiplicity was confirmed by an
    exact nullity computation.
    """

    items: tuple[tuple[float, int], ...]
    group_tol: float = GROUP_TOL
    exact: frozenset[int] = field(default_factory=frozenset)

    @property
    def n(self) -> int:
        return sum(m for _, m in self.items)

    def values(self) -> list[float]:
        """All eigenvalues with repetition, descending."""
        return [v for v, m in self.items for _ in range(m)]

    def distinct(self) -> list[float]:
        return [v for v, _ in self.items]

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        tol = self.group_tol if tol is None else tol
        return sum(m for v, m in self.items if abs(v - value) <= tol)

    def __len__(self) -> int:
        return len(self.items)

    def to_json(self) -> list[dict]:
        return [{"value": v, "multiplicity": m, "exact": v.is_integer() and int(v) in self.exact}
                for v, m in self.items]

    def __str__(self) -> str:
        parts = []
        for v, m in self.items:
            txt = str(int(v)) if v.is_integer() and int(v) in self.exact else f"{v:.10g}"
            parts.append(txt if m == 1 else f"[{txt}]^{m}")
        return "{" + ", ".join(parts) + "}"


def group_spectrum(vals: Sequence[float], tol: float = GROUP_TOL) -> Spectrum:
    """Single-linkage grouping of sorted values; each group reports its mean."""
    ordered = sorted(float(v) for v in vals)
    groups: list[list[float]] = []
    for v in ordered:
        if groups and v - groups[-1][-1] <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    items = tuple((sum(g) / len(g), len(g)) for g in reversed(groups))
    return Spectrum(items, tol)


def snap_integers(m, spec: Spectrum, snap_tol: float = SNAP_TOL) -> Spectrum:
    """Replace near-integer values by exact integers when exact nullity agrees."""
    items = []
    exact = set(spec.exact)
    for v, mult in spec.items:
        k = round(v)
        if abs(v - k) <= snap_tol:
            nullity = eigen_multiplicity_exact(m, k)
            if nullity == mult:
                items.append((float(k), mult))
                exact.add(int(k))
                continue
            if nullity:
                raise SpectrumError(
                    f"eigenvalue {k}: numeric multiplicity {mult} disagrees with exact nullity {nullity}; "
                    "adjust the grouping tolerance")
        items.append((v, mult))
    return Spectrum(tuple(items), spec.group_tol, frozenset(exact))


def matrix_spectrum(m, group_tol: float = GROUP_TOL, snap_tol: float | None = SNAP_TOL) -> Spectrum:
    spec = group_spectrum(eig_symmetric(m), group_tol)
    if snap_tol is None:
        return spec
    return snap_integers(m, spec, snap_tol)


def distance_spectrum(g: Graph, group_tol: float = GROUP_TOL, snap_tol: float | None = SNAP_TOL) -> Spectrum:
    return matrix_spectrum(distance_matrix(g), group_tol, snap_tol)


def laplacian_spectrum(g: Graph, group_tol: float = GROUP_TOL, snap_tol: float | None = SNAP_TOL) -> Spectrum:
    require_connected(g)
    return matrix_spectrum(laplacian_matrix(g), group_tol, snap_tol)


def inertia(s: Spectrum, zero_tol: float = ZERO_TOL) -> tuple[int, int, int]:
    pos = zero = neg = 0
    for v, m in s.items:
        if abs(v) <= zero_tol:
            zero += m
        elif v > 0:
            pos += m
        else:
            neg += m
    return pos, zero, neg


def count_distinct(s: Spectrum) -> int:
    return len(s.items)


def interlaces(outer: Iterable[float], inner: Iterable[float], tol: float = 1e-8) -> bool:
    """Cauchy interlacing of a principal submatrix's eigenvalues ``inner``."""
    lam = sorted(outer, reverse=True)
    mu = sorted(inner, reverse=True)
    n, m = len(lam), len(mu)
    return all(lam[n - m + i] - tol <= mu[i] <= lam[i] + tol for i in range(m))
