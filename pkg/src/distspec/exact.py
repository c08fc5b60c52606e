"""Exact integer and rational linear algebra.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator). Integer matrices may be passed as nested lists or numpy arrays;
entries are converted to Python ints so nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

CHAR_POLY_MAX_ORDER = 64


class ExactLinalgError(ValueError):
    pass


def _as_int(x) -> int:
    if isinstance(x, (int, np.integer)):
        return int(x)
    f = Fraction(x)
    if f.denominator != 1:
        raise ExactLinalgError(f"entry {x!r} is not an integer")
    return int(f)


def int_rows(m) -> list[list[int]]:
    rows = [[_as_int(x) for x in row] for row in np.asarray(m, dtype=object).tolist()] if len(m) else []
    if any(len(r) != len(rows) for r in rows):
        raise ExactLinalgError("matrix must be square")
    return rows


def _rat_rows(m) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in m]
    if any(len(r) != len(rows) for r in rows):
        raise ExactLinalgError("matrix must be square")
    return rows


def det_bareiss(m) -> int:
    """Determinant by fraction-free Gaussian elimination."""
    a = int_rows(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _rank_int(a: list[list[int]]) -> int:
    # Fraction-free row echelon; every stored entry is a minor of the input,
    # so the division by the previous pivot is exact.
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        rowr = a[r]
        for i in range(r + 1, nrows):
            rowi = a[i]
            f = rowi[c]
            for j in range(c + 1, ncols):
                rowi[j] = (p * rowi[j] - f * rowr[j]) // prev
            rowi[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def _bits(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def _echelon_rat(a: list[list[Fraction]]) -> list[int]:
    """Reduce ``a`` in place to reduced row echelon form; return pivot columns."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        cands = [i for i in range(r, nrows) if a[i][c] != 0]
        if not cands:
            continue
        piv = min(cands, key=lambda i: _bits(a[i][c]))
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank_nullity(m) -> tuple[int, int]:
    """Exact (rank, nullity) of a square integer or rational matrix."""
    rows = list(m)
    if rows and all(isinstance(x, (int, np.integer)) or (isinstance(x, Fraction) and x.denominator == 1)
                    for row in rows for x in row):
        a = int_rows(m)
        r = _rank_int(a)
    else:
        a = _rat_rows(m)
        r = len(_echelon_rat(a))
    return r, len(a) - r


def shifted(m, lam) -> list[list]:
    """``m - lam * I`` with exact entries."""
    lam = Fraction(lam)
    rows = _rat_rows(np.asarray(m, dtype=object).tolist() if len(m) else [])
    if lam.denominator == 1 and all(x.denominator == 1 for row in rows for x in row):
        rows = [[int(x) for x in row] for row in rows]
        lam = int(lam)
    for i in range(len(rows)):
        rows[i][i] -= lam
    return rows


def eigen_multiplicity_exact(m, lam) -> int:
    """Geometric multiplicity of ``lam`` as an eigenvalue of ``m`` (0 if absent)."""
    return rank_nullity(shifted(m, lam))[1]


def nullspace(m) -> list[list[Fraction]]:
    """Basis of the right nullspace of ``m`` over the rationals."""
    a = _rat_rows(m)
    n = len(a[0]) if a else 0
    pivots = _echelon_rat(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f]
        basis.append(v)
    return basis


def matvec(m, x: Sequence) -> list:
    return [sum(Fraction(int(a)) * b if not isinstance(a, Fraction) else a * b for a, b in zip(row, x))
            for row in np.asarray(m, dtype=object).tolist()]


# --- polynomials ------------------------------------------------------------

@dataclass(frozen=True, init=False)
class Polynomial:
    """Exact polynomial with rational coefficients in ascending degree."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        k = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (k - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (k - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-x for x in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(x * Fraction(other) for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod_linear(self, r) -> tuple["Polynomial", Fraction]:
        """Synthetic division by ``(x - r)``: quotient and remainder."""
        r = Fraction(r)
        if self.is_zero():
            return Polynomial(), Fraction(0)
        q = []
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
            q.append(acc)
        rem = q.pop()
        return Polynomial(reversed(q)), rem

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ExactLinalgError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "" if (mag == 1 and k > 0) else str(mag)
            var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body + ("*" if body and var else "") + var))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s


def poly_eval(p: Polynomial, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def char_poly(m, max_order: int = CHAR_POLY_MAX_ORDER) -> Polynomial:
    """det(xI - m) of an integer matrix by the Faddeev-LeVerrier recurrence."""
    a = int_rows(m)
    n = len(a)
    if n > max_order:
        raise ExactLinalgError(
            f"order {n} exceeds the exact characteristic polynomial bound {max_order}; "
            "use the numeric spectrum instead")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        mcols = list(zip(*mk))
        new = [[sum(x * y for x, y in zip(row, col)) for col in mcols] for row in a]
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            new[i][i] += c_prev
        mk = new
        mcols = list(zip(*mk))
        num = -sum(sum(x * y for x, y in zip(a[i], mcols[i])) for i in range(n))
        if num % k:
            raise ExactLinalgError("non-integral Faddeev-LeVerrier step")  # unreachable for integer input
        coeffs[n - k] = num // k
    return Polynomial(coeffs)


def _iroot_ceil(x: int, k: int) -> int:
    if x <= 0:
        return 0
    r = int(round(x ** (1.0 / k))) if x < 1 << 1000 else 1 << (x.bit_length() // k + 1)
    while r ** k < x:
        r += 1
    while r > 0 and (r - 1) ** k >= x:
        r -= 1
    return r


def poly_integer_roots(p: Polynomial) -> list[tuple[int, int]]:
    """Integer roots of an integer polynomial with multiplicities, descending."""
    c = p.int_coeffs()
    if not c:
        raise ExactLinalgError("the zero polynomial has every integer as a root")
    found: list[tuple[int, int]] = []
    zero_mult = next(i for i, x in enumerate(c) if x != 0)
    c = c[zero_mult:]
    q = Polynomial(c)
    if zero_mult:
        found.append((0, zero_mult))
    if q.degree >= 1:
        # Fujiwara-style bound: |root| <= 2 * max_k |a_{d-k}/a_d|^{1/k}
        lead = abs(c[-1])
        d = len(c) - 1
        bound = 1
        for k in range(1, d + 1):
            ratio = -(-abs(c[d - k]) // lead)
            bound = max(bound, 2 * _iroot_ceil(ratio, k))
        const = abs(c[0])
        for r in sorted((s * v for v in range(1, bound + 1) if const % v == 0 for s in (1, -1))):
            mult = 0
            while q.degree >= 1:
                quo, rem = q.divmod_linear(r)
                if rem != 0:
                    break
                q = quo
                mult += 1
            if mult:
                found.append((r, mult))
    return sorted(found, reverse=True)
