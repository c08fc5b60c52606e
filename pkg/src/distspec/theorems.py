"""Computable checks of distance-spectral claims, each returning a :class:`Verdict`.

Boolean checks never raise on a failed claim; they return ``holds=False`` with
a witness describing what went wrong. Precondition violations (a non-tree
passed to a tree check, a disconnected graph) raise :class:`GraphError`.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import mpmath

from .exact import (Polynomial, char_poly, det_bareiss, eigen_multiplicity_exact, matvec,
                    nullspace, shifted)
from .families import (TreeRecipe, attach_p4, build_t_family, double_star, f1_submatrix,
                       f2_submatrix, path)
from .graph import (Graph, GraphError, diameter, distance_matrix, is_tree, laplacian_matrix,
                    multipartite_parts, pendant_counts, require_connected)
from .numeric import (GROUP_TOL, Spectrum, count_distinct, distance_spectrum, eig_symmetric,
                      inertia, laplacian_spectrum)
from .quotient import double_star_quotient, spider_quotient


class ConstructionError(RuntimeError):
    """An explicit construction failed its own exact verification."""


@dataclass
class Verdict:
    claim_id: str
    holds: bool
    witness: dict[str, Any] | None = None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    def to_json(self) -> dict[str, Any]:
        return {"claim_id": self.claim_id, "holds": self.holds, "witness": self.witness}


def _require_tree(t: Graph) -> None:
    if t.n < 2 or not is_tree(t):
        raise GraphError("this check needs a tree on at least two vertices")


def graham_pollack_value(n: int) -> int:
    return (-1) ** (n - 1) * (n - 1) * 2 ** (n - 2)


def check_graham_pollack(t: Graph) -> Verdict:
    _require_tree(t)
    det = det_bareiss(distance_matrix(t))
    expected = graham_pollack_value(t.n)
    return Verdict("graham-pollack", det == expected, {"n": t.n, "det": det, "expected": expected})


def check_merris_interlacing(t: Graph, tol: float = 1e-8) -> Verdict:
    """0 > -2/mu_1, then lam_2, -2/mu_2, lam_3, ..., -2/mu_{n-1}, lam_n non-increasing.

    The link -2/mu_1 vs lam_2 is checked with slack like the others: it is an
    exact equality for even paths (P4: both equal sqrt(2) - 2). The witness
    records whether that link was tight.
    """
    _require_tree(t)
    n = t.n
    lam = sorted(eig_symmetric(distance_matrix(t)), reverse=True)
    mu = sorted(eig_symmetric(laplacian_matrix(t)), reverse=True)[: n - 1]
    r = [-2.0 / m for m in mu]
    if not r[0] < 0:
        return Verdict("merris", False, {"link": "0 > -2/mu_1", "left": 0.0, "right": r[0]})
    chain = [("-2/mu_1", r[0])]
    for i in range(1, n):
        chain.append((f"lam_{i + 1}", lam[i]))
        if i < n - 1:
            chain.append((f"-2/mu_{i + 1}", r[i]))
    for (la, a), (lb, b) in zip(chain, chain[1:]):
        if a < b - tol:
            return Verdict("merris", False, {"link": f"{la} >= {lb}", "left": a, "right": b})
    return Verdict("merris", True, {"n": n, "first_link_tight": abs(r[0] - lam[1]) <= tol})


def check_tree_inertia(t: Graph) -> Verdict:
    _require_tree(t)
    got = inertia(distance_spectrum(t))
    expected = (1, 0, t.n - 1)
    return Verdict("inertia", got == expected, {"inertia": list(got), "expected": list(expected)})


def check_smallest_eig_bound(g: Graph, tol: float = 1e-8) -> Verdict:
    """lam_min <= -diameter, with equality exactly for complete multipartite graphs."""
    require_connected(g)
    d = diameter(g)
    lam_min = min(eig_symmetric(distance_matrix(g)))
    bound_ok = lam_min <= -d + tol
    equality = abs(lam_min + d) <= tol
    multipartite = multipartite_parts(g) is not None
    holds = bound_ok and equality == multipartite
    return Verdict("smallest-bound", holds, {"lambda_min": lam_min, "diameter": d, "equality": equality,
                                             "complete_multipartite": multipartite})


def check_laplacian_distinct_bound(g: Graph) -> Verdict:
    require_connected(g)
    distinct = count_distinct(laplacian_spectrum(g))
    d = diameter(g)
    return Verdict("laplacian-distinct", distinct >= d + 1, {"distinct": distinct, "diameter": d})


def regular_d2_distance_spectrum(adj_eigs: Sequence[float], n: int, k: int, tol: float = 1e-9) -> list[float]:
    """Distance eigenvalues of a k-regular graph of diameter <= 2 from its adjacency eigenvalues."""
    eigs = sorted(adj_eigs, reverse=True)
    if len(eigs) != n or abs(eigs[0] - k) > tol:
        raise GraphError("adjacency spectrum must have n entries led by the degree k")
    return sorted([2 * n - 2 - k] + [-(2 + x) for x in eigs[1:]], reverse=True)


def moore_adjacency_eigs(k: int) -> tuple[float, float, float]:
    root = math.sqrt(4 * k - 3)
    return float(k), (-1 + root) / 2, (-1 - root) / 2


@dataclass
class Classification:
    distinct: int
    classes: list[str] = field(default_factory=list)
    spectrum: Spectrum | None = None

    @property
    def three(self) -> bool:
        return self.distinct == 3

    @property
    def holds(self) -> bool:
        return not self.three or bool(self.classes)

    def to_verdict(self) -> Verdict:
        witness = {"distinct": self.distinct, "classes": self.classes if self.three else ["not-three"],
                   "spectrum": self.spectrum.to_json() if self.spectrum else None}
        return Verdict("three-distinct-class", self.holds, witness)


def classify_three_distinct(g: Graph, tol: float = GROUP_TOL) -> Classification:
    """Which of the four structural classes a graph with three distinct distance eigenvalues falls in."""
    require_connected(g)
    spec = distance_spectrum(g, group_tol=tol)
    out = Classification(count_distinct(spec), spectrum=spec)
    if not out.three:
        return out
    (l1, m1), (l2, m2), (l3, m3) = spec.items
    parts = multipartite_parts(g)
    if parts is not None and len(parts) == 2:
        out.classes.append("i")
    if parts is not None and len({len(p) for p in parts}) == 1:
        out.classes.append("ii")
    n = g.n
    if n % 2 == 1 and l1.is_integer() and int(l1) in spec.exact and m2 == m3 >= 2:
        half = (n - 1) // 2
        if half and int(l1) % half == 0 and int(l1) // half >= 3:
            out.classes.append("iii")
    if all(v.is_integer() and int(v) in spec.exact for v in (l1, l2, l3)) and l2 >= 0 and l3 <= -3:
        out.classes.append("iv")
    return out


def build_minus_one_eigenvector(recipe: TreeRecipe | Sequence[int]) -> list[int]:
    """Vector x with D(T) x = -x and sum(x) = 0 for T = build_t_family(recipe)."""
    if not isinstance(recipe, TreeRecipe):
        recipe = TreeRecipe(tuple(recipe))
    x = [1, -1]
    for p in recipe.steps:
        xp = x[p]
        x += [xp, -xp, -xp, xp]
    d = distance_matrix(build_t_family(recipe))
    dx = [sum(int(a) * b for a, b in zip(row, x)) for row in d.tolist()]
    if dx != [-v for v in x] or sum(x) != 0:
        raise ConstructionError(f"eigenvector construction failed for recipe {recipe}")
    return x


def minus_one_zero_sum_vector(g: Graph) -> list[Fraction] | None:
    """A nonzero exact solution of D x = -x with sum(x) = 0, if one exists."""
    basis = nullspace(shifted(distance_matrix(g), -1))
    sums = [sum(b) for b in basis]
    for b, s in zip(basis, sums):
        if s == 0:
            return b
    if len(basis) >= 2:
        b1, b2 = basis[0], basis[1]
        return [sums[1] * u - sums[0] * v for u, v in zip(b1, b2)]
    return None


# --- paths: secular equations ----------------------------------------------

def _bisect(f, lo: float, hi: float) -> float:
    flo = f(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def path_secular_spectrum(n: int) -> list[float]:
    """Eigenvalues of D(P_n), ascending, from the trigonometric secular equations."""
    if n <= 2:
        raise GraphError("secular equations need n > 2")

    def hyper(th: float) -> float:
        return math.tanh(th / 2) * math.tanh(n * th / 2) - 1.0 / n

    hi = 1.0
    while hyper(hi) < 0:
        hi *= 2
        if hi > 1e6:
            raise ArithmeticError("no bracket for the hyperbolic secular equation")
    theta = _bisect(hyper, 1e-300, hi)
    out = [1.0 / (2.0 * math.sinh(theta / 2) ** 2)]

    # tan(t/2) tan(n t/2) = -1/n, cleared of poles (cos(t/2) > 0 on (0, pi))
    def trig(th: float) -> float:
        return math.sin(th / 2) * math.sin(n * th / 2) + math.cos(th / 2) * math.cos(n * th / 2) / n

    want = (n - 1) // 2
    grid = [math.pi * i / (64 * n) for i in range(1, 64 * n)]
    roots = []
    for a, b in zip(grid, grid[1:]):
        fa, fb = trig(a), trig(b)
        if fa == 0:
            roots.append(a)
        elif (fa < 0) != (fb < 0):
            roots.append(_bisect(trig, a, b))
    if len(roots) != want:
        raise ArithmeticError(f"found {len(roots)} secular roots in (0, pi), expected {want}")
    out += [-1.0 / (2.0 * math.sin(th / 2) ** 2) for th in roots]
    out += [-1.0 / (2.0 * math.sin((2 * m - 1) * math.pi / n / 2) ** 2) for m in range(1, n // 2 + 1)]
    return sorted(out)


def path_minus_one(k: int) -> tuple[bool, int]:
    if k < 2:
        raise GraphError("path_minus_one needs k >= 2")
    mult = eigen_multiplicity_exact(distance_matrix(path(k)), -1)
    return mult > 0, mult


def check_path_minus_one(k: int) -> Verdict:
    has, mult = path_minus_one(k)
    predicted = k % 4 == 2
    holds = has == predicted and (not has or mult == 1)
    return Verdict("path-minus-one", holds, {"k": k, "has": has, "multiplicity": mult})


def check_collins_bound(t: Graph) -> Verdict:
    _require_tree(t)
    n1, n1p = pendant_counts(t)
    mult = eigen_multiplicity_exact(distance_matrix(t), -2)
    return Verdict("collins", mult >= n1 - n1p, {"multiplicity": mult, "n1": n1, "n1p": n1p})


# --- closed-form polynomials ------------------------------------------------

def star_char_poly(t: int) -> tuple[tuple[int, Polynomial], Polynomial]:
    """Distance characteristic polynomial of K_{1,t+2}: ((power of x+2, quadratic), expanded)."""
    if t < 0:
        raise GraphError("star_char_poly needs t >= 0")
    quad = Polynomial([-(t + 2), -(2 * t + 2), 1])
    return (t + 1, quad), Polynomial([2, 1]) ** (t + 1) * quad


def double_star_char_quartic(s: int, t: int) -> Polynomial:
    if s < 0 or t < 0:
        raise GraphError("double_star_char_quartic needs s, t >= 0")
    return Polynomial([
        -4 * s - 4 * t - 12,
        -(4 * s * t + 16 * s + 16 * t + 32),
        -(5 * s * t + 14 * s + 14 * t + 20),
        -(2 * t + 2 * s),
        1,
    ])


def check_double_star_quartic(s: int, t: int) -> Verdict:
    f = double_star_char_quartic(s, t)
    checks = {
        "matches_quotient": char_poly(double_star_quotient(s, t)) == f,
        "f(-1)": f(-1) == -s * t + 1,
        "f(-2)": f(-2) == -12 * s * t - 12 * s - 12 * t - 12,
    }
    return Verdict("dstar-quartic", all(checks.values()), {"s": s, "t": t, **checks})


def t42_cubic(q: int) -> Polynomial:
    if q < 2:
        raise GraphError("t42_cubic needs q >= 2")
    return Polynomial([-4 * q, -(q * q + 9 * q - 4), -(6 * q - 6), 1])


def check_t42_cubic(q: int, tol: float = 1e-7) -> Verdict:
    from .families import t42_spider
    from .quotient import quotient_eigenvalues

    g = t42_cubic(q)
    same = char_poly(spider_quotient(q)) == g
    full = eig_symmetric(distance_matrix(t42_spider(q)))
    roots = quotient_eigenvalues(spider_quotient(q), [1, q, q])
    unused = list(full)
    missing = []
    for r in roots:
        j = min(range(len(unused)), key=lambda i: abs(unused[i] - r))
        if abs(unused[j] - r) > tol:
            missing.append(r)
        else:
            unused.pop(j)
    return Verdict("t42-cubic", same and not missing,
                   {"q": q, "matches_quotient": same, "roots": roots, "unmatched": missing})


# --- the odd-order diameter-4 exclusion ----------------------------------

@dataclass(frozen=True)
class Candidates:
    """Eigenvalue triple forced on a hypothetical three-eigenvalue tree of order 2q+1."""

    q: int
    case: int
    lam1: float
    lam2: float
    lam3: float
    c: int
    sum23: Fraction
    prod23: Fraction

    def eq1_exact(self) -> bool:
        """4^q = c (lam2 lam3)^q, via the exact product."""
        return self.c * self.prod23 ** self.q == 4 ** self.q

    def eq2_exact(self) -> bool:
        """lam1 + q lam2 + q lam3 = 0, via the exact sum."""
        return self.lam1 + self.q * self.sum23 == 0

    def residuals(self) -> tuple[float, float]:
        prod = self.lam2 * self.lam3
        r1 = abs(self.c * prod ** self.q - 4 ** self.q) / 4 ** self.q
        r2 = abs(self.lam1 + self.q * self.lam2 + self.q * self.lam3) / abs(self.lam1)
        return r1, r2


def three_distinct_candidates(q: int, case: int) -> Candidates:
    if q < 2 or case not in (1, 2):
        raise GraphError("three_distinct_candidates needs q >= 2 and case 1 or 2")
    base = 4 if case == 1 else 2
    prod = 1 if case == 1 else 2
    c = base ** q
    lam1 = q * c
    big = math.sqrt(float(base ** (2 * q) - 4 * prod))
    lam3 = (-c - big) / 2
    lam2 = prod / lam3  # the product form avoids cancellation in (-c + big) / 2
    return Candidates(q, case, float(lam1), lam2, lam3, c, Fraction(-c), Fraction(prod))


def _exclusion_values(q: int) -> dict[str, float]:
    r1 = math.sqrt(float(16 ** q - 4))
    r2 = math.sqrt(float(4 ** q - 8))
    a1 = q * 4 ** q - 4 ** q - 6 * q + 6
    a2 = q * 2 ** q - 2 ** q - 6 * q + 6
    return {"h1": a1 + r1, "h2": a2 + r2, "l1": a1 - r1, "l2": a2 - r2}


def _exclusion_interval(q: int, name: str) -> mpmath.iv.mpf:
    iv = mpmath.iv
    saved = iv.prec
    iv.prec = 106
    try:
        r1 = iv.sqrt(iv.mpf(16 ** q - 4))
        r2 = iv.sqrt(iv.mpf(4 ** q - 8))
        a1 = iv.mpf(q * 4 ** q - 4 ** q - 6 * q + 6)
        a2 = iv.mpf(q * 2 ** q - 2 ** q - 6 * q + 6)
        return {"h1": a1 + r1, "h2": a2 + r2, "l1": a1 - r1, "l2": a2 - r2}[name]
    finally:
        iv.prec = saved


def _sign(q: int, name: str, value: float) -> int:
    if abs(value) >= 1e-6:
        return 1 if value > 0 else -1
    box = _exclusion_interval(q, name)
    if box.a > 0:
        return 1
    if box.b < 0:
        return -1
    return 0


def form_exclusions(q_max: int) -> list[dict[str, Any]]:
    """h1, h2, l1, l2 for q = 2..q_max with certified signs."""
    if q_max < 2:
        raise GraphError("form_exclusions needs q_max >= 2")
    rows = []
    for q in range(2, q_max + 1):
        vals = _exclusion_values(q)
        row: dict[str, Any] = {"q": q, **vals}
        for name, v in vals.items():
            row[f"{name}_sign"] = _sign(q, name, v)
        rows.append(row)
    return rows


def check_form_exclusions(q_max: int) -> Verdict:
    rows = form_exclusions(q_max)
    failures = []
    for row in rows:
        q = row["q"]
        expect = {
            "h1": 1,
            "h2": 1 if q >= 3 else None,
            "l1": 1 if q >= 3 else None,
            "l2": 1 if q >= 4 else None,
        }
        for name, sign in expect.items():
            if sign is None:
                if row[f"{name}_sign"] == 0:
                    failures.append({"q": q, "function": name, "problem": "vanishes"})
            elif row[f"{name}_sign"] != sign:
                failures.append({"q": q, "function": name, "value": row[name]})
    return Verdict("form-exclusions", not failures, {"q_max": q_max, "failures": failures})


def remark3_second_eigenvalues() -> tuple[float, float]:
    return (sorted(eig_symmetric(f1_submatrix()))[-2], sorted(eig_symmetric(f2_submatrix()))[-2])


def s22_plus_p4_negative_check(depth: int) -> Verdict:
    """Multiplicity of -1 for every tree grown from S_{2,2} by up to ``depth`` P4 attachments."""
    if depth < 1:
        raise GraphError("depth must be >= 1")
    frontier: list[tuple[tuple[int, ...], Graph]] = [((), double_star(2, 2))]
    records = []
    for _ in range(depth):
        nxt = []
        for seq, g in frontier:
            for v in range(g.n):
                h = attach_p4(g, v)
                mult = eigen_multiplicity_exact(distance_matrix(h), -1)
                records.append({"attachments": list(seq + (v,)), "n": h.n, "multiplicity": mult})
                nxt.append((seq + (v,), h))
        frontier = nxt
    bad = [r for r in records if r["multiplicity"]]
    return Verdict("s22-p4", not bad, {"depth": depth, "scanned": len(records), "with_minus_one": bad})
