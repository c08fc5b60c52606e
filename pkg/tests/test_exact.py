from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from distspec.exact import (ExactLinalgError, Polynomial, char_poly, det_bareiss,
                            eigen_multiplicity_exact, matvec, nullspace, poly_eval,
                            poly_integer_roots, rank_nullity, shifted)
from distspec.families import double_star, path, petersen, star
from distspec.graph import distance_matrix
from distspec.theorems import double_star_char_quartic

from oracles import cofactor_det, lowest_terms


def int_matrices(max_n=6, lo=-6, hi=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


def symmetric_matrices(max_n=7, lo=-4, hi=4):
    def build(n):
        return st.lists(st.integers(lo, hi), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
            lambda vals: _sym(n, vals))
    return st.integers(1, max_n).flatmap(build)


def _sym(n, vals):
    m = [[0] * n for _ in range(n)]
    it = iter(vals)
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = next(it)
    return m


class TestDeterminant:
    def test_p2(self):
        assert det_bareiss(distance_matrix(path(2))) == -1

    def test_p4_against_cofactor(self):
        d = distance_matrix(path(4))
        assert det_bareiss(d) == cofactor_det(d) == -12

    def test_star_against_cofactor(self):
        d = distance_matrix(star(6))
        assert det_bareiss(d) == cofactor_det(d) == (-1) ** 5 * 5 * 2 ** 4 == -80

    def test_needs_row_swap(self):
        assert det_bareiss([[0, 1], [1, 0]]) == -1
        assert det_bareiss([[0, 0], [0, 1]]) == 0

    def test_big_integers(self):
        # pivots overflow 64-bit well before n = 20
        m = [[(i + 1) ** (j + 1) for j in range(14)] for i in range(14)]
        expected = 1
        for i in range(14):
            expected *= i + 1
        for i in range(14):
            for j in range(i + 1, 14):
                expected *= (j + 1) - (i + 1)
        assert det_bareiss(m) == expected

    @given(int_matrices())
    def test_matches_cofactor_expansion(self, m):
        assert det_bareiss(m) == cofactor_det(m)


class TestRankNullity:
    def test_identity(self):
        assert rank_nullity(np.eye(3, dtype=int)) == (3, 0)

    def test_p6_plus_identity(self):
        assert rank_nullity(shifted(distance_matrix(path(6)), -1))[1] == 1

    def test_s22_plus_two(self):
        assert rank_nullity(shifted(distance_matrix(double_star(2, 2)), -2))[1] == 2

    def test_rational_input(self):
        m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1)]]
        assert rank_nullity(m) == (1, 1)

    def test_eigen_multiplicity(self):
        d = distance_matrix(petersen())
        assert eigen_multiplicity_exact(d, -3) == 5
        assert eigen_multiplicity_exact(d, 0) == 4
        assert eigen_multiplicity_exact(distance_matrix(path(5)), -1) == 0

    @given(symmetric_matrices(), st.integers(-5, 5))
    def test_nullity_is_root_multiplicity(self, m, lam):
        p = char_poly(m)
        mult = 0
        while p(lam) == 0:
            p, _ = p.divmod_linear(lam)
            mult += 1
        assert eigen_multiplicity_exact(m, lam) == mult

    @given(int_matrices(max_n=5, lo=-3, hi=3))
    def test_nullspace_is_exact_and_normalized(self, m):
        basis = nullspace(m)
        assert len(basis) == rank_nullity(m)[1]
        for v in basis:
            assert all(lowest_terms(x) for x in v)
            assert all(x == 0 for x in matvec(m, v))


class TestCharPoly:
    def test_k2(self):
        assert char_poly(distance_matrix(path(2))) == Polynomial([-1, 0, 1])

    def test_star_k13(self):
        expected = Polynomial([2, 1]) ** 2 * Polynomial([-3, -4, 1])
        assert char_poly(distance_matrix(star(4))) == expected

    def test_p4(self):
        assert char_poly(distance_matrix(path(4))) == Polynomial([-12, -32, -20, 0, 1])
        assert str(char_poly(distance_matrix(path(4)))) == "x^4 - 20*x^2 - 32*x - 12"

    def test_order_bound(self):
        with pytest.raises(ExactLinalgError):
            char_poly(np.zeros((5, 5), dtype=int), max_order=4)

    @given(int_matrices(max_n=7))
    def test_value_at_zero_is_signed_determinant(self, m):
        n = len(m)
        assert char_poly(m)(0) == (-1) ** n * det_bareiss(m)

    @given(int_matrices(max_n=5, lo=-3, hi=3))
    def test_matches_numpy_poly(self, m):
        ref = np.round(np.poly(np.array(m, dtype=float))).astype(int).tolist()
        assert char_poly(m).int_coeffs() == ref[::-1]

    @given(int_matrices(max_n=4), int_matrices(max_n=4))
    def test_block_diagonal_is_product(self, a, b):
        n, k = len(a), len(b)
        m = [row + [0] * k for row in a] + [[0] * n + row for row in b]
        assert char_poly(m) == char_poly(a) * char_poly(b)


class TestPolynomials:
    def test_eval_examples(self):
        assert poly_eval(Polynomial([-1, 0, 1]), 1) == 0
        assert double_star_char_quartic(1, 1)(-1) == 0
        assert double_star_char_quartic(2, 3)(-2) == -12 * 6 - 12 * 2 - 12 * 3 - 12 == -144

    def test_zero_polynomial(self):
        z = Polynomial([0, 0])
        assert z.is_zero() and z.degree == -1 and poly_eval(z, 7) == 0
        with pytest.raises(ExactLinalgError):
            poly_integer_roots(z)

    def test_integer_roots_examples(self):
        assert poly_integer_roots(Polynomial([-1, 0, 1])) == [(1, 1), (-1, 1)]
        assert poly_integer_roots(char_poly(distance_matrix(petersen()))) == [(15, 1), (0, 4), (-3, 5)]
        assert poly_integer_roots(Polynomial([-2, 0, 1])) == []

    @given(st.lists(st.integers(-20, 20), max_size=7), st.lists(st.integers(-5, 5), min_size=1, max_size=3))
    def test_integer_roots_recovered(self, roots, extra):
        # times an integer polynomial with no integer roots (x^2 + 1)^k
        p = Polynomial.from_roots(roots) * Polynomial([1, 0, 1]) ** len(extra)
        expect = {}
        for r in roots:
            expect[r] = expect.get(r, 0) + 1
        assert poly_integer_roots(p) == sorted(expect.items(), reverse=True)

    def test_rational_coefficients_rejected(self):
        with pytest.raises(ExactLinalgError):
            poly_integer_roots(Polynomial([Fraction(1, 2), 1]))

    def test_divmod_linear(self):
        q, r = Polynomial([-1, 0, 1]).divmod_linear(1)
        assert q == Polynomial([1, 1]) and r == 0
