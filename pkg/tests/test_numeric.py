from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from symmetra import CPoly, GaussRat, InvalidInputError
from symmetra.algebraic import certified_zero, isolate_roots, recognize_gaussian
from symmetra.numeric import (
    I,
    ONE,
    ZERO,
    binomial_gcd,
    binomial_poly,
    gauss_poly_gcd,
    rat,
    rat_str,
    rational_sqrt,
    sqrt_upper,
    squarefree_decomposition,
    squarefree_part,
)

from conftest import gauss_rats


def cp(*coeffs):
    """Coefficients listed from the constant term upward."""
    return CPoly([GaussRat.of(c) if not isinstance(c, GaussRat) else c for c in coeffs])


def cpolys(max_degree=5):
    return st.lists(gauss_rats(), min_size=1, max_size=max_degree + 1).map(CPoly)


class TestScalars:
    def test_rat_accepts_exact_inputs(self):
        assert rat("3/4") == mpq(3, 4)
        assert rat(Fraction(-2, 6)) == mpq(-1, 3)
        assert rat(7) == 7

    @pytest.mark.parametrize("bad", ["0.5", "1e3", 0.5])
    def test_rat_rejects_inexact(self, bad):
        with pytest.raises(InvalidInputError):
            rat(bad)

    def test_rat_str_always_has_denominator(self):
        assert rat_str(mpq(0)) == "0/1"
        assert rat_str(mpq(-6, 4)) == "-3/2"

    def test_rational_sqrt(self):
        assert rational_sqrt(mpq(9, 4)) == mpq(3, 2)
        assert rational_sqrt(mpq(2)) is None
        assert rational_sqrt(mpq(-1)) is None

    def test_sqrt_upper_bounds(self):
        u = sqrt_upper(mpq(2), 80)
        assert u * u >= 2
        assert (u - mpq(1, 1 << 78)) ** 2 < 2

    def test_gauss_field_ops(self):
        a = GaussRat(1, 2)
        assert a * a.inverse() == ONE
        assert a * a.conj() == GaussRat(5)
        assert I**2 == -ONE
        assert (a**-2) * a**2 == ONE
        assert a.norm() == 5

    def test_division_by_zero(self):
        with pytest.raises((InvalidInputError, ZeroDivisionError)):
            GaussRat(1, 1) / ZERO

    @given(gauss_rats(nonzero=True), gauss_rats())
    def test_division_roundtrip(self, a, b):
        assert (b / a) * a == b


class TestGcd:
    def test_gcd_z2_minus_1(self):
        assert gauss_poly_gcd(cp(-1, 0, 1), cp(-1, 1)) == cp(-1, 1)

    def test_gcd_identical_is_monic(self):
        p = cp(GaussRat(0, 2), 0, 0, 2)
        assert gauss_poly_gcd(p, p) == cp(I, 0, 0, 1)

    def test_gcd_against_sympy(self):
        # sympy: gcd((z-1)^2 (z^2+1)(z-2i), (z-1)(z-2i)(z+3)) = z^2 - (1+2i) z + 2i
        a = cp(-1, 1) ** 2 * cp(1, 0, 1) * cp(GaussRat(0, -2), 1)
        b = cp(-1, 1) * cp(GaussRat(0, -2), 1) * cp(3, 1)
        assert gauss_poly_gcd(a, b) == cp(GaussRat(0, 2), GaussRat(-1, -2), 1)

    def test_gcd_of_zeros_rejected(self):
        with pytest.raises(InvalidInputError):
            gauss_poly_gcd(CPoly(), CPoly())

    @given(cpolys(3), cpolys(3), cpolys(3))
    def test_gcd_multiplicative(self, p, q, g):
        if p.is_zero() or q.is_zero() or g.is_zero():
            return
        if gauss_poly_gcd(p, q).degree != 0:
            return
        assert gauss_poly_gcd(p * g, q * g) == g.monic()

    def test_squarefree_decomposition(self):
        p = cp(-1, 1) ** 3 * cp(-2, 0, 1) * cp(GaussRat(0, 1), 1) ** 2
        parts = dict((m, f) for f, m in squarefree_decomposition(p))
        assert parts[1] == cp(-2, 0, 1)
        assert parts[2] == cp(I, 1)
        assert parts[3] == cp(-1, 1)
        assert squarefree_part(p) == (cp(-1, 1) * cp(-2, 0, 1) * cp(I, 1)).monic()


class TestBinomialGcd:
    def test_empty_means_everything(self):
        assert binomial_gcd([]) == (0, ONE)

    def test_common_roots_of_unity(self):
        # sympy: gcd(z^12 - 1, z^8 - 1) = z^4 - 1
        assert binomial_gcd([(12, ONE), (8, ONE)]) == (4, ONE)

    def test_no_common_root(self):
        # sympy: gcd(z^6 + i, z^9 + 1) = 1
        assert binomial_gcd([(6, -I), (9, -ONE)]) is None

    def test_negative_exponent_inverts(self):
        assert binomial_gcd([(-3, I)]) == (3, -I)

    def test_zero_exponent(self):
        assert binomial_gcd([(0, ONE), (2, -ONE)]) == (2, -ONE)
        assert binomial_gcd([(0, I)]) is None

    @given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6), gauss_rats(3, 3, nonzero=True))
    def test_matches_polynomial_gcd(self, a, b, k, w):
        # both binomials vanish at w by construction
        res = binomial_gcd([(a * k, w ** (a * k)), (b * k, w ** (b * k))])
        assert res is not None
        m, c = res
        g = gauss_poly_gcd(binomial_poly(a * k, w ** (a * k)), binomial_poly(b * k, w ** (b * k)))
        assert g == binomial_poly(m, c)


class TestRoots:
    def test_z2_plus_1(self):
        roots = sorted((r.approx(20) for r, _ in isolate_roots(cp(1, 0, 1))), key=lambda z: z.imag)
        assert len(roots) == 2
        assert abs(roots[0] + 1j) < 1e-15 and abs(roots[1] - 1j) < 1e-15

    def test_cube_roots_of_minus_i(self):
        import mpmath

        p = cp(I, 0, 0, 1)
        roots = isolate_roots(p)
        assert len(roots) == 3
        for r, mult in roots:
            assert mult == 1
            z = r.approx(40)
            with mpmath.workdps(40):
                assert abs(abs(z) - 1) < mpmath.mpf(10) ** -30
                assert abs(z**3 + 1j) < mpmath.mpf(10) ** -30
        for i in range(3):
            for j in range(i + 1, 3):
                a, b = roots[i][0], roots[j][0]
                assert (a.center - b.center).norm() > (a.radius + b.radius) ** 2

    def test_sextic_g_roots(self):
        roots = isolate_roots(cp(0, 0, -6, 0, 0, 6))
        mults = sorted(m for _, m in roots)
        assert mults == [1, 1, 1, 2]
        exact = [recognize_gaussian(r) for r, _ in roots]
        assert ZERO in exact and ONE in exact
        assert exact.count(None) == 2

    def test_recognize(self):
        (r,) = [a for a, _ in isolate_roots(cp(GaussRat(-1, 2), 1))]
        assert recognize_gaussian(r) == GaussRat(1, -2)
        (s,) = [a for a, _ in isolate_roots(cp(-3, 2))]
        assert recognize_gaussian(s) == GaussRat(mpq(3, 2))
        # i is the only Gaussian-rational cube root of -i
        found = [recognize_gaussian(a, 10**6) for a, _ in isolate_roots(cp(I, 0, 0, 1))]
        assert sorted(found, key=lambda v: v is None) == [I, None, None]

    def test_certified_zero(self):
        p = cp(I, 0, 0, 1)
        a = isolate_roots(p)[0][0]
        assert certified_zero(p, a)
        assert not certified_zero(cp(-1, 1), a)
        assert certified_zero(cp(0, 0, 1) - cp(0, 1) * cp(0, 1), a)

    @given(cpolys(4))
    def test_isolated_roots_are_certified(self, p):
        if p.degree < 1:
            return
        total = 0
        for a, mult in isolate_roots(p):
            assert certified_zero(p, a)
            r = recognize_gaussian(a)
            if r is not None:
                assert p(r) == ZERO
            total += mult
        assert total == p.degree

    def test_isolation_is_deterministic(self):
        p = cp(3, -1, GaussRat(2, 1), 0, 1)
        first = [(a.box, m) for a, m in isolate_roots(p)]
        assert first == [(a.box, m) for a, m in isolate_roots(p)]
