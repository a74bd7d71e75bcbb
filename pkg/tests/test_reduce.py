import pytest
from gmpy2 import mpq
from hypothesis import assume, given
from hypothesis import strategies as st

from symmetra import BiPoly, DomainError, GaussRat, InvalidInputError, chain, laplacian, reduce_to_harmonic
from symmetra.harmonic import is_harmonic
from symmetra.reduce import (
    ConicFallback,
    HarmonicHighDeg,
    LineTimesCircle,
    anti_laplacian_linear,
    anti_laplacian_radial,
    detect_concentric_circles,
    detect_parallel_lines,
    translate_poly,
)
from symmetra.verify import verify_map

from conftest import CUBIC, QUINTIC, STIRRUP_1, X, Y, bipolys, gauss_rats, planted_curves

R2 = X**2 + Y**2
STIRRUP_HYPERBOLA = X**2 / 10 - 13 * X / 20 + mpq(1, 5) - Y**2 / 10


class TestChain:
    def test_quintic(self):
        ch = chain(QUINTIC)
        assert ch.stages == (QUINTIC, X**3 - 3 * X * Y**2 + 1)
        assert ch.ell == 1 and ch.terminal_constant == 0

    def test_stirrup(self):
        ch = chain(STIRRUP_1)
        assert ch.ell == 2
        assert ch.stages[1] == X**3 / 6 + X**2 / 10 - 13 * X / 20 + mpq(1, 5) - Y**2 / 10
        assert ch.stages[2] == X

    def test_circle(self):
        ch = chain(R2)
        assert ch.stages == (R2,) and ch.ell == 0 and ch.terminal_constant == 4

    def test_constant_rejected(self):
        with pytest.raises(InvalidInputError):
            chain(BiPoly.const(2))

    @given(bipolys(max_degree=9, max_terms=12))
    def test_chain_invariants(self, f):
        ch = chain(f)
        assert ch.ell <= -(-f.degree // 2)
        assert ch.top.degree >= 1
        assert laplacian(ch.top).degree <= 0
        assert laplacian(ch.top) == BiPoly.const(ch.terminal_constant)
        for a, b in zip(ch.stages, ch.stages[1:]):
            assert laplacian(a) == b


class TestDetectors:
    def test_parallel(self):
        assert detect_parallel_lines(X**2 - 1) == (0, 1)
        assert detect_parallel_lines((X + Y) * (X + Y - 1)) == (1, -1)
        assert detect_parallel_lines(X * Y) is None

    def test_concentric(self):
        f = (R2 - 1) * (R2 - 4)
        assert detect_concentric_circles(f) == GaussRat(0)
        assert detect_concentric_circles(translate_poly(f, GaussRat(1, 2))) == GaussRat(1, 2)
        assert detect_concentric_circles(X**2 + 2 * Y**2 - 1) is None
        assert detect_concentric_circles(X**3 + Y**2) is None

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.integers(-3, 3), st.integers(-3, 3))
    def test_parallel_property(self, roots, a, b):
        assume(a or b)
        u = a * X + b * Y
        f = BiPoly.const(1)
        for r in roots:
            f = f * (u - r)
        d = detect_parallel_lines(f)
        assert d is not None and d[0] * a + d[1] * b == 0

    @given(st.lists(st.integers(1, 9), min_size=1, max_size=3), gauss_rats(4, 3))
    def test_concentric_property(self, radii, c):
        f = BiPoly.const(1)
        for r in radii:
            f = f * (R2 - r)
        assert detect_concentric_circles(translate_poly(f, c)) == c


class TestAntiLaplacian:
    def test_linear_cube(self):
        assert anti_laplacian_linear(X, X) == X**3 / 6

    def test_linear_constant(self):
        assert anti_laplacian_linear(BiPoly.const(1), X) == X**2 / 2

    def test_stirrup_hyperbola(self):
        f_hat = laplacian(STIRRUP_1)
        assert f_hat - anti_laplacian_linear(X, X) == STIRRUP_HYPERBOLA

    def test_linear_general_xi(self):
        xi = 2 * X - Y + 3
        p = xi**2 - 5
        q = anti_laplacian_linear(p, xi)
        assert laplacian(q) == p

    def test_linear_domain_error(self):
        with pytest.raises(DomainError):
            anti_laplacian_linear(X * Y, X)

    def test_radial(self):
        assert anti_laplacian_radial(R2, 0) == R2**2 / 16
        assert anti_laplacian_radial(BiPoly.const(1), 0) == R2 / 4
        assert anti_laplacian_radial(R2**2, 0) == R2**3 / 36

    def test_radial_domain_error(self):
        with pytest.raises(DomainError):
            anti_laplacian_radial(X**2, 0)

    @given(st.lists(gauss_rats(), min_size=1, max_size=4), gauss_rats(3, 2))
    def test_radial_property(self, coeffs, c):
        r2 = translate_poly(R2, c)
        p = BiPoly()
        for k, e in enumerate(coeffs):
            p = p + r2**k * e.re
        q = anti_laplacian_radial(p, c)
        assert laplacian(q) == p
        if not p.is_zero():
            assert q(c.re, c.im) == 0

    @given(st.lists(gauss_rats(), min_size=1, max_size=4), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
    def test_linear_property(self, coeffs, a, b, c):
        assume(a or b)
        xi = BiPoly.linear(a, b, c)
        p = BiPoly()
        for k, e in enumerate(coeffs):
            p = p + xi**k * e.re
        assert laplacian(anti_laplacian_linear(p, xi)) == p


class TestReduce:
    def test_quintic(self):
        out = reduce_to_harmonic(QUINTIC)
        assert isinstance(out, HarmonicHighDeg)
        assert out.h == X**3 - 3 * X * Y**2 + 1

    def test_cubic(self):
        out = reduce_to_harmonic(CUBIC)
        assert isinstance(out, ConicFallback)
        # h = -y + 1 times xi = 2x
        assert out.q.normalized() == ((-Y + 1) * X).normalized()

    def test_stirrup(self):
        out = reduce_to_harmonic(STIRRUP_1)
        assert isinstance(out, HarmonicHighDeg)
        assert out.h == STIRRUP_HYPERBOLA

    def test_line_times_circle(self):
        # chain ends in the circle 16 r^2; removing r^4 leaves the line x
        out = reduce_to_harmonic(R2**2 + X)
        assert isinstance(out, LineTimesCircle)
        assert out.line == X and out.circle == 16 * R2

    def test_line_pair_route(self):
        out = reduce_to_harmonic((X**2 - 1) * Y + X**3)
        assert isinstance(out, (HarmonicHighDeg, ConicFallback))

    def test_detectors_gate(self):
        with pytest.raises(DomainError, match="parallel"):
            reduce_to_harmonic(X**2 - 1)
        with pytest.raises(DomainError, match="concentric"):
            reduce_to_harmonic((R2 - 1) * (R2 - 4))

    @given(planted_curves(max_degree=8))
    def test_symmetries_survive_reduction(self, planted):
        f, group = planted
        assume(f.degree >= 3)
        assume(detect_parallel_lines(f) is None and detect_concentric_circles(f) is None)
        out = reduce_to_harmonic(f)
        target = out.h if isinstance(out, HarmonicHighDeg) else out.q if isinstance(out, ConicFallback) else out.product
        if isinstance(out, HarmonicHighDeg):
            assert is_harmonic(out.h) and out.h.degree >= 2
        for g in group:
            assert verify_map(target, target, g) in (1, -1)

    @given(planted_curves(max_degree=8))
    def test_symmetries_survive_each_stage(self, planted):
        f, group = planted
        assume(f.degree >= 1)
        for stage in chain(f).stages:
            for g in group:
                assert verify_map(stage, stage, g) == 1
