"""Shared polynomials, helpers and hypothesis strategies."""

from __future__ import annotations

import os

import pytest
from gmpy2 import mpq
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from symmetra import BiPoly, GaussRat, MapKind, PlaneMap
from symmetra.bipoly import compose_real

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

X, Y = BiPoly.x(), BiPoly.y()

_CRITERIA: dict[int, list[str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    if hasattr(rep, "wasxfail"):
        status = "xfail"
    else:
        status = rep.outcome
    _CRITERIA.setdefault(mark.args[0], []).append(status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        got = _CRITERIA[n]
        if all(s == "passed" for s in got):
            line = "PASS"
        elif "xfail" in got and all(s in ("passed", "xfail") for s in got):
            line = "FAIL (expected failure, see the xfail reason)"
        else:
            line = "FAIL"
        terminalreporter.write_line(f"acceptance criterion {n}: {line}  [{len(got)} test(s)]")


def substitute(f: BiPoly, u: BiPoly, v: BiPoly) -> BiPoly:
    """f(u(x, y), v(x, y))."""
    out = BiPoly()
    for (i, j), c in f.terms.items():
        out = out + u ** i * v ** j * c
    return out


SEXTIC = X**6 - 15 * X**4 * Y**2 - 2 * X**3 + 15 * X**2 * Y**4 + 6 * X * Y**2 - Y**6
QUINTIC = X**5 / 10 - X**3 * Y**2 / 2 + X**2 / 2 + 1
CUBIC = X**3 / 3 - Y + 1
STIRRUP_1 = -((Y**2 - 1) ** 2) / 120 + X**2 * (X - 1) * (X - 2) * (X + 5) / 120 - X**4 / 120
STIRRUP_2 = substitute(STIRRUP_1, Y, X)
SEXTIC_IMAGE = substitute(SEXTIC, -Y + 2, X + 1)


@pytest.fixture
def sextic():
    return SEXTIC


@pytest.fixture
def quintic():
    return QUINTIC


@pytest.fixture
def cubic():
    return CUBIC


@pytest.fixture
def stirrup():
    return STIRRUP_1, STIRRUP_2


def rationals(max_num: int = 9, max_den: int = 5):
    return st.builds(
        lambda n, d: mpq(n, d),
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def gauss_rats(max_num: int = 9, max_den: int = 5, nonzero: bool = False):
    s = st.builds(GaussRat, rationals(max_num, max_den), rationals(max_num, max_den))
    return s.filter(bool) if nonzero else s


@st.composite
def bipolys(draw, min_degree: int = 1, max_degree: int = 6, max_terms: int = 8):
    """Random polynomial of exact degree in [min_degree, max_degree]."""
    deg = draw(st.integers(min_degree, max_degree))
    monos = [(i, deg - i) for i in range(deg + 1)]
    top = draw(st.sampled_from(monos))
    terms = {top: draw(rationals().filter(bool))}
    lower = [(i, j) for d in range(deg + 1) for i in range(d + 1) for j in [d - i]]
    for key in draw(st.lists(st.sampled_from(lower), max_size=max_terms)):
        terms[key] = terms.get(key, mpq(0)) + draw(rationals())
    if not terms.get(top):
        terms[top] = mpq(1)
    return BiPoly(terms)


@st.composite
def plane_maps(draw, unit: bool = False):
    kind = draw(st.sampled_from([MapKind.DIRECT, MapKind.OPPOSITE]))
    if unit:
        # rational points on the unit circle from Pythagorean parametrization
        t = draw(rationals(7, 5))
        alpha = GaussRat((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))
        if draw(st.booleans()):
            alpha = -alpha
    else:
        alpha = draw(gauss_rats(4, 3, nonzero=True))
    beta = draw(gauss_rats(4, 3))
    return PlaneMap(kind, alpha, beta)


def real_image(f: BiPoly, m: PlaneMap) -> BiPoly:
    return compose_real(f, m)


def pythagorean_unit(t) -> GaussRat:
    """The rational point ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)) on the unit circle."""
    t = mpq(t)
    return GaussRat((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))


ROTATION_UNITS = {1: [GaussRat(1)], 2: [GaussRat(1), GaussRat(-1)], 4: [GaussRat(1), GaussRat(0, 1), GaussRat(-1), GaussRat(0, -1)]}


def planted_group(n: int, reflections: bool, w: GaussRat, center: GaussRat) -> list[PlaneMap]:
    """C_n or D_n (n in 1, 2, 4) about ``center``; reflection units are w times the n-th roots of unity."""
    maps = [PlaneMap(MapKind.DIRECT, r, center - r * center) for r in ROTATION_UNITS[n]]
    if reflections:
        for r in ROTATION_UNITS[n]:
            u = w * r
            maps.append(PlaneMap(MapKind.OPPOSITE, u, center - u * center.conj()))
    return maps


def orbit_sum(f0: BiPoly, group: list[PlaneMap]) -> BiPoly:
    out = BiPoly()
    for g in group:
        out = out + compose_real(f0, g)
    return out


@st.composite
def planted_curves(draw, min_degree: int = 4, max_degree: int = 12):
    """(f, group) with f invariant under every map in ``group``."""
    n = draw(st.sampled_from([1, 2, 4]))
    reflections = draw(st.booleans()) or n == 1
    w = pythagorean_unit(draw(st.sampled_from([0, mpq(1, 2), mpq(1, 3), mpq(2, 3), 2, 3, mpq(3, 4)])))
    center = draw(gauss_rats(3, 2))
    group = planted_group(n, reflections, w, center)
    f0 = draw(bipolys(min_degree, max_degree, max_terms=6))
    f = orbit_sum(f0, group)
    return f, group


def _mpc(z: GaussRat):
    import gmpy2

    return gmpy2.mpc(gmpy2.mpfr(z.re), gmpy2.mpfr(z.im))


def sampled_residual(f: BiPoly, m: PlaneMap, lam, points: int = 40, seed: int = 7, bits: int = 200, f2=None):
    """max |f(m(p)) - lam f2(p)| / scale over pseudo-random points, in MPFR at ``bits`` bits.

    An independent oracle: plain floating evaluation in real coordinates, never
    touching the exact composition code.
    """
    import random

    import gmpy2

    rng = random.Random(seed)
    f2 = f if f2 is None else f2
    if hasattr(lam, "lo"):  # RealInterval
        lam = (lam.lo + lam.hi) / 2
    with gmpy2.context(gmpy2.get_context(), precision=bits):
        if m.is_exact:
            alpha, beta = _mpc(m.alpha), _mpc(m.beta)
        else:
            a = m.alpha.refine(mpq(1, 1 << (bits + 20)))
            alpha = _mpc(a.center)
            beta = gmpy2.mpc(0)
            for c in reversed(m.beta_poly().coeffs):
                beta = beta * alpha + _mpc(c)
        lam_v = gmpy2.mpfr(mpq(lam))
        c1 = [(i, j, gmpy2.mpfr(c)) for (i, j), c in f.terms.items()]
        c2 = [(i, j, gmpy2.mpfr(c)) for (i, j), c in f2.terms.items()]
        deg = max(f.degree, f2.degree)

        def ev(coeffs, x, y):
            xp, yp = [gmpy2.mpfr(1)], [gmpy2.mpfr(1)]
            for _ in range(deg):
                xp.append(xp[-1] * x)
                yp.append(yp[-1] * y)
            val, size = gmpy2.mpfr(0), gmpy2.mpfr(0)
            for i, j, c in coeffs:
                t = c * xp[i] * yp[j]
                val += t
                size += abs(t)
            return val, size

        worst = gmpy2.mpfr(0)
        for _ in range(points):
            z = gmpy2.mpc(rng.uniform(-3, 3), rng.uniform(-3, 3))
            w = alpha * (z if m.is_direct else z.conjugate()) + beta
            v1, s1 = ev(c1, w.real, w.imag)
            v2, s2 = ev(c2, z.real, z.imag)
            worst = max(worst, abs(v1 - lam_v * v2) / (s1 + abs(lam_v) * s2 + 1))
        return float(worst) if worst > 1e-300 else 0.0
