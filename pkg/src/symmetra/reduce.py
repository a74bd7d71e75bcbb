"""Laplacian chains and reduction of a curve to a harmonic polynomial or a conic.

Every symmetry of the input is a symmetry of the produced polynomial(s), so the
finite candidate sets computed downstream contain the true answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from .bipoly import BiPoly, MapKind, PlaneMap, ZPoly, compose, from_complex, laplacian, to_complex
from .conic import ConicClass, LineKind, classify, midline
from .errors import DomainError, InvalidInputError
from .harmonic import associated_g, rotation_center
from .numeric import ONE, ZERO, CPoly, GaussRat, Rat


@dataclass(frozen=True)
class LaplacianChain:
    stages: tuple[BiPoly, ...]
    ell: int
    terminal_constant: Rat

    @property
    def top(self) -> BiPoly:
        return self.stages[self.ell]


def chain(f: BiPoly) -> LaplacianChain:
    if f.degree < 1:
        raise InvalidInputError("the Laplacian chain needs a nonconstant polynomial")
    stages = [f]
    while True:
        nxt = laplacian(stages[-1])
        if nxt.degree <= 0:
            return LaplacianChain(tuple(stages), len(stages) - 1, nxt.constant_value())
        stages.append(nxt)


# ---------------------------------------------------------------------------
# degenerate families


def _primitive_int_vector(a: Rat, b: Rat) -> tuple[int, int]:
    den = int(a.denominator) * int(b.denominator) // gcd(int(a.denominator), int(b.denominator))
    u, v = int(a * den), int(b * den)
    g = gcd(u, v)
    u, v = u // g, v // g
    if u < 0 or (u == 0 and v < 0):
        u, v = -u, -v
    return u, v


def detect_parallel_lines(f: BiPoly) -> Optional[tuple[int, int]]:
    """Direction u with u . grad f == 0 identically, if any."""
    fx, fy = f.diff_x(), f.diff_y()
    rows = [(fx.coeff(*e), fy.coeff(*e)) for e in set(fx.terms) | set(fy.terms)]
    if not rows:
        return None
    a, b = next(r for r in rows if r[0] or r[1])
    u1, u2 = b, -a
    if any(r[0] * u1 + r[1] * u2 for r in rows):
        return None
    return _primitive_int_vector(u1, u2)


def detect_concentric_circles(f: BiPoly) -> Optional[GaussRat]:
    """Center c such that f is a polynomial in |z - c|^2, if any."""
    n = f.degree
    if n < 2 or n % 2:
        return None
    T = n // 2
    F = to_complex(f)
    if any(j + k == n and (j, k) != (T, T) for (j, k) in F.terms):
        return None
    cbar = -F.coeff(T, T - 1) / (F.coeff(T, T) * T)
    c = cbar.conj()
    if F.translate(c).is_radial():
        return c
    return None


# ---------------------------------------------------------------------------
# anti-Laplacians


def _univariate_in(p: BiPoly, xi: BiPoly) -> Optional[CPoly]:
    """pi with p == pi(xi) for a linear form xi, or None."""
    a, b, c = xi.coeff(1, 0), xi.coeff(0, 1), xi.coeff(0, 0)
    if not a and not b:
        raise InvalidInputError("xi must be a nonconstant linear form")
    if (p.diff_x() * b - p.diff_y() * a).terms:
        return None
    if a:
        restricted = CPoly([p.coeff(i, 0) for i in range(p.degree_in(0) + 1)])
        pi = restricted.compose(CPoly([-c / a, ONE / a]))
    else:
        restricted = CPoly([p.coeff(0, j) for j in range(p.degree_in(1) + 1)])
        pi = restricted.compose(CPoly([-c / b, ONE / b]))
    if _apply_univariate(pi, xi) != p:
        return None
    return pi


def _apply_univariate(pi: CPoly, xi: BiPoly) -> BiPoly:
    out = BiPoly()
    for c in reversed(pi.coeffs):
        out = out * xi + c.re
    return out


def is_polynomial_in(p: BiPoly, xi: BiPoly) -> bool:
    return _univariate_in(p, xi) is not None


def anti_laplacian_linear(p: BiPoly, xi: BiPoly) -> BiPoly:
    """gamma(xi) with laplacian = p and gamma(0) = gamma'(0) = 0."""
    pi = _univariate_in(p, xi)
    if pi is None:
        raise DomainError(f"{p} is not a polynomial in {xi}")
    a, b = xi.coeff(1, 0), xi.coeff(0, 1)
    scale = a * a + b * b
    gamma = CPoly([ZERO, ZERO] + [c / ((k + 1) * (k + 2) * scale) for k, c in enumerate(pi.coeffs)])
    return _apply_univariate(gamma, xi)


def radial_coefficients(p: BiPoly, center: GaussRat) -> Optional[list[Rat]]:
    """e_t with p = sum e_t |z - center|^(2t), or None."""
    F = to_complex(p).translate(center)
    if not F.is_radial():
        return None
    top = max((j for j, _ in F.terms), default=-1)
    return [F.coeff(t, t).re for t in range(top + 1)]


def anti_laplacian_radial(p: BiPoly, center) -> BiPoly:
    center = GaussRat.of(center)
    e = radial_coefficients(p, center)
    if e is None:
        raise DomainError(f"{p} is not radial about {center}")
    terms = {(t + 1, t + 1): GaussRat(c / (4 * (t + 1) ** 2), 0) for t, c in enumerate(e) if c}
    return from_complex(ZPoly(terms).translate(-center))


# ---------------------------------------------------------------------------
# reduction outcomes


@dataclass(frozen=True)
class HarmonicHighDeg:
    h: BiPoly
    stage: int  # chain index k with h∘phi = lambda_k * h2 for similarities of the inputs


@dataclass(frozen=True)
class ConicFallback:
    q: BiPoly
    stage: int


@dataclass(frozen=True)
class LineTimesCircle:
    line: BiPoly
    circle: BiPoly
    stage: int

    @property
    def product(self) -> BiPoly:
        return self.line * self.circle


ReductionOutcome = Union[HarmonicHighDeg, ConicFallback, LineTimesCircle]


def harmonic_correction(top: BiPoly, c: Rat) -> BiPoly:
    """top - (c/4)|z - p|^2 with p the rotation center of the harmonic part.

    When the last nonconstant stage has degree >= 3 but a nonzero constant
    Laplacian, this removes the constant without disturbing any symmetry.
    """
    if not c:
        return top
    base = top - BiPoly({(2, 0): c / 4, (0, 2): c / 4})
    p = rotation_center(associated_g(base))
    shift = to_complex(BiPoly({(2, 0): 1, (0, 2): 1})).translate(-p)
    return top - from_complex(shift) * (c / 4)


def _linear_route(stages, ell: int, xi: BiPoly, pair_line: BiPoly) -> ReductionOutcome:
    k = next(k for k in range(ell + 1) if is_polynomial_in(stages[k], xi))
    if k == 0:
        raise DomainError("input is a union of parallel lines (parallel-lines detector)")
    f_hat = stages[k - 1]
    h = f_hat - anti_laplacian_linear(stages[k], xi)
    if h.degree >= 2:
        return HarmonicHighDeg(h, k - 1)
    return ConicFallback(h * pair_line, k - 1)


def _radial_route(stages, ell: int, circle: BiPoly, center: GaussRat) -> ReductionOutcome:
    k = next(k for k in range(ell + 1) if radial_coefficients(stages[k], center) is not None)
    if k == 0:
        raise DomainError("input is a union of concentric circles (concentric-circles detector)")
    f_hat = stages[k - 1]
    h = f_hat - anti_laplacian_radial(stages[k], center)
    if h.degree >= 2:
        return HarmonicHighDeg(h, k - 1)
    return LineTimesCircle(h, circle, k - 1)


def reduce_to_harmonic(f: BiPoly, ch: Optional[LaplacianChain] = None) -> ReductionOutcome:
    """Harmonic polynomial or conic whose symmetry set contains that of f."""
    direction = detect_parallel_lines(f)
    if direction is not None:
        raise DomainError(f"input is a union of parallel lines with direction {direction} (parallel-lines detector)")
    center = detect_concentric_circles(f)
    if center is not None:
        raise DomainError(f"input is a union of concentric circles about {center} (concentric-circles detector)")
    ch = ch or chain(f)
    top, ell = ch.top, ch.ell
    deg = top.degree
    if deg >= 3:
        return HarmonicHighDeg(harmonic_correction(top, ch.terminal_constant), ell)
    if deg == 1:
        return _linear_route(ch.stages, ell, top, top)
    data = classify(top)
    if data.cls is ConicClass.CIRCLE:
        return _radial_route(ch.stages, ell, top, data.center)
    if data.cls is ConicClass.LINE_PAIR and data.line_kind is not LineKind.INTERSECTING:
        mid = midline(top)
        return _linear_route(ch.stages, ell, mid, mid)
    return ConicFallback(top, ell)


def translate_poly(f: BiPoly, shift: GaussRat) -> BiPoly:
    """f(x - sx, y - sy): the curve moved by ``shift``."""
    return from_complex(compose(f, PlaneMap(MapKind.DIRECT, ONE, -GaussRat.of(shift))))


__all__ = [
    "ConicFallback",
    "HarmonicHighDeg",
    "LaplacianChain",
    "LineTimesCircle",
    "ReductionOutcome",
    "anti_laplacian_linear",
    "anti_laplacian_radial",
    "chain",
    "detect_concentric_circles",
    "detect_parallel_lines",
    "harmonic_correction",
    "is_polynomial_in",
    "radial_coefficients",
    "reduce_to_harmonic",
    "translate_poly",
]
