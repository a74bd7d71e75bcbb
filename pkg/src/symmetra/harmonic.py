"""Harmonic polynomials through their holomorphic derivative g(z) = h_x - i h_y."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import mpmath

from .algebraic import certified_zero, isolate_roots
from .bipoly import BiPoly, ZPoly, from_complex, laplacian, to_complex
from .errors import DomainError, InvalidInputError, PreconditionError
from .numeric import CPoly, GaussRat, I


def associated_g(h: BiPoly) -> CPoly:
    """The polynomial g(z) = h_x - i*h_y of a harmonic h.

    The zbar-dependence of the substituted expression is checked to vanish.
    """
    if h.is_constant():
        raise InvalidInputError("associated polynomial of a constant")
    G = to_complex(h.diff_x()) + to_complex(h.diff_y()) * (-I)
    residual = {k: c for k, c in G.terms.items() if k[1] > 0}
    if residual:
        worst = max(residual, key=lambda k: (k[0] + k[1], k))
        raise DomainError(
            f"polynomial is not harmonic: laplacian = {laplacian(h)}; "
            f"zbar residual has {len(residual)} terms, e.g. ({residual[worst]})*z^{worst[0]}*zb^{worst[1]}"
        )
    return G.holomorphic_part()


def primitive_G(g: CPoly) -> CPoly:
    """The primitive of g vanishing at 0."""
    if g.is_zero():
        raise InvalidInputError("primitive of the zero polynomial")
    return g.integral()


def real_part_form(G: CPoly) -> ZPoly:
    """Complex form of Re G(z) = (G(z) + conj(G)(zbar)) / 2."""
    terms: dict = {}
    for j, c in enumerate(G.coeffs):
        if not c:
            continue
        half = c / 2
        if j == 0:
            terms[(0, 0)] = GaussRat(half.re, 0)
        else:
            terms[(j, 0)] = half
            terms[(0, j)] = half.conj()
    return ZPoly(terms)


def harmonic_from_g(g: CPoly) -> BiPoly:
    return from_complex(real_part_form(primitive_G(g)))


def rotation_center(g: CPoly) -> GaussRat:
    """Mean of the roots of g: the only candidate rotation center."""
    d = g.degree
    if d < 1:
        raise InvalidInputError("rotation center needs a nonconstant g")
    return -g.coeff(d - 1) / (g.coeff(d) * d)


class AxisCase(enum.Enum):
    GENERAL = "general"
    PURE_POWER = "pure_power"


@dataclass(frozen=True)
class AxisCandidates:
    """Exact description of the admissible reflection units w = e^{2i phi}.

    GENERAL: w**modulus_m * conj(base) == base, with
        base = (-1)**modulus_m * a_l / a_top. Both multipliers are allowed.
    PURE_POWER: g = base * z**(n-1) and w**modulus_m == lam * conj(base) / base.
    """

    case: AxisCase
    modulus_m: int
    base: GaussRat

    def unit_polynomial(self, lam: int = 1) -> CPoly:
        m = self.modulus_m
        if self.case is AxisCase.GENERAL:
            return CPoly.monomial(m, self.base.conj()) - CPoly.constant(self.base)
        return CPoly.monomial(m, self.base) - CPoly.constant(self.base.conj() * lam)

    def contains(self, w, lam: int = 1) -> bool:
        """Exact membership for a GaussRat w; AlgebraicNumber w via its defining polynomial."""
        p = self.unit_polynomial(lam)
        if isinstance(w, GaussRat):
            return not p(w)
        return certified_zero(p, w)

    def directions_approx(self, lam: int = 1, digits: int = 20) -> list:
        """Axis angles in [0, pi), numerically, for display only."""
        out = []
        with mpmath.workdps(digits + 10):
            for root, _ in isolate_roots(self.unit_polynomial(lam)):
                ang = mpmath.arg(root.approx(digits + 5)) / 2
                if ang < 0:
                    ang += mpmath.pi
                out.append(ang)
        return sorted(out)


def axis_candidates(g: CPoly) -> AxisCandidates:
    d = g.degree
    if d < 1:
        raise InvalidInputError("axis candidates need a nonconstant g")
    if g.coeff(d - 1):
        raise PreconditionError("g must be centered first (its second-highest coefficient is nonzero)")
    lowest = next(j for j, c in enumerate(g.coeffs) if c)
    if lowest == d:
        return AxisCandidates(AxisCase.PURE_POWER, d + 1, g.coeff(d))
    m = d - lowest
    base = g.coeff(lowest) / g.coeff(d)
    if m % 2:
        base = -base
    return AxisCandidates(AxisCase.GENERAL, m, base)


def is_harmonic(f: BiPoly) -> bool:
    return laplacian(f).is_zero()


__all__ = [
    "AxisCandidates",
    "AxisCase",
    "associated_g",
    "axis_candidates",
    "harmonic_from_g",
    "is_harmonic",
    "primitive_G",
    "real_part_form",
    "rotation_center",
]
