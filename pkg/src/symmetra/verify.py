"""Exact check of f1∘m = λ·f2 for a plane map m."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath
from gmpy2 import mpq

from .algebraic import Ball
from .bipoly import BiPoly, PlaneMap, ZPoly, compose, to_complex
from .errors import InvalidInputError
from .numeric import GaussRat, Rat
from .quotient import AlgebraicContext, QElem, compose_algebraic

DEFAULT_PRECISION_BITS = 256
_precision = {"bits": DEFAULT_PRECISION_BITS}


def set_precision_bits(bits: int) -> None:
    """Starting precision of the interval filters used for algebraic maps."""
    if bits < 64:
        raise InvalidInputError("precision must be at least 64 bits")
    _precision["bits"] = int(bits)


def precision_bits() -> int:
    return _precision["bits"]


@dataclass(frozen=True)
class RealInterval:
    """A real number known to lie in [lo, hi]; used when no exact form is known."""

    lo: Rat
    hi: Rat

    @property
    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)

    def approx_str(self, digits: int = 30) -> str:
        with mpmath.workdps(digits + 5):
            mid = (self.lo + self.hi) / 2
            return mpmath.nstr(mpmath.mpf(int(mid.numerator)) / int(mid.denominator), digits)

    def __str__(self):
        return f"~{self.approx_str(12)}"


Value = Union[Rat, RealInterval]


def as_zpoly(f) -> ZPoly:
    return to_complex(f) if isinstance(f, BiPoly) else f


def _reference_key(F: ZPoly):
    return max(F.terms, key=lambda k: (k[0] + k[1], k))


def _sample_points():
    # fixed points with small height; cheap early rejection
    return [GaussRat(mpq(3, 7), mpq(-5, 11)), GaussRat(mpq(-13, 17), mpq(2, 3)), GaussRat(mpq(1, 19), mpq(23, 29))]


def verify_exact(F1: ZPoly, F2: ZPoly, m: PlaneMap) -> Optional[Rat]:
    """λ with F1∘m = λ F2 for Gaussian-rational parameters, else None."""
    if F1.degree != F2.degree or F2.is_zero():
        return None
    ref = _reference_key(F2)
    # point evaluation is much cheaper than composing at high degree
    p, q = _sample_points()[:2]
    mp, mq = m.apply(p), m.apply(q)
    if F1(mp, mp.conj()) * F2(q, q.conj()) != F1(mq, mq.conj()) * F2(p, p.conj()):
        return None
    C = compose(F1, m)
    lam = C.coeff(*ref) / F2.coeff(*ref)
    if not lam or not lam.is_real():
        return None
    if C.terms.keys() != F2.terms.keys():
        return None
    for k, c in F2.terms.items():
        if C.terms[k] != c * lam:
            return None
    return lam.re


def _recognize_real(ctx: AlgebraicContext, e: QElem) -> Value:
    exact = ctx.exact_value(e)
    if exact is not None and exact.is_real():
        return exact.re
    bits = precision_bits()
    at = ctx.alpha
    if at.radius > mpq(1, 1 << bits):
        at = at.refine(mpq(1, 1 << bits))
    b = ctx.ball(e, bits, at)
    f = Fraction(int(b.c.re.numerator), int(b.c.re.denominator)).limit_denominator(10 ** 12)
    guess = mpq(f.numerator, f.denominator)
    if ctx.is_zero(e - guess):
        return guess
    return RealInterval(b.c.re - b.r, b.c.re + b.r)


def _eval_ball(F: ZPoly, z: Ball) -> Ball:
    deg = F.degree
    zp, zbp = [Ball(1, 0, z.bits)], [Ball(1, 0, z.bits)]
    zb = z.conj()
    for _ in range(deg):
        zp.append(zp[-1] * z)
        zbp.append(zbp[-1] * zb)
    total = Ball(0, 0, z.bits)
    for (j, k), c in F.terms.items():
        total = total + zp[j] * zbp[k] * c
    return total


def _probe_rejects(F1: ZPoly, F2: ZPoly, m: PlaneMap, bits: int) -> bool:
    """True when a two-point evaluation proves F1∘m is not proportional to F2."""
    p, q = _sample_points()[:2]
    lhs = _eval_ball(F1, m.apply_ball(p, bits)) * F2(q, q.conj())
    rhs = _eval_ball(F1, m.apply_ball(q, bits)) * F2(p, p.conj())
    return (lhs - rhs).excludes_zero()


def verify_algebraic(F1: ZPoly, F2: ZPoly, m: PlaneMap, expected_lambdas=None) -> Optional[Value]:
    """Same as :func:`verify_exact` for an algebraic alpha, decided in the quotient ring.

    ``expected_lambdas``, when given, restricts λ to that finite set of rationals.
    """
    if F1.degree != F2.degree or F2.is_zero():
        return None
    if _probe_rejects(F1, F2, m, precision_bits()):
        return None
    ctx, C = compose_algebraic(F1, m)
    ref = _reference_key(F2)
    c_ref = F2.coeff(*ref)
    lam_num = C.get(ref, ctx.zero)
    keys = set(C) | set(F2.terms)
    diffs = []
    for k in sorted(keys):
        # C[k]/c_ref_value == F2[k]/c_ref  <=>  C[k]*c_ref - lam_num*F2[k] == 0
        diffs.append(C.get(k, ctx.zero) * c_ref - lam_num * F2.coeff(*k))
    # numerical rejection first
    for e in diffs:
        if ctx.ball(e, precision_bits()).excludes_zero():
            return None
    if lam_num.is_structurally_zero() or ctx.is_zero(lam_num):
        return None
    lam = lam_num * c_ref.inverse()
    if expected_lambdas is not None:
        hit = None
        for cand in expected_lambdas:
            if ctx.is_zero(lam - cand):
                hit = cand
                break
        if hit is None:
            return None
    for e in diffs:
        if not ctx.is_zero(e):
            return None
    if expected_lambdas is not None:
        return hit
    return _recognize_real(ctx, lam)


def verify_map(f1, f2, m: PlaneMap, expected_lambdas=None) -> Optional[Value]:
    F1, F2 = as_zpoly(f1), as_zpoly(f2)
    if m.is_exact:
        lam = verify_exact(F1, F2, m)
        if lam is None or expected_lambdas is None or lam in expected_lambdas:
            return lam
        return None
    return verify_algebraic(F1, F2, m, expected_lambdas)


def map_mu2(m: PlaneMap) -> Value:
    """|alpha|**2, exact when possible."""
    if m.is_exact:
        return m.alpha.norm()
    ctx = AlgebraicContext(m.alpha)
    e = ctx.a() * ctx.b()
    return _recognize_real(ctx, e)


def map_beta_value(m: PlaneMap):
    """beta as a GaussRat when exact, otherwise a Ball."""
    if isinstance(m.beta, GaussRat):
        return m.beta
    ctx = AlgebraicContext(m.alpha)
    e = ctx.from_cpoly(m.beta)
    exact = ctx.exact_value(e)
    return exact if exact is not None else ctx.ball(e, precision_bits())


def is_unit(m: PlaneMap) -> bool:
    mu2 = map_mu2(m)
    return not isinstance(mu2, RealInterval) and mu2 == 1
