"""Algebraic numbers given by a defining polynomial and a certified disc.

Floating-point root finding (mpmath) only proposes approximations. Every disc
handed out is certified with exact rational arithmetic: the Weierstrass
corrections turn the approximations into a matrix whose characteristic
polynomial is the input, and Gerschgorin's theorem on that matrix bounds the
roots. Refinement of a single root uses Newton steps certified by the
``deg * |p/p'|`` inclusion radius.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from gmpy2 import mpq

from .errors import InvalidInputError
from .numeric import (
    ONE,
    ZERO,
    CPoly,
    GaussRat,
    Rat,
    gauss_poly_gcd,
    rat,
    sqrt_upper,
    squarefree_decomposition,
)

MAX_ISOLATION_ROUNDS = 12


def _dyadic(q: Rat, bits: int) -> Rat:
    """Round ``q`` down to a multiple of 2**-bits."""
    num, den = int(q.numerator), int(q.denominator)
    return mpq((num << bits) // den, 1 << bits)


def dyadic_round(c: GaussRat, bits: int) -> tuple[GaussRat, Rat]:
    """Round both components to 2**-bits; returns (value, modulus error bound)."""
    if c.re.denominator == 1 and c.im.denominator == 1:
        return c, mpq(0)
    return GaussRat._make(_dyadic(c.re, bits), _dyadic(c.im, bits)), mpq(2, 1 << bits)


def _mpf_to_rat(x) -> Rat:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    m = -int(man) if sign else int(man)
    return mpq(m << exp, 1) if exp >= 0 else mpq(m, 1 << (-exp))


def mpc_to_gauss(z) -> GaussRat:
    z = mpmath.mpc(z)
    return GaussRat._make(_mpf_to_rat(z.real), _mpf_to_rat(z.imag))


class Ball:
    """Complex disc (exact dyadic center, rational radius) for rigorous evaluation.

    Products are rounded to ``bits`` fractional bits; the rounding error is
    folded into the radius so every operation returns an enclosure.
    """

    __slots__ = ("c", "r", "bits")

    def __init__(self, c, r=0, bits: int = 256):
        c = GaussRat.of(c)
        c, err = dyadic_round(c, bits)
        self.c = c
        self.r = mpq(r) + err
        self.bits = bits

    @staticmethod
    def _make(c, r, bits):
        b = object.__new__(Ball)
        b.c, b.r, b.bits = c, r, bits
        return b

    def _coerce(self, other) -> "Ball":
        if isinstance(other, Ball):
            return other
        return Ball(other, 0, self.bits)

    def __add__(self, other):
        o = self._coerce(other)
        return Ball._make(self.c + o.c, self.r + o.r, max(self.bits, o.bits))

    __radd__ = __add__

    def __neg__(self):
        return Ball._make(-self.c, self.r, self.bits)

    def __sub__(self, other):
        o = self._coerce(other)
        return Ball._make(self.c - o.c, self.r + o.r, max(self.bits, o.bits))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        bits = max(self.bits, o.bits)
        c, err = dyadic_round(self.c * o.c, bits)
        r = self.c.abs_upper() * o.r + o.c.abs_upper() * self.r + self.r * o.r + err
        return Ball._make(c, r, bits)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Ball(ONE, 0, self.bits)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self):
        return Ball._make(self.c.conj(), self.r, self.bits)

    def excludes_zero(self) -> bool:
        return self.c.norm() > self.r * self.r

    def abs_upper(self) -> Rat:
        return self.c.abs_upper() + self.r

    def to_mpc(self):
        return self.c.to_mpc()

    def __repr__(self):
        return f"Ball({self.c}, r<={float(self.r):.3g})"


def _count_bits_needed(radius: Rat) -> int:
    if radius <= 0:
        return 64
    return max(64, int(radius.denominator).bit_length() - int(radius.numerator).bit_length() + 16)


@dataclass(frozen=True)
class AlgebraicNumber:
    """A root of ``poly`` (monic, square-free over Q(i)).

    The closed disc ``|z - center| <= radius`` contains exactly one root of
    ``poly``; so does the axis-aligned square circumscribing it.
    """

    poly: CPoly
    center: GaussRat
    radius: Rat

    @property
    def box(self):
        c, r = self.center, self.radius
        return ((c.re - r, c.re + r), (c.im - r, c.im + r))

    @property
    def degree(self) -> int:
        return self.poly.degree

    def approx(self, digits: int = 30):
        """mpmath complex approximation good to about ``digits`` decimals."""
        target = mpq(1, 10 ** digits)
        a = self.refine(target) if self.radius > target else self
        with mpmath.workdps(digits + 10):
            return a.center.to_mpc()

    def ball(self, bits: int = 256) -> Ball:
        return Ball(self.center, self.radius, bits)

    def conjugate(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self.poly.conj(), self.center.conj(), self.radius)

    def contains(self, z: GaussRat) -> bool:
        return (z - self.center).norm() <= self.radius * self.radius

    def refine(self, target_radius) -> "AlgebraicNumber":
        """Shrink the disc until ``radius <= target_radius``."""
        target = rat(target_radius)
        current = self
        guard = 0
        while current.radius > target:
            guard += 1
            if guard > 40:
                raise InvalidInputError("root refinement failed to converge")
            bits = max(_count_bits_needed(target), 2 * _count_bits_needed(current.radius))
            nxt = current._newton_step(bits)
            if nxt is None:
                nxt = current._reisolate(bits)
            current = nxt
        return current

    def _newton_step(self, bits: int):
        p = self.poly
        d = p.degree
        if d == 1:
            root = -p.coeff(0) / p.coeff(1)
            return AlgebraicNumber(p, root, mpq(0))
        dp = p.derivative()
        with mpmath.workprec(bits + 32):
            cs = [c.to_mpc() for c in p.coeffs]
            dcs = [c.to_mpc() for c in dp.coeffs]
            z = self.center.to_mpc()
            for _ in range(int(bits).bit_length() + 8):
                pv = mpmath.polyval(cs[::-1], z)
                dv = mpmath.polyval(dcs[::-1], z)
                if dv == 0:
                    return None
                z = z - pv / dv
            zq = mpc_to_gauss(z)
        zq, _ = dyadic_round(zq, bits + 8)
        pv, dv = p(zq), dp(zq)
        if not dv:
            return None
        if not pv:
            return AlgebraicNumber(p, zq, mpq(0))
        rad = d * sqrt_upper(pv.norm() / dv.norm())
        dist = sqrt_upper((zq - self.center).norm())
        if dist + rad > self.radius:
            return None
        return AlgebraicNumber(p, zq, rad)

    def _reisolate(self, bits: int) -> "AlgebraicNumber":
        roots = _isolate_squarefree(self.poly, mpq(1, 1 << (bits // 2)), start_bits=bits)
        for r in roots:
            dist = sqrt_upper((r.center - self.center).norm())
            if dist + r.radius <= self.radius:
                return r
        raise InvalidInputError("lost track of an isolated root during refinement")

    def __str__(self):
        z = self.approx(12)
        return f"root of [{self.poly}] near {mpmath.nstr(z, 12)}"


def _weierstrass_discs(p: CPoly, approx: list[GaussRat], bits: int):
    """Certified (center, radius) discs: Gerschgorin on the Weierstrass matrix."""
    n = p.degree
    out = []
    for k, zk in enumerate(approx):
        denom = ONE
        for j, zj in enumerate(approx):
            if j != k:
                denom = denom * (zk - zj)
        if not denom:
            return None
        w = p(zk) / denom
        center, err = dyadic_round(zk - w, bits)
        radius = (n - 1) * sqrt_upper(w.norm()) + err
        out.append((center, radius))
    return out


def _boxes_disjoint(discs) -> bool:
    boxes = [((c.re - r, c.re + r), (c.im - r, c.im + r)) for c, r in discs]
    for a in range(len(boxes)):
        (ax0, ax1), (ay0, ay1) = boxes[a]
        for b in range(a + 1, len(boxes)):
            (bx0, bx1), (by0, by1) = boxes[b]
            if ax0 <= bx1 and bx0 <= ax1 and ay0 <= by1 and by0 <= ay1:
                return False
    return True


def _isolate_squarefree(p: CPoly, target: Rat, start_bits: int = 96) -> list[AlgebraicNumber]:
    p = p.monic()
    n = p.degree
    if n <= 0:
        return []
    if n == 1:
        return [AlgebraicNumber(p, -p.coeff(0), mpq(0))]
    bits = start_bits
    for _ in range(MAX_ISOLATION_ROUNDS):
        with mpmath.workprec(bits):
            cs = [c.to_mpc() for c in reversed(p.coeffs)]
            try:
                roots = mpmath.polyroots(cs, maxsteps=50 + 4 * n, extraprec=bits)
            except mpmath.libmp.NoConvergence:
                bits *= 2
                continue
            approx = [dyadic_round(mpc_to_gauss(z), bits - 4)[0] for z in roots]
        discs = _weierstrass_discs(p, approx, bits)
        if discs and _boxes_disjoint(discs) and all(2 * r <= target for _, r in discs):
            found = [AlgebraicNumber(p, c, r) for c, r in discs]
            found.sort(key=lambda a: (a.center.re, a.center.im))
            return found
        bits *= 2
    raise InvalidInputError(f"root isolation did not converge for {p}")


def isolate_roots(p: CPoly, target_precision=mpq(1, 1 << 40)) -> list[tuple[AlgebraicNumber, int]]:
    """Isolate every distinct root of ``p``; returns (root, multiplicity) pairs.

    Each root is defined by the monic square-free factor of ``p`` collecting
    the roots of its multiplicity. Boxes are pairwise disjoint and at most
    ``target_precision`` wide.
    """
    if p.is_zero():
        raise InvalidInputError("cannot isolate the roots of the zero polynomial")
    target = rat(target_precision)
    out = []
    for factor, mult in squarefree_decomposition(p):
        for root in _isolate_squarefree(factor, target):
            out.append((root, mult))
    # boxes from different square-free factors must be disjoint too
    while not _boxes_disjoint([(a.center, a.radius) for a, _ in out]):
        target /= 4
        out = [(a.refine(min(a.radius / 4, target)), m) for a, m in out]
    out.sort(key=lambda t: (t[0].center.re, t[0].center.im))
    return out


def _reconstruct(x: Rat, height: int) -> Rat:
    f = Fraction(int(x.numerator), int(x.denominator)).limit_denominator(height)
    return mpq(f.numerator, f.denominator)


def recognize_gaussian(a: AlgebraicNumber, height_bound: int = 10 ** 6):
    """Return the Gaussian rational equal to ``a`` if its components have
    numerators and denominators bounded by ``height_bound``, else None."""
    p = a.poly
    if p.degree == 1:
        root = -p.coeff(0) / p.coeff(1)
        ok = all(abs(q.numerator) <= height_bound and q.denominator <= height_bound
                 for q in (root.re, root.im))
        return root if ok else None
    # two distinct candidates are at least 1/H^2 apart
    target = mpq(1, 4 * height_bound * height_bound)
    current = a
    while True:
        cand = GaussRat._make(_reconstruct(current.center.re, height_bound),
                              _reconstruct(current.center.im, height_bound))
        if all(abs(q.numerator) <= height_bound for q in (cand.re, cand.im)):
            if current.contains(cand) and not p(cand):
                return cand
        if current.radius <= target:
            return None
        current = current.refine(max(current.radius / (1 << 32), target))


def _evaluates_nonzero(q: CPoly, a: AlgebraicNumber, bits: int) -> bool:
    return q(a.ball(bits)).excludes_zero()


def certified_zero(expr_poly: CPoly, at: AlgebraicNumber) -> bool:
    """Decide exactly whether ``expr_poly(at) == 0``.

    ``expr mod P`` settles the irreducible-looking case; otherwise the
    defining polynomial splits as gcd * cofactor with disjoint root sets, and
    ball evaluation at a refined disc shows which factor does not vanish.
    """
    if expr_poly.is_zero():
        return True
    P = at.poly
    if not (expr_poly % P):
        return True
    g = gauss_poly_gcd(expr_poly, P)
    if g.degree == 0:
        return False
    cofactor = P.exact_div(g)
    current = at
    bits = 128
    for _ in range(60):
        if _evaluates_nonzero(g, current, bits):
            return False
        if _evaluates_nonzero(cofactor, current, bits):
            return True
        bits *= 2
        current = current.refine(current.radius / (1 << 64) if current.radius else 0)
    raise InvalidInputError("certified zero test did not terminate")
