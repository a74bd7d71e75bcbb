"""Arithmetic in Q(i)[a, b] / (P(a), conj(P)(b)) with a = alpha, b = conj(alpha).

Used to compose curves with maps whose scaling parameter is an irrational
algebraic number and to decide the resulting coefficient identities exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from gmpy2 import mpq

from .algebraic import AlgebraicNumber, Ball, certified_zero
from .bipoly import PlaneMap, ZPoly, compose_generic
from .errors import InvalidInputError
from .numeric import ONE, ZERO, CPoly, GaussRat, Rat, sqrt_upper

_MAX_BITS = 1 << 16


class QElem:
    """Element of the quotient ring; ``terms[(u, v)]`` multiplies a**u * b**v."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: "AlgebraicContext", terms: dict):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v}

    def _other(self, other) -> "QElem":
        if isinstance(other, QElem):
            return other
        return QElem(self.ctx, {(0, 0): GaussRat.of(other)})

    def __add__(self, other):
        other = self._other(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return QElem(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return QElem(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, QElem):
            c = GaussRat.of(other)
            return QElem(self.ctx, {k: v * c for k, v in self.terms.items()})
        raw: dict = {}
        for (u1, v1), x in self.terms.items():
            for (u2, v2), y in other.terms.items():
                key = (u1 + u2, v1 + v2)
                raw[key] = raw.get(key, ZERO) + x * y
        return self.ctx.reduce(raw)

    __rmul__ = __mul__

    def is_structurally_zero(self) -> bool:
        return not self.terms

    def conj(self) -> "QElem":
        return self.ctx.conj(self)

    def __repr__(self):
        return f"QElem({self.terms})"


def _reduction_table(P: CPoly) -> list[list[GaussRat]]:
    """Rows e = d .. 2d-2: coefficients of t**e mod P in the basis 1..t**(d-1)."""
    d = P.degree
    low = [-c for c in P.coeffs[:d]]
    rows = []
    cur = low
    for _ in range(max(0, d - 1)):
        rows.append(cur)
        # multiply by t and reduce
        top = cur[-1]
        nxt = [ZERO] + cur[:-1]
        cur = [nxt[i] + top * low[i] for i in range(d)]
    return rows


def _denominator(q: Rat) -> int:
    return int(q.denominator)


class AlgebraicContext:
    """Quotient ring attached to one isolated algebraic number alpha."""

    def __init__(self, alpha: AlgebraicNumber):
        P = alpha.poly.monic()
        if P.degree < 1:
            raise InvalidInputError("defining polynomial must be nonconstant")
        self.alpha = alpha
        self.P = P
        self.Pbar = P.conj()
        self.d = P.degree
        self._table_a = _reduction_table(P)
        self._table_b = _reduction_table(self.Pbar)
        self._conj_formula: object = None  # computed lazily; False when unknown
        # with conj(alpha) = C(alpha) the ring collapses to Q(i)[a]/(P)
        self.univariate = self.conj_formula() is not None

    # construction ---------------------------------------------------------
    @property
    def zero(self) -> QElem:
        return QElem(self, {})

    @property
    def one(self) -> QElem:
        return QElem(self, {(0, 0): ONE})

    def a(self) -> QElem:
        return self.from_cpoly(CPoly([0, 1]))

    def b(self) -> QElem:
        if self.univariate:
            return self.from_cpoly(self._conj_formula)
        return QElem(self, {(0, 1): ONE})

    def conj(self, e: QElem) -> QElem:
        if not self.univariate:
            return QElem(self, {(v, u): c.conj() for (u, v), c in e.terms.items()})
        p = _as_cpoly_a(e).conj()
        return self.from_cpoly(p.compose(self._conj_formula))

    def from_cpoly(self, p: CPoly) -> QElem:
        """p(alpha) reduced modulo the defining polynomial."""
        r = p % self.P
        return QElem(self, {(u, 0): c for u, c in enumerate(r.coeffs)})

    def reduce(self, raw: dict) -> QElem:
        d = self.d
        stage: dict = {}
        for (u, v), c in raw.items():
            if u < d:
                stage[(u, v)] = stage.get((u, v), ZERO) + c
            else:
                for w, t in enumerate(self._table_a[u - d]):
                    if t:
                        key = (w, v)
                        stage[key] = stage.get(key, ZERO) + c * t
        out: dict = {}
        for (u, v), c in stage.items():
            if v < d:
                out[(u, v)] = out.get((u, v), ZERO) + c
            else:
                for w, t in enumerate(self._table_b[v - d]):
                    if t:
                        key = (u, w)
                        out[key] = out.get(key, ZERO) + c * t
        return QElem(self, out)

    # conjugate as a polynomial in alpha -----------------------------------
    def _inverse_of_a(self) -> CPoly:
        p0 = self.P.coeff(0)
        if not p0:
            raise InvalidInputError("alpha = 0 has no inverse")
        # P(a) = a*Q(a) + p0  =>  1/a = -Q(a)/p0
        q = CPoly(self.P.coeffs[1:])
        return q * (-p0.inverse())

    def _conj_in_alpha_disc(self, expr: CPoly) -> bool:
        """True when expr(alpha) provably lies in the isolating disc of conj(alpha)."""
        target = self.alpha.conjugate()
        current = self.alpha
        for _ in range(8):
            bits = 64 + 2 * max(64, int(current.radius.denominator).bit_length() if current.radius else 64)
            val = expr(current.ball(bits))
            dist = sqrt_upper((val.c - target.center).norm())
            if dist + val.r < target.radius:
                return True
            if current.radius == 0:
                return False
            current = current.refine(current.radius / (1 << 32))
        return False

    def conj_formula(self):
        """A CPoly C with conj(alpha) = C(alpha), when one of a few shapes works."""
        if self._conj_formula is not None:
            return self._conj_formula or None
        self._conj_formula = False
        candidates = []
        if self.P.coeff(0):
            approx = self.alpha.refine(mpq(1, 1 << 200)) if self.alpha.radius > mpq(1, 1 << 200) else self.alpha
            n = approx.center.norm()
            f = Fraction(int(n.numerator), int(n.denominator)).limit_denominator(10 ** 15)
            N = mpq(f.numerator, f.denominator)
            if N > 0:
                candidates.append(self._inverse_of_a() * N)
        candidates.append(CPoly([0, 1]))
        candidates.append(CPoly([0, -1]))
        for cand in candidates:
            red = cand % self.P
            # Pbar(C(alpha)) must vanish, and C(alpha) must sit in conj(alpha)'s disc
            if not certified_zero(self.Pbar.compose(red), self.alpha):
                continue
            if self._conj_in_alpha_disc(red):
                self._conj_formula = red
                return red
        return None

    def to_univariate(self, e: QElem):
        if self.univariate:
            return _as_cpoly_a(e)
        C = self.conj_formula()
        if C is None:
            return None
        powers = [CPoly.constant(1)]
        out = CPoly()
        for (u, v), c in e.terms.items():
            while len(powers) <= v:
                powers.append((powers[-1] * C) % self.P)
            out = out + CPoly.monomial(u, c) * powers[v]
        return out % self.P

    # evaluation -------------------------------------------------------------
    def ball(self, e: QElem, bits: int = 256, at: AlgebraicNumber | None = None) -> Ball:
        at = at or self.alpha
        A = at.ball(bits)
        B = A.conj()
        pa = [Ball(ONE, 0, bits)]
        pb = [Ball(ONE, 0, bits)]
        total = Ball(ZERO, 0, bits)
        for (u, v), c in e.terms.items():
            while len(pa) <= u:
                pa.append(pa[-1] * A)
            while len(pb) <= v:
                pb.append(pb[-1] * B)
            total = total + pa[u] * pb[v] * c
        return total

    def _liouville_data(self, e: QElem):
        """(integer-coefficient scale, log2 of the nonzero lower bound)."""
        s = 1
        for c in self.P.coeffs:
            s = lcm(s, _denominator(c.re), _denominator(c.im))
        t = 1
        for c in e.terms.values():
            t = lcm(t, _denominator(c.re), _denominator(c.im))
        # Cauchy bound for |roots of P|, then for s*alpha
        cauchy = 1 + max((c.abs_upper() for c in self.P.coeffs[:-1]), default=mpq(0))
        M = s * cauchy
        scale = t * s ** (2 * self.d - 2)
        H = mpq(0)
        for (u, v), c in e.terms.items():
            H += c.abs_upper() * scale * M ** (u + v) / s ** (u + v)
        H = max(H, mpq(1))
        D = self.d * self.d
        log2_H = int(H.numerator).bit_length() - int(H.denominator).bit_length() + 1
        return scale, (D - 1) * log2_H

    def is_zero(self, e: QElem) -> bool:
        """Decide exactly whether e vanishes at (alpha, conj(alpha))."""
        if e.is_structurally_zero():
            return True
        if all(v == 0 for (_, v) in e.terms):
            return certified_zero(_as_cpoly_a(e), self.alpha)
        uni = self.to_univariate(e)
        if uni is not None:
            return certified_zero(uni, self.alpha)
        scale, log_bound = self._liouville_data(e)
        bits = 128
        current = self.alpha
        while bits <= _MAX_BITS + log_bound:
            val = self.ball(e, bits, current) * scale
            if val.excludes_zero():
                return False
            mag = sqrt_upper(val.c.norm()) + val.r
            if mag == 0 or mag < mpq(1, 1 << (log_bound + 1)):
                return True
            bits *= 2
            if current.radius:
                current = current.refine(mpq(1, 1 << bits))
        raise InvalidInputError("zero test exceeded the precision budget")

    def exact_value(self, e: QElem):
        """e as a GaussRat when it provably equals one, else None."""
        if all(k == (0, 0) for k in e.terms):
            return e.terms.get((0, 0), ZERO)
        uni = self.to_univariate(e)
        if uni is not None and uni.degree <= 0:
            return uni.coeff(0)
        return None


def _as_cpoly_a(e: QElem) -> CPoly:
    deg = max((u for u, _ in e.terms), default=-1)
    return CPoly([e.terms.get((u, 0), ZERO) for u in range(deg + 1)])


def compose_algebraic(F: ZPoly, m: PlaneMap, ctx: AlgebraicContext | None = None):
    """F∘m with coefficients in the quotient ring of m.alpha."""
    if m.is_exact:
        raise InvalidInputError("map parameters are Gaussian rationals; use bipoly.compose")
    ctx = ctx or AlgebraicContext(m.alpha)
    a = ctx.a()
    beta = ctx.from_cpoly(m.beta_poly())
    terms = compose_generic(F, a, beta, a.conj(), beta.conj(), not m.is_direct, ctx.one, ctx.zero)
    return ctx, {k: v for k, v in terms.items() if not v.is_structurally_zero()}
