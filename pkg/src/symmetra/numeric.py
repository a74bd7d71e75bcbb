"""Exact scalars and univariate polynomials over the Gaussian rationals.

Rationals are :class:`gmpy2.mpq` throughout; :class:`GaussRat` pairs two of
them, and :class:`CPoly` is a dense coefficient tuple of GaussRat values.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpq

from .errors import InvalidInputError

Rat = type(mpq())


def rat(value) -> Rat:
    """Coerce int, str ("p/q"), Fraction or mpq into an exact rational."""
    if isinstance(value, Rat):
        return value
    if isinstance(value, (int, Fraction)):
        return mpq(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise InvalidInputError(f"not an exact rational: {value!r}")
        return mpq(text)
    if isinstance(value, Rational):
        return mpq(value.numerator, value.denominator)
    raise InvalidInputError(f"cannot interpret {value!r} as an exact rational")


def rat_str(q: Rat) -> str:
    """Canonical "p/q" string (always with a denominator)."""
    q = mpq(q)
    return f"{q.numerator}/{q.denominator}"


def sqrt_upper(q: Rat, bits: int = 64) -> Rat:
    """A rational upper bound of sqrt(q) with roughly ``bits`` relative bits."""
    q = mpq(q)
    if q < 0:
        raise InvalidInputError("sqrt of a negative rational")
    if q == 0:
        return mpq(0)
    num, den = int(q.numerator), int(q.denominator)
    k = max(0, (den.bit_length() - num.bit_length()) // 2) + bits
    s = int(gmpy2.isqrt((num << (2 * k)) // den)) + 1
    return mpq(s, 1 << k)


def rational_sqrt(q: Rat):
    """Exact square root of a non-negative rational, or None if irrational."""
    q = mpq(q)
    if q < 0:
        return None
    n, d = gmpy2.isqrt_rem(q.numerator), gmpy2.isqrt_rem(q.denominator)
    if n[1] or d[1]:
        return None
    return mpq(n[0], d[0])


class GaussRat:
    """Exact Gaussian rational ``re + i*im``.

    Instances are treated as immutable values; equality with plain numbers
    works for real values and the hash is consistent with it.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRat):
            self.re = re.re
            self.im = re.im + rat(im)
            return
        self.re = rat(re)
        self.im = rat(im)

    @staticmethod
    def _make(re, im) -> "GaussRat":
        g = object.__new__(GaussRat)
        g.re = re
        g.im = im
        return g

    @classmethod
    def of(cls, value) -> "GaussRat":
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, complex):
            raise InvalidInputError("floating complex values are not exact")
        return cls._make(rat(value), mpq(0))

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, GaussRat):
            return GaussRat._make(self.re + other.re, self.im + other.im)
        try:
            o = rat(other)
        except InvalidInputError:
            return NotImplemented
        return GaussRat._make(self.re + o, self.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussRat):
            return GaussRat._make(self.re - other.re, self.im - other.im)
        try:
            o = rat(other)
        except InvalidInputError:
            return NotImplemented
        return GaussRat._make(self.re - o, self.im)

    def __rsub__(self, other):
        return GaussRat.of(other) - self

    def __neg__(self):
        return GaussRat._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, GaussRat):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b:
                return GaussRat._make(a * c, a * d)
            if not d:
                return GaussRat._make(a * c, b * c)
            return GaussRat._make(a * c - b * d, a * d + b * c)
        try:
            o = rat(other)
        except InvalidInputError:
            return NotImplemented
        return GaussRat._make(self.re * o, self.im * o)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRat._make(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussRat):
            if not other.im:
                if not other.re:
                    raise ZeroDivisionError("division by zero Gaussian rational")
                return GaussRat._make(self.re / other.re, self.im / other.re)
            return self * other.inverse()
        try:
            o = rat(other)
        except InvalidInputError:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero")
        return GaussRat._make(self.re / o, self.im / o)

    def __rtruediv__(self, other):
        return GaussRat.of(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GaussRat":
        return GaussRat._make(self.re, -self.im)

    def norm(self) -> Rat:
        return self.re * self.re + self.im * self.im

    def abs_upper(self) -> Rat:
        """Cheap rigorous upper bound on the modulus."""
        return abs(self.re) + abs(self.im)

    def is_real(self) -> bool:
        return not self.im

    # comparisons --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction, Rat)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def sort_key(self):
        return (self.re, self.im)

    def __repr__(self):
        return f"GaussRat({rat_str(self.re)!r}, {rat_str(self.im)!r})"

    def __str__(self):
        def fmt(q):
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

        if not self.im:
            return fmt(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{fmt(self.im)}*i"
        if not self.re:
            return im
        sign = "-" if self.im < 0 else "+"
        im_abs = "i" if abs(self.im) == 1 else f"{fmt(abs(self.im))}*i"
        return f"{fmt(self.re)}{sign}{im_abs}"

    def to_mpc(self):
        import mpmath

        return mpmath.mpc(mpmath.mpf(self.re.numerator) / self.re.denominator,
                          mpmath.mpf(self.im.numerator) / self.im.denominator)


ZERO = GaussRat._make(mpq(0), mpq(0))
ONE = GaussRat._make(mpq(1), mpq(0))
I = GaussRat._make(mpq(0), mpq(1))


def gauss(value) -> GaussRat:
    return GaussRat.of(value)


class CPoly:
    """Dense univariate polynomial in ``z`` with GaussRat coefficients.

    ``coeffs[j]`` is the coefficient of ``z**j``; trailing zeros are stripped
    so the zero polynomial has an empty tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [GaussRat.of(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def _raw(cs: list) -> "CPoly":
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(CPoly)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "CPoly":
        return cls._raw([ZERO] * degree + [GaussRat.of(coeff)])

    @classmethod
    def constant(cls, c) -> "CPoly":
        return cls._raw([GaussRat.of(c)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> GaussRat:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, j: int) -> GaussRat:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else ZERO

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"CPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            mono = "" if j == 0 else "z" if j == 1 else f"z^{j}"
            cs = str(c)
            if c.im and c.re:
                cs = f"({cs})"
            if mono:
                if c == 1:
                    cs = ""
                elif c == -1:
                    cs = "-"
                else:
                    cs += "*"
            parts.append(cs + mono)
        return " + ".join(parts).replace("+ -", "- ")

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, CPoly):
            other = CPoly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for j, c in enumerate(b):
            cs[j] = cs[j] + c
        return CPoly._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return CPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, CPoly):
            other = CPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return CPoly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, CPoly):
            c = GaussRat.of(other)
            if not c:
                return CPoly._raw([])
            return CPoly._raw([x * c for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CPoly._raw([])
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return CPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = CPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "CPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = other.lc().inverse()
        q = [ZERO] * max(0, len(rem) - dq)
        ob = other.coeffs
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = c * inv
            q[k - dq] = f
            for j in range(dq + 1):
                if ob[j]:
                    rem[k - dq + j] = rem[k - dq + j] - f * ob[j]
        return CPoly._raw(q), CPoly._raw(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "CPoly") -> "CPoly":
        q, r = self.divmod(other)
        if r:
            raise InvalidInputError("polynomial division is not exact")
        return q

    def monic(self) -> "CPoly":
        if not self.coeffs:
            return self
        inv = self.lc().inverse()
        return CPoly._raw([c * inv for c in self.coeffs])

    def derivative(self) -> "CPoly":
        return CPoly._raw([c * j for j, c in enumerate(self.coeffs)][1:])

    def integral(self) -> "CPoly":
        """Primitive with zero constant term."""
        return CPoly._raw([ZERO] + [c / (j + 1) for j, c in enumerate(self.coeffs)])

    def conj(self) -> "CPoly":
        """Coefficient-wise complex conjugate."""
        return CPoly._raw([c.conj() for c in self.coeffs])

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return ZERO if isinstance(x, GaussRat) else x * 0
        return acc

    def compose(self, other: "CPoly") -> "CPoly":
        acc = CPoly._raw([])
        for c in reversed(self.coeffs):
            acc = acc * other + CPoly.constant(c)
        return acc

    def taylor_shift(self, a) -> "CPoly":
        """p(z + a)."""
        return self.compose(CPoly([a, 1]))

    def scale_var(self, a) -> "CPoly":
        """p(a*z)."""
        a = GaussRat.of(a)
        out, pw = [], ONE
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * a
        return CPoly._raw(out)

    def trailing_power(self) -> int:
        """Largest k with z**k dividing self (0 for the zero polynomial)."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return 0

    def strip_zero_roots(self) -> "CPoly":
        return CPoly._raw(list(self.coeffs[self.trailing_power():]))


def gauss_poly_gcd(p: CPoly, q: CPoly) -> CPoly:
    """Monic gcd over Q(i) by Euclidean remainders, normalized each step."""
    if p.is_zero() and q.is_zero():
        raise InvalidInputError("gcd of two zero polynomials")
    a, b = p.monic(), q.monic()
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def poly_gcd_many(polys: Sequence[CPoly]) -> CPoly:
    nonzero = [p for p in polys if p]
    if not nonzero:
        raise InvalidInputError("gcd of an empty set of nonzero polynomials")
    nonzero.sort(key=lambda p: p.degree)
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        if g.degree == 0:
            break
        g = gauss_poly_gcd(g, p)
    return g


def squarefree_decomposition(p: CPoly) -> list[tuple[CPoly, int]]:
    """Yun's algorithm: monic square-free factors with their multiplicities."""
    if p.is_zero():
        raise InvalidInputError("square-free decomposition of zero")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = gauss_poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = gauss_poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p: CPoly) -> CPoly:
    if p.degree <= 0:
        return p.monic()
    return p.exact_div(gauss_poly_gcd(p, p.derivative())).monic()


def binomial_poly(m: int, r) -> CPoly:
    """z**m - r."""
    return CPoly._raw([-GaussRat.of(r)] + [ZERO] * (m - 1) + [ONE])


def binomial_gcd(pairs: Iterable[tuple[int, GaussRat]]) -> tuple[int, GaussRat] | None:
    """Common nonzero roots of z**m_k = c_k, as a single (m, c), or None if there are none.

    The gcd of two binomials is again a binomial, so Euclid runs on the
    exponents. Returns (0, ONE) when ``pairs`` is empty (every z qualifies).
    """
    m, c = 0, ONE
    for n, d in pairs:
        if n < 0:
            n, d = -n, d.inverse()
        if n == 0:
            if d != ONE:
                return None
            continue
        if not d:
            return None
        # z**m = c and z**n = d  ->  z**(m - q n) = c / d**q
        while n:
            q, r = divmod(m, n)
            m, c, n, d = n, d, r, c / d ** q
        if d != ONE:
            return None
    return m, c
