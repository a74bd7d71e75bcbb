"""Sparse bivariate polynomials over Q, their complex (z, zbar) form, and plane maps."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Union

from gmpy2 import mpq

from .algebraic import AlgebraicNumber, Ball
from .errors import InvalidInputError
from .numeric import ONE, ZERO, CPoly, GaussRat, I, Rat, gauss_poly_gcd, rat


class BiPoly:
    """Polynomial in x, y with exact rational coefficients.

    ``terms`` maps the exponent pair (i, j) of ``x**i * y**j`` to a nonzero
    rational. Instances are never mutated after construction.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in dict(terms).items():
                c = rat(c)
                if c:
                    clean[(int(i), int(j))] = c
        self.terms = clean
        self._hash = None

    @staticmethod
    def _raw(terms: dict) -> "BiPoly":
        p = object.__new__(BiPoly)
        p.terms = {k: v for k, v in terms.items() if v}
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def linear(cls, a, b, c) -> "BiPoly":
        """a*x + b*y + c"""
        return cls({(1, 0): a, (0, 1): b, (0, 0): c})

    # structure ----------------------------------------------------------
    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def constant_value(self) -> Rat:
        return self.terms.get((0, 0), mpq(0))

    def coeff(self, i: int, j: int) -> Rat:
        return self.terms.get((i, j), mpq(0))

    def homogeneous_part(self, d: int) -> "BiPoly":
        return BiPoly._raw({e: c for e, c in self.terms.items() if e[0] + e[1] == d})

    def top_form(self) -> "BiPoly":
        return self.homogeneous_part(self.degree)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Rat)):
            return self == BiPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # arithmetic ---------------------------------------------------------
    def _lift(self, other) -> "BiPoly":
        return other if isinstance(other, BiPoly) else BiPoly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            c = rat(other)
            return BiPoly._raw({e: v * c for e, v in self.terms.items()})
        out: dict = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BiPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = rat(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return BiPoly._raw({e: v / c for e, v in self.terms.items()})

    def __pow__(self, n: int):
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def diff_x(self) -> "BiPoly":
        return BiPoly._raw({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> "BiPoly":
        return BiPoly._raw({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def __call__(self, x, y):
        """Evaluate at a point; works for rationals, GaussRat, Ball, mpmath numbers."""
        total = None
        xp: dict = {}
        yp: dict = {}
        for (i, j), c in self.terms.items():
            if i not in xp:
                xp[i] = x ** i if i else None
            if j not in yp:
                yp[j] = y ** j if j else None
            t = c
            if xp[i] is not None:
                t = xp[i] * t
            if yp[j] is not None:
                t = yp[j] * t
            total = t if total is None else total + t
        return total if total is not None else mpq(0)

    def normalized(self) -> "BiPoly":
        """Scale so that the lexicographically leading coefficient is 1."""
        if not self.terms:
            return self
        lead = max(self.terms, key=lambda e: (e[0] + e[1], e))
        return self / self.terms[lead]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (i, j), c in self.sorted_terms():
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            mag = abs(c)
            mag_s = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if mono and mag == 1:
                body = "*".join(mono)
            else:
                body = "*".join([mag_s] + mono)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"BiPoly({str(self)!r})"


def laplacian(f: BiPoly) -> BiPoly:
    out: dict = {}
    for (i, j), c in f.terms.items():
        if i >= 2:
            key = (i - 2, j)
            out[key] = out.get(key, 0) + c * i * (i - 1)
        if j >= 2:
            key = (i, j - 2)
            out[key] = out.get(key, 0) + c * j * (j - 1)
    return BiPoly._raw(out)


# ---------------------------------------------------------------------------
# complex form


class ZPoly:
    """Polynomial in z, zbar with GaussRat coefficients: ``terms[(j, k)]`` is
    the coefficient of ``z**j * zbar**k``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (j, k), c in dict(terms).items():
                c = GaussRat.of(c)
                if c:
                    clean[(int(j), int(k))] = c
        self.terms = clean

    @staticmethod
    def _raw(terms: dict) -> "ZPoly":
        p = object.__new__(ZPoly)
        p.terms = {k: v for k, v in terms.items() if v}
        return p

    @property
    def degree(self) -> int:
        return max((j + k for j, k in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, j: int, k: int) -> GaussRat:
        return self.terms.get((j, k), ZERO)

    def is_real(self) -> bool:
        return all(self.terms.get((k, j), ZERO) == c.conj() for (j, k), c in self.terms.items())

    def is_radial(self) -> bool:
        return all(j == k for j, k in self.terms)

    def conj(self) -> "ZPoly":
        """The polynomial whose values are the complex conjugates: swaps z and zbar."""
        return ZPoly._raw({(k, j): c.conj() for (j, k), c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, ZPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return ZPoly._raw(out)

    def __neg__(self):
        return ZPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ZPoly):
            c = GaussRat.of(other)
            return ZPoly._raw({e: v * c for e, v in self.terms.items()})
        out: dict = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                key = (a + c, b + d)
                out[key] = out.get(key, ZERO) + u * v
        return ZPoly._raw(out)

    __rmul__ = __mul__

    def holomorphic_part(self) -> CPoly:
        """Coefficients of the pure z**j terms (k = 0) as a CPoly."""
        deg = max((j for j, k in self.terms if k == 0), default=-1)
        return CPoly([self.terms.get((j, 0), ZERO) for j in range(deg + 1)])

    def translate(self, c) -> "ZPoly":
        """F(z + c, zbar + conj(c))."""
        c = GaussRat.of(c)
        if not c:
            return self
        return compose(self, PlaneMap(MapKind.DIRECT, ONE, c))

    def __call__(self, z, zbar):
        if not self.terms:
            return ZERO
        zp, zbp = [ONE], [ONE]
        for _ in range(self.degree):
            zp.append(zp[-1] * z)
            zbp.append(zbp[-1] * zbar)
        total = None
        for (j, k), c in self.terms.items():
            t = c * zp[j] * zbp[k]
            total = t if total is None else total + t
        return total

    def __str__(self):
        parts = []
        for (j, k), c in sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(
                s for s in (
                    "" if j == 0 else "z" if j == 1 else f"z^{j}",
                    "" if k == 0 else "zb" if k == 1 else f"zb^{k}",
                ) if s
            )
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"ZPoly({str(self)})"


@lru_cache(maxsize=None)
def _x_power(a: int) -> tuple:
    """((z + zbar)/2)**a as ((s, t), coeff) pairs."""
    scale = mpq(1, 2 ** a)
    return tuple(((s, a - s), GaussRat._make(comb(a, s) * scale, mpq(0))) for s in range(a + 1))


_I_POWERS = (ONE, I, -ONE, -I)


@lru_cache(maxsize=None)
def _y_power(b: int) -> tuple:
    """((-i z + i zbar)/2)**b: coefficient of z^s zbar^(b-s) is C(b,s) (-i)^s i^(b-s) / 2^b."""
    scale = mpq(1, 2 ** b)
    out = []
    for s in range(b + 1):
        unit = _I_POWERS[(3 * s + (b - s)) % 4]
        out.append(((s, b - s), unit * (comb(b, s) * scale)))
    return tuple(out)


def to_complex(f: BiPoly) -> ZPoly:
    """Rewrite f(x, y) with x = (z + zbar)/2, y = -i (z - zbar)/2."""
    by_x: dict[int, dict] = {}
    for (a, b), c in f.terms.items():
        acc = by_x.setdefault(a, {})
        for key, v in _y_power(b):
            acc[key] = acc.get(key, ZERO) + v * c
    out: dict = {}
    for a, ys in by_x.items():
        for (s1, t1), u in _x_power(a):
            for (s2, t2), v in ys.items():
                if v:
                    key = (s1 + s2, t1 + t2)
                    out[key] = out.get(key, ZERO) + u * v
    return ZPoly._raw(out)


@lru_cache(maxsize=None)
def _z_power_parts(m: int):
    """(x + i y)**m split as (real part, imaginary part) BiPolys."""
    re: dict = {}
    im: dict = {}
    for s in range(m + 1):
        c = comb(m, s)
        r = s % 4  # i**s
        key = (m - s, s)
        if r == 0:
            re[key] = c
        elif r == 1:
            im[key] = c
        elif r == 2:
            re[key] = -c
        else:
            im[key] = -c
    return BiPoly(re), BiPoly(im)


@lru_cache(maxsize=None)
def _r2_power(k: int) -> BiPoly:
    return BiPoly({(2, 0): 1, (0, 2): 1}) ** k


def from_complex(F: ZPoly) -> BiPoly:
    """Inverse of :func:`to_complex`; requires c_kj == conj(c_jk)."""
    if not F.is_real():
        raise InvalidInputError("complex form does not satisfy the reality condition")
    out = BiPoly()
    for (j, k), c in F.terms.items():
        if j < k:
            continue
        r2 = _r2_power(k)
        if j == k:
            out = out + r2 * c.re
            continue
        re_part, im_part = _z_power_parts(j - k)
        # c z^j zb^k + conj = 2 Re(c (x+iy)^(j-k)) (x^2+y^2)^k
        out = out + (re_part * (2 * c.re) - im_part * (2 * c.im)) * r2
    return out


# ---------------------------------------------------------------------------
# plane maps


class MapKind(enum.Enum):
    DIRECT = "direct"
    OPPOSITE = "opposite"


Scalar = Union[GaussRat, AlgebraicNumber]


@dataclass(frozen=True)
class PlaneMap:
    """z -> alpha*z + beta (DIRECT) or z -> alpha*conj(z) + beta (OPPOSITE).

    ``alpha`` is a GaussRat or an AlgebraicNumber. When alpha is algebraic,
    ``beta`` may be a CPoly meaning the polynomial expression beta(alpha).
    """

    kind: MapKind
    alpha: Scalar
    beta: Union[GaussRat, CPoly] = ZERO

    def __post_init__(self):
        if isinstance(self.alpha, GaussRat):
            if not self.alpha:
                raise InvalidInputError("alpha must be nonzero")
            if isinstance(self.beta, CPoly):
                object.__setattr__(self, "beta", self.beta(self.alpha))
        elif not isinstance(self.alpha, AlgebraicNumber):
            object.__setattr__(self, "alpha", GaussRat.of(self.alpha))
        if not isinstance(self.beta, (GaussRat, CPoly)):
            object.__setattr__(self, "beta", GaussRat.of(self.beta))

    @property
    def is_exact(self) -> bool:
        return isinstance(self.alpha, GaussRat)

    @property
    def is_direct(self) -> bool:
        return self.kind is MapKind.DIRECT

    def beta_poly(self) -> CPoly:
        return self.beta if isinstance(self.beta, CPoly) else CPoly.constant(self.beta)

    def mu2(self):
        """|alpha|**2 exactly when alpha is a Gaussian rational, else None."""
        if self.is_exact:
            return self.alpha.norm()
        return None

    def alpha_ball(self, bits: int = 256) -> Ball:
        if self.is_exact:
            return Ball(self.alpha, 0, bits)
        return self.alpha.ball(bits)

    def beta_ball(self, bits: int = 256) -> Ball:
        return self.beta_poly()(self.alpha_ball(bits)) if isinstance(self.beta, CPoly) else Ball(self.beta, 0, bits)

    def apply(self, z: GaussRat) -> GaussRat:
        if not self.is_exact:
            raise InvalidInputError("exact application needs a Gaussian-rational alpha")
        w = z if self.is_direct else z.conj()
        return self.alpha * w + self.beta

    def apply_ball(self, z, bits: int = 256) -> Ball:
        zb = z if isinstance(z, Ball) else Ball(z, 0, bits)
        w = zb if self.is_direct else zb.conj()
        return self.alpha_ball(bits) * w + self.beta_ball(bits)

    def inverse(self) -> "PlaneMap":
        if not self.is_exact:
            raise InvalidInputError("inverse needs a Gaussian-rational alpha")
        a, b = self.alpha, self.beta
        if self.is_direct:
            inv = a.inverse()
            return PlaneMap(MapKind.DIRECT, inv, -b * inv)
        # z = alpha*conj(w) + beta  ->  w = conj((z - beta)/alpha)
        inv = a.inverse().conj()
        return PlaneMap(MapKind.OPPOSITE, inv, -(b.conj() * inv))

    def then(self, other: "PlaneMap") -> "PlaneMap":
        """The map z -> other(self(z))."""
        if not (self.is_exact and other.is_exact):
            raise InvalidInputError("composition needs Gaussian-rational parameters")
        a1, b1, a2, b2 = self.alpha, self.beta, other.alpha, other.beta
        if other.is_direct:
            kind = self.kind
            return PlaneMap(kind, a2 * a1, a2 * b1 + b2)
        kind = MapKind.OPPOSITE if self.is_direct else MapKind.DIRECT
        return PlaneMap(kind, a2 * a1.conj(), a2 * b1.conj() + b2)

    def real_matrix(self):
        """(A, b) with the map equal to X -> A X + b in real coordinates."""
        if not self.is_exact:
            raise InvalidInputError("real matrix needs a Gaussian-rational alpha")
        a, b = self.alpha.re, self.alpha.im
        if self.is_direct:
            A = ((a, -b), (b, a))
        else:
            A = ((a, b), (b, -a))
        return A, (self.beta.re, self.beta.im)

    def __str__(self):
        var = "z" if self.is_direct else "conj(z)"
        alpha = str(self.alpha) if self.is_exact else f"alpha[{self.alpha.poly}]"
        beta = str(self.beta) if isinstance(self.beta, GaussRat) else f"({self.beta})(alpha)"
        return f"z -> {alpha}*{var} + {beta}"


def _linear_powers(a, b, n: int, one, zero) -> list[list]:
    """Coefficient lists of (a*t + b)**j for j = 0..n over any ring."""
    out = [[one]]
    for _ in range(n):
        prev = out[-1]
        nxt = [zero] * (len(prev) + 1)
        for s, c in enumerate(prev):
            nxt[s] = nxt[s] + c * b
            nxt[s + 1] = nxt[s + 1] + c * a
        out.append(nxt)
    return out


def compose_generic(F: ZPoly, alpha, beta, alpha_bar, beta_bar, opposite: bool, one, zero) -> dict:
    """Coefficients of F(phi(z), conj(phi(z))) where the parameters live in any
    commutative ring that can be scaled by GaussRat."""
    n = F.degree
    if n < 0:
        return {}
    A = _linear_powers(alpha, beta, n, one, zero)
    B = _linear_powers(alpha_bar, beta_bar, n, one, zero)
    by_j: dict[int, list] = {}
    for (j, k), c in F.terms.items():
        row = by_j.setdefault(j, [zero] * (n + 1))
        for t, v in enumerate(B[k]):
            row[t] = row[t] + v * c
    out: dict = {}
    for j, row in by_j.items():
        for s, u in enumerate(A[j]):
            for t, v in enumerate(row):
                key = (t, s) if opposite else (s, t)
                out[key] = out.get(key, zero) + u * v
    return out


def compose(f, m: PlaneMap) -> ZPoly:
    """Complex form of f∘m for a map with Gaussian-rational parameters.

    Maps with an algebraic alpha are composed in :mod:`symmetra.quotient`.
    """
    F = to_complex(f) if isinstance(f, BiPoly) else f
    if not m.is_exact:
        raise InvalidInputError("compose() needs Gaussian-rational parameters; use quotient.compose_algebraic")
    a, b = m.alpha, m.beta
    terms = compose_generic(F, a, b, a.conj(), b.conj(), not m.is_direct, ONE, ZERO)
    return ZPoly._raw(terms)


def compose_real(f: BiPoly, m: PlaneMap) -> BiPoly:
    return from_complex(compose(f, m))


# ---------------------------------------------------------------------------
# square-free part via a primitive PRS in y over Q[x]


def _to_rec(f: BiPoly) -> list[CPoly]:
    dy = f.degree_in(1)
    rows: list[dict] = [dict() for _ in range(dy + 1)]
    for (i, j), c in f.terms.items():
        rows[j][i] = c
    out = []
    for row in rows:
        deg = max(row, default=-1)
        out.append(CPoly([row.get(i, 0) for i in range(deg + 1)]))
    while out and out[-1].is_zero():
        out.pop()
    return out


def _from_rec(rows: list[CPoly]) -> BiPoly:
    terms = {}
    for j, p in enumerate(rows):
        for i, c in enumerate(p.coeffs):
            if c:
                if c.im:
                    raise InvalidInputError("non-real coefficient in bivariate gcd")
                terms[(i, j)] = c.re
    return BiPoly._raw(terms)


def _content(rows: list[CPoly]) -> CPoly:
    g = None
    for p in rows:
        if p.is_zero():
            continue
        g = p.monic() if g is None else gauss_poly_gcd(g, p)
        if g.degree == 0:
            break
    return g if g is not None else CPoly.constant(1)


def _primitive(rows: list[CPoly]) -> list[CPoly]:
    c = _content(rows)
    return [p.exact_div(c) for p in rows]


def _prem(a: list[CPoly], b: list[CPoly]) -> list[CPoly]:
    """Pseudo-remainder of a by b as polynomials in y."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        lead = r[-1]
        shift = dr - db
        r = [p * lc for p in r]
        for j, bj in enumerate(b):
            r[j + shift] = r[j + shift] - bj * lead
        while r and r[-1].is_zero():
            r.pop()
    return r


def _rec_gcd(a: list[CPoly], b: list[CPoly]) -> list[CPoly]:
    if not a:
        return b
    if not b:
        return a
    ca, cb = _content(a), _content(b)
    cont = gauss_poly_gcd(ca, cb)
    a, b = [p.exact_div(ca) for p in a], [p.exact_div(cb) for p in b]
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 1:
            return [cont]
        r = _prem(a, b)
        if not r:
            g = _primitive(b)
            return [p * cont for p in g]
        a, b = b, _primitive(r)


def bivariate_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    if f.is_zero() and g.is_zero():
        raise InvalidInputError("gcd of two zero polynomials")
    return _from_rec(_rec_gcd(_to_rec(f), _to_rec(g))).normalized()


def bivariate_exact_div(f: BiPoly, g: BiPoly) -> BiPoly:
    a, b = _to_rec(f), _to_rec(g)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = len(b) - 1
    q = [CPoly() for _ in range(max(0, len(a) - db))]
    r = list(a)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        qc = r[-1].exact_div(b[-1])
        q[shift] = qc
        for j, bj in enumerate(b):
            r[j + shift] = r[j + shift] - bj * qc
        while r and r[-1].is_zero():
            r.pop()
    if r:
        raise InvalidInputError("bivariate division is not exact")
    return _from_rec(q)


_PRIME = (1 << 61) - 1


def _gfp_trim(u: list[int]) -> list[int]:
    while u and u[-1] == 0:
        u.pop()
    return u


def _gfp_gcd_degree(u: list[int], v: list[int]) -> int:
    a, b = _gfp_trim(list(u)), _gfp_trim(list(v))
    while b:
        inv = pow(b[-1], -1, _PRIME)
        while len(a) >= len(b):
            q = a[-1] * inv % _PRIME
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[i + shift] = (a[i + shift] - q * c) % _PRIME
            _gfp_trim(a)
        a, b = b, a
    return len(a) - 1


def _specialized_squarefree(f: BiPoly, var: int, point: int) -> bool:
    """True when f with the other variable set to ``point`` is square-free modulo
    a prime and keeps its degree in ``var``; this certifies that f has no repeated
    factor involving ``var``."""
    deg = f.degree_in(var)
    if deg <= 0:
        return True
    u = [0] * (deg + 1)
    for e, c in f.terms.items():
        den = c.denominator % _PRIME
        if den == 0:
            return False
        val = c.numerator * pow(den, -1, _PRIME) * pow(point, e[1 - var], _PRIME)
        u[e[var]] = (u[e[var]] + val) % _PRIME
    if u[deg] == 0:
        return False
    du = [(i * c) % _PRIME for i, c in enumerate(u)][1:]
    return _gfp_gcd_degree(u, du) == 0


def is_certainly_squarefree(f: BiPoly) -> bool:
    """Fast sufficient test; False means "unknown", not "has a repeated factor"."""
    for point in (3, 7, 1234567, 987654321):
        if _specialized_squarefree(f, 0, point) and _specialized_squarefree(f, 1, point):
            return True
    return False


def squarefree_part(f: BiPoly) -> BiPoly:
    """Product of the distinct irreducible factors of f (up to a rational constant)."""
    if f.is_zero():
        raise InvalidInputError("square-free part of the zero polynomial")
    if f.is_constant():
        return BiPoly.const(1)
    if is_certainly_squarefree(f):
        return f
    g = bivariate_gcd(f, f.diff_x())
    if g.degree > 0:
        g = bivariate_gcd(g, f.diff_y())
    if g.degree <= 0:
        return f
    return bivariate_exact_div(f, g)
