"""Degree-two curves: classification, symmetry groups and similarities."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from gmpy2 import mpq

from .algebraic import isolate_roots, recognize_gaussian
from .bipoly import BiPoly, MapKind, PlaneMap, to_complex
from .errors import DomainError, InvalidInputError
from .numeric import ONE, ZERO, CPoly, GaussRat, Rat
from .reports import Reflection, Rotation, SymmetryReport, unit_sort_key
from .verify import verify_map


class ConicClass(enum.Enum):
    ELLIPSE = "ellipse"
    CIRCLE = "circle"
    HYPERBOLA = "hyperbola"
    PARABOLA = "parabola"
    LINE_PAIR = "line_pair"
    POINT_OR_EMPTY = "point_or_empty"


class LineKind(enum.Enum):
    INTERSECTING = "intersecting"
    PARALLEL = "parallel"
    COINCIDENT = "coincident"


@dataclass(frozen=True)
class ConicData:
    matrix3: tuple
    cls: ConicClass
    line_kind: Optional[LineKind] = None
    real: bool = True
    center: Optional[GaussRat] = None
    vertex: Optional[GaussRat] = None
    # axis units w solve axis_quadratic(w) == 0 (central, non-circle) or equal axis_unit
    axis_quadratic: Optional[CPoly] = None
    axis_unit: Optional[GaussRat] = None
    # for rank-one quadratic parts: q = s*xi**2 + (lower terms), xi = u*x + v*y
    xi: Optional[BiPoly] = None

    @property
    def is_central(self) -> bool:
        return self.center is not None


def _coefficients(q: BiPoly):
    c = q.coeff
    return c(2, 0), c(1, 1), c(0, 2), c(1, 0), c(0, 1), c(0, 0)


def _det3(m) -> Rat:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _rank_one_form(A: Rat, B: Rat, C: Rat):
    """(u, v, s) with A x^2 + B xy + C y^2 = s (u x + v y)^2, assuming B^2 = 4AC."""
    if A:
        return A, B / 2, 1 / A
    return mpq(0), mpq(1), C


def classify(q: BiPoly) -> ConicData:
    if q.degree != 2:
        raise InvalidInputError(f"a conic has degree 2, got {q.degree}")
    A, B, C, D, E, F = _coefficients(q)
    M = ((A, B / 2, D / 2), (B / 2, C, E / 2), (D / 2, E / 2, F))
    delta = A * C - B * B / 4
    Delta = _det3(M)
    Q = to_complex(q)
    a2 = Q.coeff(2, 0)
    center = None
    if delta:
        cx = (-(D / 2) * C + (E / 2) * (B / 2)) / delta
        cy = (-(E / 2) * A + (D / 2) * (B / 2)) / delta
        center = GaussRat(cx, cy)
    axis_q = CPoly([-a2.conj(), ZERO, a2]) if a2 else None
    if delta > 0:
        real = Delta * (A + C) < 0
        if A == C and B == 0:
            cls = ConicClass.CIRCLE
            real = Delta * (A + C) <= 0
            return ConicData(M, cls, None, real, center)
        cls = ConicClass.ELLIPSE if real else ConicClass.POINT_OR_EMPTY
        if Delta == 0:
            cls, real = ConicClass.POINT_OR_EMPTY, True
        return ConicData(M, cls, None, real, center, axis_quadratic=axis_q)
    if delta < 0:
        if Delta:
            return ConicData(M, ConicClass.HYPERBOLA, None, True, center, axis_quadratic=axis_q)
        return ConicData(M, ConicClass.LINE_PAIR, LineKind.INTERSECTING, True, center, axis_quadratic=axis_q)
    u, v, s = _rank_one_form(A, B, C)
    xi = BiPoly.linear(u, v, 0)
    N = u * u + v * v
    a1 = (D * u + E * v) / N
    b1 = (E * u - D * v) / N
    if Delta:
        # q = s*xi^2 + a1*xi + b1*eta + F with eta = -v x + u y
        xi0 = -a1 / (2 * s)
        eta0 = -(s * xi0 * xi0 + a1 * xi0 + F) / b1
        vertex = GaussRat((u * xi0 - v * eta0) / N, (v * xi0 + u * eta0) / N)
        d = GaussRat(-v, u)
        unit = d * d / N
        return ConicData(M, ConicClass.PARABOLA, None, True, None, vertex, None, unit, xi)
    # q = s*xi^2 + a1*xi + F: discriminant decides the kind
    disc = a1 * a1 - 4 * s * F
    if disc > 0:
        return ConicData(M, ConicClass.LINE_PAIR, LineKind.PARALLEL, True, xi=xi)
    if disc == 0:
        return ConicData(M, ConicClass.LINE_PAIR, LineKind.COINCIDENT, True, xi=xi)
    return ConicData(M, ConicClass.LINE_PAIR, LineKind.PARALLEL, False, xi=xi)


def midline(q: BiPoly) -> BiPoly:
    """For a conic whose quadratic part is a square s*xi^2: the line 2 s xi + a1 (axis of the pair)."""
    A, B, C, D, E, _ = _coefficients(q)
    if B * B != 4 * A * C or (A, B, C) == (0, 0, 0):
        raise DomainError("quadratic part is not a perfect square")
    u, v, s = _rank_one_form(A, B, C)
    N = u * u + v * v
    a1 = (D * u + E * v) / N
    if E * u - D * v:
        raise DomainError("conic is a parabola, not a pair of parallel lines")
    return BiPoly.linear(2 * s * u, 2 * s * v, a1)


def _units_from(poly: CPoly):
    """Exact roots when Gaussian rational, otherwise isolated algebraic numbers."""
    out = []
    for root, _ in isolate_roots(poly):
        g = recognize_gaussian(root)
        out.append(g if g is not None else root)
    return out


def _sorted_reflections(refs):
    return tuple(sorted(refs, key=lambda r: (unit_sort_key(r.unit), r.lam)))


def conic_symmetries(q: BiPoly) -> SymmetryReport:
    data = classify(q)
    if data.cls is ConicClass.CIRCLE:
        raise DomainError("a circle has infinitely many symmetries")
    if data.cls is ConicClass.LINE_PAIR and data.line_kind is not LineKind.INTERSECTING:
        raise DomainError(f"{data.line_kind.value} lines have infinitely many symmetries")
    if data.cls is ConicClass.PARABOLA:
        return SymmetryReport(data.vertex, (), (Reflection(data.axis_unit, 1),))
    p = data.center
    Q = to_complex(q).translate(p)
    a2 = Q.coeff(2, 0)
    b = Q.coeff(1, 1)
    e = Q.coeff(0, 0)
    rotations = [Rotation(2, 1)]
    reflections = [Reflection(w, 1) for w in _units_from(data.axis_quadratic)]
    if not b and not e:
        # perpendicular line pair: quarter turns and diagonal mirrors flip the sign
        rotations.append(Rotation(4, -1))
        reflections += [Reflection(w, -1) for w in _units_from(CPoly([a2.conj(), ZERO, a2]))]
    return SymmetryReport(p, tuple(rotations), _sorted_reflections(reflections))


# ---------------------------------------------------------------------------
# similarities


def _maps_from_square(R: GaussRat, kind: MapKind, c1: GaussRat, c2: GaussRat) -> list[PlaneMap]:
    """Maps z -> alpha*(z - c2) + c1 (or with conj) for the two alpha with alpha^2 = R."""
    shift = c2 if kind is MapKind.DIRECT else c2.conj()
    out = []
    for alpha in _units_from(CPoly([-R, ZERO, ONE])):
        if isinstance(alpha, GaussRat):
            out.append(PlaneMap(kind, alpha, c1 - alpha * shift))
        else:
            out.append(PlaneMap(kind, alpha, CPoly([c1, -shift])))
    return out


def _scale_free(e1: Rat, e2: Rat) -> bool:
    return not e1 and not e2


class ScaleFreeConics(DomainError):
    """Both conics are invariant under homotheties, so similarities form a family."""


def _central_similar(q1: BiPoly, d1: ConicData, q2: BiPoly, d2: ConicData) -> list[PlaneMap]:
    Q1 = to_complex(q1).translate(d1.center)
    Q2 = to_complex(q2).translate(d2.center)
    A1, B1, E1 = Q1.coeff(2, 0), Q1.coeff(1, 1).re, Q1.coeff(0, 0).re
    A2, B2, E2 = Q2.coeff(2, 0), Q2.coeff(1, 1).re, Q2.coeff(0, 0).re
    if _scale_free(E1, E2):
        raise ScaleFreeConics("both conics are scale-free (constant term vanishes at the center)")
    if not E1 or not E2:
        return []
    lam = E1 / E2
    out = []
    for kind in (MapKind.DIRECT, MapKind.OPPOSITE):
        target = A2 if kind is MapKind.DIRECT else A2.conj()
        if not A1 or not A2:
            continue
        R = target * lam / A1
        # |alpha|^2 = |R| must also match the zz-bar coefficient: B1 |alpha|^2 = lam B2
        if B2 or B1:
            if not B1:
                continue
            mu2 = lam * B2 / B1
            if mu2 <= 0 or mu2 * mu2 != R.norm():
                continue
        out += _maps_from_square(R, kind, d1.center, d2.center)
    return out


def _parabola_similar(q1: BiPoly, d1: ConicData, q2: BiPoly, d2: ConicData) -> list[PlaneMap]:
    Q1 = to_complex(q1).translate(d1.vertex)
    Q2 = to_complex(q2).translate(d2.vertex)
    A1, D1 = Q1.coeff(2, 0), Q1.coeff(1, 0)
    A2, D2 = Q2.coeff(2, 0), Q2.coeff(1, 0)
    out = []
    for kind in (MapKind.DIRECT, MapKind.OPPOSITE):
        a2, d2_ = (A2, D2) if kind is MapKind.DIRECT else (A2.conj(), D2.conj())
        lam = a2 * D1 * D1 / (A1 * d2_ * d2_)
        if not lam.is_real():
            continue
        alpha = lam * d2_ / D1
        shift = d2.vertex if kind is MapKind.DIRECT else d2.vertex.conj()
        out.append(PlaneMap(kind, alpha, d1.vertex - alpha * shift))
    return out


def conics_similar(q1: BiPoly, q2: BiPoly) -> list[PlaneMap]:
    """All maps phi with q1∘phi = lam*q2, i.e. phi carries the second conic onto the first.

    Raises ScaleFreeConics for pairs with a continuum of similarities (lines
    through a point, points) and DomainError for circles or parallel lines.
    """
    d1, d2 = classify(q1), classify(q2)
    for d in (d1, d2):
        if d.cls is ConicClass.CIRCLE:
            raise DomainError("circles are similar through a one-parameter family of maps")
        if d.cls is ConicClass.LINE_PAIR and d.line_kind is not LineKind.INTERSECTING:
            raise DomainError("parallel line pairs are similar through infinitely many maps")
    if (d1.cls is ConicClass.PARABOLA) != (d2.cls is ConicClass.PARABOLA):
        return []
    if d1.cls is ConicClass.PARABOLA:
        maps = _parabola_similar(q1, d1, q2, d2)
    else:
        maps = _central_similar(q1, d1, q2, d2)
    return [m for m in maps if verify_map(q1, q2, m) is not None]


@dataclass(frozen=True)
class CircleData:
    center: GaussRat
    radius2: Rat


def circle_data(c: BiPoly) -> CircleData:
    A, B, C, D, E, F = _coefficients(c)
    if c.degree != 2 or A != C or B:
        raise InvalidInputError("not a circle equation")
    center = GaussRat(-D / (2 * A), -E / (2 * A))
    return CircleData(center, center.norm() - F / A)


def _line_parts(line: BiPoly):
    if line.degree != 1:
        raise InvalidInputError("not a line equation")
    a, b = line.coeff(1, 0), line.coeff(0, 1)
    return GaussRat(a, b)


def _line_value(line: BiPoly, z: GaussRat) -> Rat:
    return line(z.re, z.im)


def line_circle_similar(pair1, pair2) -> list[PlaneMap]:
    """Maps phi carrying line2*circle2 onto line1*circle1 (product1∘phi = lam*product2)."""
    (l1, c1), (l2, c2) = pair1, pair2
    k1, k2 = circle_data(c1), circle_data(c2)
    nu1, nu2 = _line_parts(l1), _line_parts(l2)
    if not k1.radius2 and not k2.radius2:
        raise ScaleFreeConics("two point-circles: the configuration is scale-free")
    if not k1.radius2 or not k2.radius2:
        return []
    mu2 = k1.radius2 / k2.radius2
    if mu2 <= 0:
        return []
    v1, v2 = _line_value(l1, k1.center), _line_value(l2, k2.center)
    maps: list[PlaneMap] = []
    if v1 and v2:
        kappa = v1 / v2
        for kind in (MapKind.DIRECT, MapKind.OPPOSITE):
            other = nu2.conj() if kind is MapKind.DIRECT else nu2
            alpha = other * kappa / nu1.conj()
            if alpha.norm() != mu2:
                continue
            shift = k2.center if kind is MapKind.DIRECT else k2.center.conj()
            maps.append(PlaneMap(kind, alpha, k1.center - alpha * shift))
    elif not v1 and not v2:
        kappa2 = mu2 * nu1.norm() / nu2.norm()
        for kind in (MapKind.DIRECT, MapKind.OPPOSITE):
            other = nu2.conj() if kind is MapKind.DIRECT else nu2
            ratio = other / nu1.conj()
            maps += _maps_from_square(ratio * ratio * kappa2, kind, k1.center, k2.center)
    product1, product2 = l1 * c1, l2 * c2
    return [m for m in maps if verify_map(product1, product2, m) is not None]


def is_circle(q: BiPoly) -> bool:
    return q.degree == 2 and classify(q).cls is ConicClass.CIRCLE


__all__ = [
    "CircleData",
    "ConicClass",
    "ConicData",
    "LineKind",
    "ScaleFreeConics",
    "circle_data",
    "classify",
    "conic_symmetries",
    "conics_similar",
    "is_circle",
    "line_circle_similar",
    "midline",
]
