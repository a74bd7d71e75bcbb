"""Finite symmetry groups of implicit plane curves."""

from __future__ import annotations

import logging
from typing import Optional

import mpmath

from .algebraic import AlgebraicNumber, isolate_roots, recognize_gaussian
from .bipoly import BiPoly, MapKind, PlaneMap, ZPoly, squarefree_part, to_complex
from .conic import ConicClass, classify, circle_data
from .errors import DomainError, InvalidInputError, PreconditionError
from .harmonic import associated_g, rotation_center
from .numeric import ONE, CPoly, GaussRat, binomial_gcd, binomial_poly
from .reduce import (
    ConicFallback,
    HarmonicHighDeg,
    LineTimesCircle,
    detect_concentric_circles,
    detect_parallel_lines,
    reduce_to_harmonic,
)
from .reports import DegenerateFamily, FamilyKind, Reflection, Rotation, SymmetryReport, unit_sort_key
from .verify import is_unit, verify_map

log = logging.getLogger(__name__)


def _differences(F: ZPoly) -> set[int]:
    return {j - k for (j, k) in F.terms}


def rotation_orders(F: ZPoly, max_order: int) -> list[tuple[int, int]]:
    """Orders d in 2..max_order of rotations about 0 with F∘rho = lam*F.

    The rotation multiplies c_jk by zeta_d^(j-k), so the test is on exponent
    differences only.
    """
    diffs = _differences(F)
    out = []
    for d in range(2, max_order + 1):
        if all(m % d == 0 for m in diffs):
            out.append((d, 1))
        elif d % 2 == 0 and all(m % d == d // 2 for m in diffs):
            out.append((d, -1))
    return out


def _as_unit(root: AlgebraicNumber):
    g = recognize_gaussian(root)
    return g if g is not None else root


def reflection_units(F: ZPoly) -> list[tuple[object, int]]:
    """Units w with F(w*zbar, conj(w)*z) = lam*F, for lam in (+1, -1)."""
    if F.is_radial():
        raise DomainError("curve is a union of concentric circles; every axis through the center is a mirror")
    has_diagonal = any(j == k for (j, k) in F.terms)
    out = []
    for lam in (1, -1):
        if lam == -1 and has_diagonal:
            continue
        common = binomial_gcd((j - k, c.conj() * lam / c) for (j, k), c in F.terms.items() if j > k)
        if common is None or common[0] == 0:
            continue
        for root, _ in isolate_roots(binomial_poly(*common)):
            out.append((_as_unit(root), lam))
    return out


def verify_isometry(f, m: PlaneMap) -> Optional[int]:
    """λ in {+1, -1} with f∘m = λ f, else None."""
    if m.is_exact:
        if m.alpha.norm() != 1:
            raise PreconditionError("an isometry needs |alpha| = 1")
    elif not is_unit(m):
        raise PreconditionError("an isometry needs |alpha| = 1")
    lam = verify_map(f, f, m, expected_lambdas=(1, -1))
    return None if lam is None else int(lam)


def rotation_map(center: GaussRat, order: int) -> PlaneMap:
    """Rotation by 2*pi/order about ``center``."""
    exact = {1: ONE, 2: -ONE, 4: GaussRat(0, 1)}
    if order in exact:
        z = exact[order]
        return PlaneMap(MapKind.DIRECT, z, center - z * center)
    with mpmath.workdps(40):
        target = mpmath.expj(2 * mpmath.pi / order)
        roots = [r for r, _ in isolate_roots(binomial_poly(order, 1))]
        zeta = min(roots, key=lambda r: abs(r.approx(30) - target))
    return PlaneMap(MapKind.DIRECT, zeta, CPoly([center, -center]))


def _center_of(outcome) -> GaussRat:
    if isinstance(outcome, HarmonicHighDeg):
        return rotation_center(associated_g(outcome.h))
    if isinstance(outcome, LineTimesCircle):
        return circle_data(outcome.circle).center
    data = classify(outcome.q)
    if data.cls is ConicClass.PARABOLA:
        return data.vertex
    if data.center is None:
        raise DomainError(f"conic {outcome.q} has no center")
    return data.center


def _canonical(rotations, reflections):
    rots = tuple(sorted((Rotation(d, lam) for d, lam in rotations), key=lambda r: r.order))
    refs = tuple(sorted((Reflection(w, lam) for w, lam in reflections), key=lambda r: (unit_sort_key(r.unit), r.lam)))
    return rots, refs


def symmetries(f: BiPoly, max_order: Optional[int] = None, verify: bool = True) -> SymmetryReport:
    """Symmetry group of the curve f = 0.

    Work happens on the square-free part of f, so each multiplier lam refers
    to that polynomial. ``max_order`` caps the rotation orders tried.
    """
    if f.degree < 1:
        raise InvalidInputError("symmetries of a constant polynomial are undefined")
    warnings = []
    sf = squarefree_part(f)
    if sf.degree != f.degree:
        msg = f"input is not square-free; using its square-free part {sf}"
        log.warning(msg)
        warnings.append(msg)
    direction = detect_parallel_lines(sf)
    if direction is not None:
        fam = DegenerateFamily(FamilyKind.PARALLEL_LINES, direction=direction)
        return SymmetryReport(None, family=fam, warnings=tuple(warnings))
    circle_center = detect_concentric_circles(sf)
    if circle_center is not None:
        fam = DegenerateFamily(FamilyKind.CONCENTRIC_CIRCLES, center=circle_center)
        return SymmetryReport(circle_center, family=fam, warnings=tuple(warnings))
    outcome = reduce_to_harmonic(sf)
    center = _center_of(outcome)
    F = to_complex(sf).translate(center)
    # lam = -1 rotations need j - k = d/2 mod d with |j - k| <= deg, so d <= 2 deg
    rotations = rotation_orders(F, max_order if max_order is not None else 2 * sf.degree)
    reflections = reflection_units(F)
    if verify:
        for d, lam in rotations:
            got = verify_isometry(sf, rotation_map(center, d))
            if got != lam:
                raise DomainError(f"rotation of order {d} failed verification")
        kept = []
        for w, lam in reflections:
            got = verify_isometry(sf, Reflection(w, lam).as_map(center))
            if got is None:
                continue
            kept.append((w, got))
        reflections = kept
    rots, refs = _canonical(rotations, reflections)
    if not rots and not refs:
        return SymmetryReport(None, warnings=tuple(warnings))
    return SymmetryReport(center, rots, refs, warnings=tuple(warnings))


__all__ = [
    "reflection_units",
    "rotation_map",
    "rotation_orders",
    "symmetries",
    "verify_isometry",
]
