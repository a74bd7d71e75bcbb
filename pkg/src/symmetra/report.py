"""Canonical JSON for symmetry and similarity reports."""

from __future__ import annotations

import json
from importlib import resources
from typing import Union

import mpmath

from .algebraic import AlgebraicNumber, isolate_roots
from .bipoly import PlaneMap
from .numeric import CPoly, GaussRat, rat_str
from .reports import DegenerateFamily, SimilarityReport, SimilarityStatus, SymmetryReport, unit_angle
from .verify import RealInterval

APPROX_DIGITS = 30


def _decimal(x) -> str:
    with mpmath.workdps(APPROX_DIGITS + 10):
        return mpmath.nstr(x, APPROX_DIGITS, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


def gauss_json(z: GaussRat) -> dict:
    return {"re": rat_str(z.re), "im": rat_str(z.im)}


def gauss_str(z: GaussRat) -> str:
    sign = "-" if z.im < 0 else "+"
    return f"{rat_str(z.re)}{sign}{rat_str(abs(z.im))}*i"


def _root_order_key(z):
    with mpmath.workdps(40):
        ang = mpmath.arg(z)
        if ang < 0:
            ang += 2 * mpmath.pi
        return (ang, abs(z))


def root_index(a: AlgebraicNumber) -> int:
    """Position of ``a`` among the roots of its polynomial, ordered by argument then modulus."""
    roots = [r for r, _ in isolate_roots(a.poly)]
    roots.sort(key=lambda r: _root_order_key(r.approx(25)))
    target = a.approx(25)
    return min(range(len(roots)), key=lambda i: abs(roots[i].approx(25) - target))


def algebraic_json(a: AlgebraicNumber) -> dict:
    z = a.approx(APPROX_DIGITS + 5)
    return {
        "minpoly": [gauss_str(c) for c in a.poly.coeffs],
        "root_index": root_index(a),
        "approx": [_decimal(z.real), _decimal(z.imag)],
    }


def value_json(v) -> Union[str, dict]:
    """Exact rational, Gaussian rational, algebraic number or certified interval."""
    if isinstance(v, GaussRat):
        return gauss_json(v)
    if isinstance(v, AlgebraicNumber):
        return algebraic_json(v)
    if isinstance(v, RealInterval):
        return {"interval": [rat_str(v.lo), rat_str(v.hi)], "approx": v.approx_str(APPROX_DIGITS)}
    return rat_str(v)


def _beta_json(m: PlaneMap):
    if isinstance(m.beta, GaussRat):
        return gauss_json(m.beta)
    beta: CPoly = m.beta
    z = m.beta_ball(512).to_mpc()
    return {"poly_in_alpha": [gauss_str(c) for c in beta.coeffs], "approx": [_decimal(z.real), _decimal(z.imag)]}


def _family_json(fam: DegenerateFamily | None):
    if fam is None:
        return None
    return {
        "kind": fam.kind.value,
        "direction": list(fam.direction) if fam.direction is not None else None,
        "center": gauss_json(fam.center) if fam.center is not None else None,
        "description": fam.describe(),
    }


def symmetry_dict(r: SymmetryReport) -> dict:
    return {
        "center": gauss_json(r.center) if r.center is not None else None,
        "rotations": [{"order": rot.order, "lambda": rot.lam} for rot in r.rotations],
        "reflections": [
            {"unit_w": value_json(ref.unit), "axis_angle_approx": _decimal(unit_angle(ref.unit)), "lambda": ref.lam}
            for ref in r.reflections
        ],
        "group_order": r.group_order,
        "infinite_family": _family_json(r.family),
        "warnings": list(r.warnings),
    }


def similarity_dict(r: SimilarityReport) -> dict:
    if r.status is SimilarityStatus.NOT_SIMILAR:
        return {"status": r.status.value, "similarities": []}
    out = {
        "status": r.status.value,
        "description": r.description,
        "similarities": [
            {
                "kind": e.map.kind.value,
                "alpha": value_json(e.map.alpha),
                "beta": _beta_json(e.map),
                "lambda": value_json(e.lam),
                "mu2": value_json(e.mu2),
            }
            for e in r.similarities
        ],
    }
    if r.family is not None:
        out["infinite_family"] = _family_json(r.family)
    return out


def emit_report(report: SymmetryReport | SimilarityReport) -> str:
    """Deterministic JSON text (sorted keys, two-space indent, trailing newline)."""
    if isinstance(report, SymmetryReport):
        data = symmetry_dict(report)
    elif isinstance(report, SimilarityReport):
        data = similarity_dict(report)
    else:
        raise TypeError(f"cannot emit {type(report).__name__}")
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_schema() -> dict:
    """The JSON schema shipped with the package."""
    text = resources.files("symmetra").joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


__all__ = [
    "algebraic_json",
    "emit_report",
    "gauss_json",
    "report_schema",
    "root_index",
    "similarity_dict",
    "symmetry_dict",
    "value_json",
]
