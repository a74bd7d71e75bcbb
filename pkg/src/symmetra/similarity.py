"""Similarities between two implicit plane curves.

A similarity ``phi`` is reported when ``f1∘phi = lam*f2``, i.e. ``phi`` carries
the second curve onto the first.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import gmpy2
from gmpy2 import mpq

from .algebraic import isolate_roots, recognize_gaussian
from .bipoly import BiPoly, MapKind, PlaneMap, ZPoly, squarefree_part, to_complex
from .conic import ScaleFreeConics, classify, circle_data, conics_similar, line_circle_similar
from .errors import DomainError, InternalAssertionError, InvalidInputError, PreconditionError
from .harmonic import associated_g, rotation_center
from .numeric import ONE, ZERO, CPoly, GaussRat, Rat, binomial_gcd, binomial_poly
from .reduce import (
    ConicFallback,
    HarmonicHighDeg,
    LineTimesCircle,
    chain,
    detect_concentric_circles,
    detect_parallel_lines,
    reduce_to_harmonic,
)
from .reports import (
    DegenerateFamily,
    FamilyKind,
    SimilarityEntry,
    SimilarityReport,
    SimilarityStatus,
    not_similar,
    unit_sort_key,
)
from .verify import RealInterval, Value, map_mu2, verify_map

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimilarityCandidateSet:
    """Candidate scalings for g1(alpha*z + beta) = lam*g2(z).

    ``final_gcd`` is zero when every alpha passes the g-level test (pure powers)
    and a nonzero constant when no alpha does.
    """

    kind: MapKind
    final_gcd: CPoly
    beta_of_alpha: CPoly
    lambda_of_alpha: CPoly

    @property
    def is_continuum(self) -> bool:
        return self.final_gcd.is_zero()

    def alphas(self) -> list:
        if self.is_continuum or self.final_gcd.degree < 1:
            return []
        return _roots(self.final_gcd)

    def maps(self) -> list[PlaneMap]:
        return [_map(self.kind, a, self.beta_of_alpha) for a in self.alphas()]


def _roots(p: CPoly) -> list:
    out = []
    for root, _ in isolate_roots(p.strip_zero_roots()):
        g = recognize_gaussian(root)
        out.append(g if g is not None else root)
    return out


def _map(kind: MapKind, alpha, beta: CPoly) -> PlaneMap:
    if isinstance(alpha, GaussRat):
        return PlaneMap(kind, alpha, beta(alpha))
    return PlaneMap(kind, alpha, beta)


def _centered(g: CPoly) -> tuple[GaussRat, CPoly]:
    p = rotation_center(g)
    return p, g.taylor_shift(p)


def harmonic_candidates(g1: CPoly, g2: CPoly, kind: MapKind) -> SimilarityCandidateSet:
    """Scalings alpha (and beta(alpha), lam(alpha)) solving the triangular coefficient system."""
    if g1.degree != g2.degree:
        raise DomainError("associated polynomials of different degree: not similar")
    if g1.degree < 2:
        raise PreconditionError("harmonic candidates need deg g >= 2")
    if kind is MapKind.OPPOSITE:
        g2 = g2.conj()
    n = g1.degree
    p1, c1 = _centered(g1)
    p2, c2 = _centered(g2)
    beta = CPoly([p1, -p2])
    lam = CPoly.monomial(n, g1.lc() / g2.lc())
    constraints = []
    for j in range(n - 1):
        a, b = c1.coeff(j), c2.coeff(j)
        if not a and not b:
            continue
        if not a or not b:
            return SimilarityCandidateSet(kind, CPoly.constant(ONE), beta, lam)
        # a alpha^j = lam b and lam = a_n alpha^n / b_n
        constraints.append((n - j, a * c2.lc() / (c1.lc() * b)))
    common = binomial_gcd(constraints)
    if common is None:
        final = CPoly.constant(ONE)
    elif common[0] == 0:
        final = CPoly()
    else:
        final = binomial_poly(*common)
    return SimilarityCandidateSet(kind, final, beta, lam)


def verify_similarity(f1, f2, m: PlaneMap) -> Optional[Value]:
    if isinstance(m.alpha, GaussRat) and not m.alpha:
        raise PreconditionError("alpha must be nonzero")
    return verify_map(f1, f2, m)


def lambda_chain(lam, mu2, k: int):
    """Multiplier relating the k-th Laplacian stages: lam / mu2**k."""
    if mu2 <= 0:
        raise InvalidInputError("mu^2 must be positive")
    return lam / mu2 ** k


# ---------------------------------------------------------------------------
# pinned centers


def _rational_root(q: Rat, s: int) -> Optional[Rat]:
    """The positive rational s-th root of q > 0, when it exists."""
    num, ok1 = gmpy2.iroot(gmpy2.mpz(q.numerator), s)
    den, ok2 = gmpy2.iroot(gmpy2.mpz(q.denominator), s)
    return mpq(num, den) if ok1 and ok2 else None


def _swap(F: ZPoly) -> ZPoly:
    return ZPoly({(k, j): c for (j, k), c in F.terms.items()})


@dataclass(frozen=True)
class _Continuum:
    """Similarities with free scale: the admissible phases satisfy w**m == c."""

    m: int
    c: GaussRat


def pinned_alphas(F1: ZPoly, F2: ZPoly):
    """Nonzero alpha with F1(alpha*z, conj(alpha)*zbar) = lam*F2 for a real lam.

    Returns a list of candidates, or a _Continuum when the scale is free
    (both polynomials homogeneous).
    """
    if F1.terms.keys() != F2.terms.keys():
        return []
    j0, k0 = K0 = max(F2.terms, key=lambda k: (k[0] + k[1], k))
    ratios = []
    for (j, k), c1 in F1.terms.items():
        if (j, k) == K0:
            continue
        rho = c1 * F2.terms[K0] / (F1.terms[K0] * F2.terms[(j, k)])
        ratios.append((j0 - j, k0 - k, rho))
    # alpha^a conj(alpha)^b = rho; with t = |alpha|^2 this reads alpha^(a-b) t^b = rho
    scaled = [(a, b, rho) for a, b, rho in ratios if a + b]
    if not scaled:
        common = binomial_gcd((2 * a, rho) for a, b, rho in ratios if a)
        if common is None or common[0] == 0:
            return []
        return _Continuum(*common)
    a0, b0, rho0 = min(scaled, key=lambda r: abs(r[0] + r[1]))
    s0, N0 = a0 + b0, rho0.norm()
    if s0 < 0:
        s0, N0 = -s0, 1 / N0
    t = _rational_root(N0, s0)
    binomials = []
    for a, b, rho in ratios:
        s, d = a + b, a - b
        if s:
            N = rho.norm()
            if N ** s0 != N0 ** s:
                return []
        if not d:
            continue
        if t is not None:
            binomials.append((d, rho / t ** b))
        elif s:
            binomials.append((d * s, rho ** a / rho.conj() ** b))
        else:
            binomials.append((d * s0, rho ** s0 * N0 ** a))
    common = binomial_gcd(binomials)
    if common is None or common[0] == 0:
        return []
    return _roots(binomial_poly(*common))


def _pinned_maps(f1: BiPoly, f2: BiPoly, p1: GaussRat, p2: GaussRat):
    """Maps sending p2 to p1, found from the full coefficient identity."""
    F1 = to_complex(f1).translate(p1)
    F2 = to_complex(f2)
    maps = []
    families = []
    for kind in (MapKind.DIRECT, MapKind.OPPOSITE):
        q2 = p2 if kind is MapKind.DIRECT else p2.conj()
        G2 = F2.translate(p2)
        if kind is MapKind.OPPOSITE:
            G2 = _swap(G2)
        found = pinned_alphas(F1, G2)
        if isinstance(found, _Continuum):
            families.append((kind, found))
            continue
        maps += [_map(kind, a, CPoly([p1, -q2])) for a in found]
    return maps, families


# ---------------------------------------------------------------------------
# pipeline


def _families(f: BiPoly) -> Optional[DegenerateFamily]:
    direction = detect_parallel_lines(f)
    if direction is not None:
        return DegenerateFamily(FamilyKind.PARALLEL_LINES, direction=direction)
    center = detect_concentric_circles(f)
    if center is not None:
        return DegenerateFamily(FamilyKind.CONCENTRIC_CIRCLES, center=center)
    return None


def _family_report(fam1: DegenerateFamily, fam2: DegenerateFamily) -> SimilarityReport:
    if fam1.kind is not fam2.kind:
        return not_similar("different degenerate families")
    desc = f"infinitely many similarities: {fam2.describe()} onto {fam1.describe()}"
    return SimilarityReport(SimilarityStatus.INFINITE_FAMILY, (), desc, fam1)


def _outcome_center(o) -> GaussRat:
    if isinstance(o, HarmonicHighDeg):
        return rotation_center(associated_g(o.h))
    if isinstance(o, LineTimesCircle):
        return circle_data(o.circle).center
    d = classify(o.q)
    return d.vertex if d.center is None else d.center


def _candidate_maps(f1, f2, o1, o2):
    """Candidate maps from the reduced pair, plus any free-scale family."""
    try:
        if isinstance(o1, HarmonicHighDeg):
            if o1.h.degree == 2:
                return conics_similar(o1.h, o2.h), []
            g1, g2 = associated_g(o1.h), associated_g(o2.h)
            maps, pinned = [], False
            for kind in (MapKind.DIRECT, MapKind.OPPOSITE):
                cands = harmonic_candidates(g1, g2, kind)
                if cands.is_continuum:
                    pinned = True
                    continue
                maps += cands.maps()
            if not pinned:
                return maps, []
        elif isinstance(o1, LineTimesCircle):
            return line_circle_similar((o1.line, o1.circle), (o2.line, o2.circle)), []
        else:
            return conics_similar(o1.q, o2.q), []
    except ScaleFreeConics:
        pass
    return _pinned_maps(f1, f2, _outcome_center(o1), _outcome_center(o2))


def _entry_key(e: SimilarityEntry):
    m = e.map
    return (0 if m.is_direct else 1, unit_sort_key(m.alpha), str(m))


def similarities(f1: BiPoly, f2: BiPoly) -> SimilarityReport:
    """Every similarity phi with f1(phi) = lam * f2, up to the curves' square-free parts.

    Like the symmetry report, each lam relates the square-free parts, which can
    differ in sign from the multiplier between the inputs themselves.
    """
    if f1.degree < 1 or f2.degree < 1:
        raise InvalidInputError("similarities of constant polynomials are undefined")
    if f1.degree != f2.degree:
        return not_similar(f"degrees differ ({f1.degree} vs {f2.degree})")
    s1, s2 = squarefree_part(f1), squarefree_part(f2)
    for raw, sf in ((f1, s1), (f2, s2)):
        if sf.degree != raw.degree:
            log.warning("input is not square-free; using its square-free part %s", sf)
    if s1.degree != s2.degree:
        return not_similar("square-free parts have different degrees")
    fam1, fam2 = _families(s1), _families(s2)
    if fam1 or fam2:
        if not (fam1 and fam2):
            return not_similar("only one curve has infinitely many symmetries")
        return _family_report(fam1, fam2)
    ch1, ch2 = chain(s1), chain(s2)
    if ch1.ell != ch2.ell:
        return not_similar(f"Laplacian chains have different lengths ({ch1.ell} vs {ch2.ell})")
    c1, c2 = ch1.terminal_constant, ch2.terminal_constant
    if bool(c1) != bool(c2):
        return not_similar("exactly one Laplacian chain ends in a zero constant")
    o1, o2 = reduce_to_harmonic(s1, ch1), reduce_to_harmonic(s2, ch2)
    if type(o1) is not type(o2) or o1.stage != o2.stage:
        return not_similar("reductions differ in kind")
    if isinstance(o1, HarmonicHighDeg) and o1.h.degree != o2.h.degree:
        return not_similar("harmonic reductions have different degrees")
    maps, families = _candidate_maps(s1, s2, o1, o2)
    if families:
        kinds = ", ".join(k.value for k, _ in families)
        desc = f"both curves are unions of lines through a point; {kinds} similarities with free scale"
        fam = DegenerateFamily(FamilyKind.CONCURRENT_LINES, center=_outcome_center(o1))
        return SimilarityReport(SimilarityStatus.INFINITE_FAMILY, (), desc, fam)
    Z1, Z2 = to_complex(s1), to_complex(s2)
    entries = []
    seen = set()
    for m in maps:
        key = str(m) if m.is_exact else (m.kind, str(m.alpha), str(m.beta))
        if key in seen:
            continue
        seen.add(key)
        lam = verify_map(Z1, Z2, m)
        if lam is None:
            continue
        mu2 = map_mu2(m)
        _check_terminal(c1, c2, lam, mu2, ch1.ell)
        entries.append(SimilarityEntry(m, lam, mu2))
    if not entries:
        return not_similar("no candidate survived verification")
    entries.sort(key=_entry_key)
    return SimilarityReport(SimilarityStatus.SIMILAR, tuple(entries), f"{len(entries)} similarities")


def _check_terminal(c1: Rat, c2: Rat, lam, mu2, ell: int) -> None:
    if isinstance(lam, RealInterval) or isinstance(mu2, RealInterval) or not c2:
        return
    if c1 != lambda_chain(lam, mu2, ell + 1) * c2:
        raise InternalAssertionError("terminal constants violate the multiplier recursion")


__all__ = [
    "SimilarityCandidateSet",
    "harmonic_candidates",
    "lambda_chain",
    "pinned_alphas",
    "similarities",
    "verify_similarity",
]
