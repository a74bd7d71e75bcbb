"""Result types shared by the symmetry, similarity and conic modules."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

import mpmath

from .algebraic import AlgebraicNumber
from .bipoly import MapKind, PlaneMap
from .numeric import CPoly, GaussRat, Rat
from .verify import RealInterval

Unit = Union[GaussRat, AlgebraicNumber]


def unit_sort_key(w: Unit):
    """Canonical order on unit complex numbers: by axis angle in [0, 2*pi)."""
    z = w.to_mpc() if isinstance(w, GaussRat) else w.approx(30)
    with mpmath.workdps(40):
        ang = mpmath.arg(z)
        if ang < 0:
            ang += 2 * mpmath.pi
        return float(ang), str(ang)


def unit_angle(w: Unit, digits: int = 30):
    """Axis angle phi in [0, pi) with w = exp(2 i phi), as an mpmath number."""
    z = w.to_mpc() if isinstance(w, GaussRat) else w.approx(digits + 5)
    with mpmath.workdps(digits + 10):
        ang = mpmath.arg(z) / 2
        if ang < 0:
            ang += mpmath.pi
        return +ang


@dataclass(frozen=True)
class Rotation:
    order: int
    lam: int


@dataclass(frozen=True)
class Reflection:
    unit: Unit
    lam: int

    def as_map(self, center: GaussRat) -> PlaneMap:
        """z -> w*conj(z - p) + p."""
        if isinstance(self.unit, GaussRat):
            return PlaneMap(MapKind.OPPOSITE, self.unit, center - self.unit * center.conj())
        return PlaneMap(MapKind.OPPOSITE, self.unit, CPoly([center, -center.conj()]))


class FamilyKind(enum.Enum):
    PARALLEL_LINES = "parallel_lines"
    CONCENTRIC_CIRCLES = "concentric_circles"
    CONCURRENT_LINES = "concurrent_lines"


@dataclass(frozen=True)
class DegenerateFamily:
    """Curves with infinitely many symmetries: a direction or a center describes them."""

    kind: FamilyKind
    direction: Optional[tuple[int, int]] = None
    center: Optional[GaussRat] = None

    def describe(self) -> str:
        if self.kind is FamilyKind.PARALLEL_LINES:
            return f"union of parallel lines with direction {self.direction}"
        if self.kind is FamilyKind.CONCENTRIC_CIRCLES:
            return f"union of concentric circles centered at {self.center}"
        return f"union of lines through {self.center}"


@dataclass(frozen=True)
class SymmetryReport:
    center: Optional[GaussRat]
    rotations: tuple[Rotation, ...] = ()
    reflections: tuple[Reflection, ...] = ()
    family: Optional[DegenerateFamily] = None
    warnings: tuple[str, ...] = ()

    @property
    def is_infinite(self) -> bool:
        return self.family is not None

    @property
    def rotation_group_order(self) -> int:
        return max((r.order for r in self.rotations), default=1)

    @property
    def group_order(self) -> int:
        if self.family is not None:
            return 0
        return self.rotation_group_order * (2 if self.reflections else 1)

    @property
    def is_trivial(self) -> bool:
        return self.family is None and not self.rotations and not self.reflections

    def reflection_maps(self) -> list[PlaneMap]:
        if self.center is None:
            return []
        return [r.as_map(self.center) for r in self.reflections]


class SimilarityStatus(enum.Enum):
    SIMILAR = "similar"
    NOT_SIMILAR = "not_similar"
    INFINITE_FAMILY = "infinite_family"


@dataclass(frozen=True)
class SimilarityEntry:
    map: PlaneMap
    lam: Union[Rat, RealInterval]
    mu2: Union[Rat, RealInterval]


@dataclass(frozen=True)
class SimilarityReport:
    status: SimilarityStatus
    similarities: tuple[SimilarityEntry, ...] = ()
    description: str = ""
    family: Optional[DegenerateFamily] = None

    @property
    def is_similar(self) -> bool:
        return self.status is not SimilarityStatus.NOT_SIMILAR

    def direct(self) -> list[SimilarityEntry]:
        return [e for e in self.similarities if e.map.is_direct]

    def opposite(self) -> list[SimilarityEntry]:
        return [e for e in self.similarities if not e.map.is_direct]


def not_similar(reason: str = "") -> SimilarityReport:
    return SimilarityReport(SimilarityStatus.NOT_SIMILAR, (), reason)


__all__ = [
    "DegenerateFamily",
    "FamilyKind",
    "Reflection",
    "Rotation",
    "SimilarityEntry",
    "SimilarityReport",
    "SimilarityStatus",
    "SymmetryReport",
    "Unit",
    "not_similar",
    "unit_angle",
    "unit_sort_key",
]
