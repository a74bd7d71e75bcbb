import mpmath
import pytest
from gmpy2 import mpq
from hypothesis import assume, given
from hypothesis import strategies as st

from symmetra import BiPoly, DomainError, GaussRat, InvalidInputError, MapKind, PlaneMap, classify, conic_symmetries, conics_similar, symmetries
from symmetra.bipoly import compose_real
from symmetra.conic import ConicClass, LineKind, ScaleFreeConics, line_circle_similar
from symmetra.numeric import I, ONE, ZERO
from symmetra.reports import unit_angle
from symmetra.verify import map_mu2, verify_map

from conftest import X, Y, plane_maps, rationals

HYPERBOLA = X**2 / 10 - 13 * X / 20 + mpq(1, 5) - Y**2 / 10


def units(report):
    return sorted(((str(r.unit), r.lam) for r in report.reflections))


def conics():
    return st.builds(
        lambda a, b, c, d, e, f: BiPoly({(2, 0): a, (1, 1): b, (0, 2): c, (1, 0): d, (0, 1): e, (0, 0): f}),
        rationals(), rationals(), rationals(), rationals(), rationals(), rationals(),
    ).filter(lambda q: q.degree == 2)


def finite_group(q):
    d = classify(q)
    if d.cls is ConicClass.CIRCLE:
        return False
    return not (d.cls is ConicClass.LINE_PAIR and d.line_kind is not LineKind.INTERSECTING)


class TestClassify:
    def test_circle(self):
        d = classify(X**2 + Y**2 - 1)
        assert d.cls is ConicClass.CIRCLE and d.center == ZERO

    def test_stirrup_hyperbola(self):
        d = classify(HYPERBOLA)
        assert d.cls is ConicClass.HYPERBOLA
        assert d.center == GaussRat(mpq(13, 4))
        # axes parallel to the coordinate axes: w^2 = 1
        assert d.axis_quadratic(ONE) == ZERO and d.axis_quadratic(-ONE) == ZERO

    def test_line_pairs(self):
        assert classify(X * (-Y + 1)).line_kind is LineKind.INTERSECTING
        assert classify(X**2 - 1).line_kind is LineKind.PARALLEL
        assert classify((X - Y) ** 2).line_kind is LineKind.COINCIDENT

    def test_other_classes(self):
        assert classify(X**2 + 2 * Y**2 - 1).cls is ConicClass.ELLIPSE
        assert classify(Y - X**2).cls is ConicClass.PARABOLA
        assert classify(X**2 + Y**2 + 1).real is False
        assert classify(X**2 + 2 * Y**2 + 1).cls is ConicClass.POINT_OR_EMPTY

    def test_degree_checked(self):
        with pytest.raises(InvalidInputError):
            classify(X**3)

    @given(conics(), plane_maps(unit=True))
    def test_equivariance(self, q, m):
        d = classify(q)
        moved = compose_real(q, m)
        e = classify(moved)
        assert e.cls is d.cls and e.line_kind is d.line_kind
        if d.center is not None:
            assert m.apply(e.center) == d.center


class TestConicSymmetries:
    def test_perpendicular_lines(self):
        r = conic_symmetries(X**2 - Y**2)
        assert [(rot.order, rot.lam) for rot in r.rotations] == [(2, 1), (4, -1)]
        assert units(r) == sorted([("1", 1), ("-1", 1), ("i", -1), ("-i", -1)])
        with mpmath.workdps(30):
            angles = sorted(unit_angle(ref.unit) for ref in r.reflections)
            for a, b in zip(angles, [0, mpmath.pi / 4, mpmath.pi / 2, 3 * mpmath.pi / 4]):
                assert abs(a - b) < 1e-25
        for ref in r.reflections:
            assert verify_map(X**2 - Y**2, X**2 - Y**2, ref.as_map(r.center)) == ref.lam

    def test_hyperbola(self):
        r = conic_symmetries(HYPERBOLA)
        assert r.center == GaussRat(mpq(13, 4))
        assert [(rot.order, rot.lam) for rot in r.rotations] == [(2, 1)]
        assert units(r) == sorted([("1", 1), ("-1", 1)])
        for m in r.reflection_maps():
            assert verify_map(HYPERBOLA, HYPERBOLA, m) == 1

    def test_parabola(self):
        r = conic_symmetries(Y - X**2)
        assert r.rotations == ()
        assert units(r) == [("-1", 1)]
        assert r.center == ZERO

    def test_infinite_groups_rejected(self):
        with pytest.raises(DomainError, match="circle"):
            conic_symmetries(X**2 + Y**2 - 1)
        with pytest.raises(DomainError, match="parallel"):
            conic_symmetries(X**2 - 1)

    @given(conics())
    def test_agrees_with_general_pipeline(self, q):
        assume(finite_group(q))
        d = classify(q)
        assume(d.real and d.cls is not ConicClass.POINT_OR_EMPTY)
        a, b = conic_symmetries(q), symmetries(q)
        assert a.center == b.center
        assert a.rotations == b.rotations
        assert units(a) == units(b)


class TestConicsSimilar:
    def test_ellipses(self):
        q1 = X**2 + 2 * Y**2 - 1
        q2 = (X - 1) ** 2 + 2 * (Y - 3) ** 2 - 4
        maps = conics_similar(q1, q2)
        assert len(maps) == 4
        for m in maps:
            assert verify_map(q1, q2, m) is not None
            assert map_mu2(m) == mpq(1, 4)
            assert m.apply(GaussRat(1, 3)) == ZERO
        back = conics_similar(q2, q1)
        assert len(back) == 4 and all(map_mu2(m) == 4 for m in back)
        assert all(m.apply(ZERO) == GaussRat(1, 3) for m in back)

    def test_eigenvalue_ratio_differs(self):
        assert conics_similar(X**2 + 2 * Y**2 - 1, X**2 + 3 * Y**2 - 1) == []

    def test_parabolas(self):
        maps = conics_similar(Y - X**2, 2 * Y - X**2)
        assert maps
        for m in maps:
            assert verify_map(Y - X**2, 2 * Y - X**2, m) is not None
        assert {map_mu2(m) for m in maps} == {mpq(1, 4)}

    def test_parabola_vs_ellipse(self):
        assert conics_similar(Y - X**2, X**2 + Y**2 / 4 - 1) == []

    def test_scale_free(self):
        with pytest.raises(ScaleFreeConics):
            conics_similar(X**2 - 2 * Y**2, X * Y)

    @given(conics(), plane_maps())
    def test_planted_similarity_found(self, q, m):
        assume(finite_group(q))
        d = classify(q)
        assume(d.cls is not ConicClass.POINT_OR_EMPTY)
        q2 = compose_real(q, m)
        try:
            maps = conics_similar(q, q2)
        except ScaleFreeConics:
            return
        assert any(m2 == m for m2 in maps)
        for m2 in maps:
            assert verify_map(q, q2, m2) is not None


class TestLineCircle:
    def test_quarter_turn(self):
        circle1, circle4 = X**2 + Y**2 - 1, X**2 + Y**2 - 4
        maps = line_circle_similar((X, circle1), (Y, circle4))
        assert maps
        assert all(map_mu2(m) == mpq(1, 4) for m in maps)
        assert PlaneMap(MapKind.DIRECT, I / 2) in maps
        back = line_circle_similar((Y, circle4), (X, circle1))
        assert PlaneMap(MapKind.DIRECT, -2 * I) in back

    def test_identical_pairs(self):
        pair = (X - 2, X**2 + Y**2 - 1)
        assert PlaneMap(MapKind.DIRECT, ONE) in line_circle_similar(pair, pair)

    def test_distance_invariant(self):
        circle = X**2 + Y**2 - 1
        assert line_circle_similar((X - 3, circle), (X - 5, circle)) == []

    def test_line_through_center(self):
        pair = (X, X**2 + Y**2 - 1)
        maps = line_circle_similar(pair, pair)
        assert len(maps) == 4
