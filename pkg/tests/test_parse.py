import pytest
from gmpy2 import mpq
from hypothesis import given

from symmetra import BiPoly, ParseError, parse_poly
from symmetra.parse import MAX_EXPONENT, tokenize

from conftest import QUINTIC, SEXTIC, X, Y, bipolys


def test_sextic():
    assert parse_poly("x^6 - 15*x^4*y^2 - 2*x^3 + 15*x^2*y^4 + 6*x*y^2 - y^6") == SEXTIC


def test_quintic():
    assert parse_poly("1/10*x^5 - 1/2*x^3*y^2 + 1/2*x^2 + 1") == QUINTIC


def test_dangling_caret():
    with pytest.raises(ParseError) as info:
        parse_poly("x^")
    assert info.value.position == 2


@pytest.mark.parametrize(
    "text, expected",
    [
        ("-x^2", -(X**2)),
        ("2^3^2", BiPoly.const(512)),
        ("(x + y)^2", X**2 + 2 * X * Y + Y**2),
        ("x/2 - y/3", X / 2 - Y / 3),
        ("-(x - 1)*(x + 1)", 1 - X**2),
        ("x^(2)", X**2),
        ("+y", Y),
        ("x - -y", X + Y),
        ("2*x*y/4", X * Y / 2),
        ("x^0", BiPoly.const(1)),
    ],
)
def test_grammar(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize(
    "text, position",
    [
        ("0.5*x", 0),
        ("2x", 1),
        ("x*(y", 4),
        ("x / y", 2),
        ("x / (1 - 1)", 2),
        ("z + 1", 0),
        ("x^y", 2),
        ("x^-1", 2),
        ("", 0),
        ("x )", 2),
    ],
)
def test_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert info.value.position == position


def test_decimal_message_suggests_fraction():
    with pytest.raises(ParseError, match="fraction"):
        parse_poly("x + 0.25")


def test_implicit_multiplication_expects_star():
    with pytest.raises(ParseError) as info:
        parse_poly("3 x")
    assert "*" in info.value.expected


def test_exponent_cap():
    with pytest.raises(ParseError):
        parse_poly(f"x^{MAX_EXPONENT + 1}")
    with pytest.raises(ParseError):
        parse_poly("x^2^20")


def test_tokens():
    kinds = [t.kind for t in tokenize("12*x - y")]
    assert kinds == ["num", "op", "name", "op", "name", "end"]


def test_big_rationals_exact():
    assert parse_poly("123456789012345678901234567890/7*x") == X * mpq(123456789012345678901234567890, 7)


@given(bipolys(max_degree=8, max_terms=12))
def test_print_parse_round_trip(f):
    assert parse_poly(str(f)) == f
