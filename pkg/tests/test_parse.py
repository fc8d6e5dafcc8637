from fractions import Fraction

import pytest

from typeec.errors import ParseError, UnknownSymbol
from typeec.exactfield import constants
from typeec.parse import parse_nc, parse_point, parse_potential, parse_scalar

K = constants()


def test_examples():
    assert parse_scalar("1+sqrt3") == 1 + K["sqrt3"]
    assert parse_scalar("eta^8") == K["eta"] ** 8
    assert parse_scalar("5/3") == Fraction(5, 3)


def test_precedence_and_unary():
    assert parse_scalar("-2^2") == -4
    assert parse_scalar("(1+2)*3 - 4/2") == 7
    assert parse_scalar("eps^-1") == K["eps"] ** 2
    assert parse_scalar("qrt3^2") == parse_scalar("sqrt3")


@pytest.mark.parametrize("text,pos", [("1+", 2), ("2*)", 2), ("1 $ 2", 2), ("(1+2", 4), ("", 0)])
def test_errors_have_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_scalar(text)
    assert exc.value.pos == pos


def test_unknown_symbol():
    with pytest.raises(UnknownSymbol) as exc:
        parse_scalar("1 + foo")
    assert exc.value.pos == 4


def test_division_by_zero():
    with pytest.raises(ParseError):
        parse_scalar("1/(eps^3-1)")


def test_point():
    p = parse_point("eta^8:eta^4:1")
    assert p.coords[2] == K["eta"] ** -8
    with pytest.raises(ParseError):
        parse_point("1:2")
    with pytest.raises(ParseError) as exc:
        parse_point("1:2:bar")
    assert exc.value.pos == 4


def test_noncommutative():
    terms = parse_nc("eta^8 x^2z + c(xyx+yxy)", symbols={"c": 2})
    assert terms == {"xxz": K["eta"] ** 8, "xyx": 2, "yxy": 2}
    assert parse_nc("(x+y)^2") == {"xx": 1, "xy": 1, "yx": 1, "yy": 1}


def test_potential_degree_checked():
    with pytest.raises(ParseError):
        parse_potential("x^2")
    with pytest.raises(ParseError):
        parse_potential("x^z")


def test_print_parse_round_trip():
    for s in ("eta^8", "1+sqrt3", "cbrt2*qrt3 - 5/7*eta^2"):
        x = parse_scalar(s)
        assert parse_scalar(str(x)) == x
