import pytest
from hypothesis import given

from conftest import X, T, ratx
from ppvkit.field import RatX
from ppvkit.parse import ParseError, parse_expr


def test_simple():
    assert parse_expr("2*t/(x^2+t)") == 2 * T / (X ** 2 + T)


def test_picard_fuchs_p():
    p = parse_expr("-(1/2)*(1/x + 1/(x-1) + 1/(x-t))")
    assert p == -(1 / X + 1 / (X - 1) + 1 / (X - T)) / 2


def test_precedence():
    assert parse_expr("1-2-3") == RatX(-4)
    assert parse_expr("8/2/2") == RatX(2)
    assert parse_expr("-x^2") == -(X ** 2)


@pytest.mark.parametrize("s, msg, pos", [
    ("x^(-1)", "exponent must be a nonnegative integer literal", 2),
    ("x^-1", "exponent must be a nonnegative integer literal", 2),
    ("x + y", "unknown variable 'y'", 4),
    ("1/(x-x)", "division by zero", 1),
    ("(x+1", "expected ')'", 4),
    ("", "empty expression", 0),
    ("x +", "unexpected end of input", 3),
    ("x x", "unexpected 'x'", 2),
    ("2 # 3", "unexpected '#'", 2),
])
def test_errors(s, msg, pos):
    with pytest.raises(ParseError) as ei:
        parse_expr(s)
    assert msg in str(ei.value)
    assert ei.value.pos == pos


def test_not_a_string():
    with pytest.raises(TypeError):
        parse_expr(3)


@given(ratx())
def test_round_trip(v):
    assert parse_expr(str(v)) == v
    assert str(parse_expr(str(v))) == str(v)
