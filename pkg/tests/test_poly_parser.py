from fractions import Fraction

import pytest

from cuspworks.core.cyclo_arith import EPS, EPS2, CycloNumber
from cuspworks.core.errors import ParseError
from cuspworks.core.poly_core import Polynomial, VarTable
from cuspworks.core.poly_parser import (
    parse_polynomial,
    parse_scalar,
    tokenize,
    variables_in_order,
)


def test_variables_in_order_of_appearance():
    assert variables_in_order("x^2 - y^3 - z^2 + w^3") == ("x", "y", "z", "w")
    assert variables_in_order("eps*w + y") == ("w", "y")


def test_cusp_parses_over_its_own_table():
    f = parse_polynomial("x^2-y^3-z^2+w^3")
    x, y, z, w = Polynomial.variables(f.table)
    assert f == x**2 - y**3 - z**2 + w**3


def test_juxtaposition_and_python_powers():
    table = VarTable(("x", "y"))
    assert parse_polynomial("2x y", table) == parse_polynomial("2*x*y", table)
    assert parse_polynomial("x**3", table) == parse_polynomial("x^3", table)


def test_unicode_names_and_symbols():
    table = VarTable(("lambda", "mu", "sigma"))
    assert parse_polynomial("λ + μ·σ", table) == parse_polynomial("lambda + mu*sigma", table)
    assert parse_polynomial("−ε", table) == parse_polynomial("-eps", table)


def test_eps_is_a_constant():
    table = VarTable(("v", "u"))
    f = parse_polynomial("(1+eps)*v - eps*u", table)
    v, u = Polynomial.variables(table)
    assert f == v * CycloNumber(1, 1) - u * EPS
    assert parse_polynomial("eps^2", table) == Polynomial.constant(table, EPS2)


def test_division_by_constants_and_units():
    table = VarTable(("s",), {"s"})
    s = Polynomial.variable(table, "s")
    assert parse_polynomial("s^3/27", table) == s**3 * Fraction(1, 27)
    assert parse_polynomial("9*s^-1", table) == s**-1 * 9
    assert parse_polynomial("1/s", table) == s**-1


@pytest.mark.parametrize(
    "text, position",
    [
        ("x +", 3),
        ("x $ y", 2),
        ("(x + y", 6),
        ("x ^ y", 4),
        ("x / 0", 2),
        ("q", 0),
    ],
)
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, VarTable(("x", "y")))
    assert info.value.position == position


def test_division_by_a_non_unit_is_a_parse_error():
    with pytest.raises(ParseError) as info:
        parse_polynomial("1/(x + 1)", VarTable(("x",)))
    assert info.value.position == 1


@pytest.mark.parametrize(
    "text, value",
    [
        ("3", CycloNumber(3)),
        ("-1/2", CycloNumber(Fraction(-1, 2))),
        ("1+2*eps", CycloNumber(1, 2)),
        ("0.25", CycloNumber(Fraction(1, 4))),
    ],
)
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


def test_parse_scalar_rejects_variables():
    with pytest.raises(ParseError):
        parse_scalar("y")


def test_tokenize_positions():
    tokens = tokenize("x**2 - 3")
    assert [(t.kind, t.text, t.position) for t in tokens] == [
        ("name", "x", 0),
        ("op", "^", 1),
        ("num", "2", 3),
        ("op", "-", 5),
        ("num", "3", 7),
        ("end", "", 8),
    ]
