import numpy as np
import pytest

from cuspworks.core.cyclo_arith import EPS, EPS2, ONE, CycloNumber
from cuspworks.core.errors import ExactFactorizationFailed
from cuspworks.core.poly_core import Polynomial, VarTable
from cuspworks.core.poly_parser import parse_polynomial
from cuspworks.core.root_finder import (
    dense_coefficients,
    linear_factor_roots,
    numeric_roots,
    require_split,
    root_multiplicity,
)

Y = VarTable(("y",))


def constant_roots(search):
    return {r.constant_value(): m for r, m in search.roots}


def test_sixth_roots_of_unity():
    search = require_split(parse_polynomial("t^6 - 1"), "t")
    roots = constant_roots(search)
    assert set(roots) == {u * s for u in (ONE, EPS, EPS2) for s in (1, -1)}
    assert all(m == 1 for m in roots.values())
    assert search.complete


def test_multiplicities():
    f = parse_polynomial("y^2*(y - 1/2)^3*(y + eps)", Y)
    roots = constant_roots(linear_factor_roots(f, "y"))
    assert roots == {CycloNumber(0): 2, CycloNumber(1, 0) / 2: 3, -EPS: 1}


def test_irreducible_quadratic_does_not_split():
    f = parse_polynomial("y^2 - 2", Y)
    search = linear_factor_roots(f, "y")
    assert search.roots == ()
    assert not search.complete
    with pytest.raises(ExactFactorizationFailed):
        require_split(f, "y")


def test_large_rational_root_is_recovered():
    f = parse_polynomial("(y - 1234567/3)*(y + 1)", Y)
    roots = constant_roots(require_split(f, "y"))
    assert CycloNumber(1234567) / 3 in roots


def test_weighted_homogeneous_roots_are_lifted():
    table = VarTable(("nu", "sigma"), {"sigma"})
    f = parse_polynomial("nu*(64*nu^3 - sigma^6)", table)
    search = require_split(f, "nu")
    sigma = Polynomial.variable(table, "sigma")
    quarter = sigma**2 / 4
    assert {r for r, _ in search.roots} == {quarter * 0, quarter, quarter * EPS, quarter * EPS2}


def test_two_parameters_are_refused():
    table = VarTable(("y", "a", "b"))
    with pytest.raises(ExactFactorizationFailed):
        linear_factor_roots(parse_polynomial("y - a - b", table), "y")


def test_zero_polynomial_is_refused():
    with pytest.raises(ExactFactorizationFailed):
        linear_factor_roots(Polynomial.zero(Y), "y")


def test_root_multiplicity():
    f = parse_polynomial("(y - eps)^4*(y + 1)", Y)
    assert root_multiplicity(f, "y", EPS) == 4
    assert root_multiplicity(f, "y", ONE) == 0


def test_dense_coefficients():
    f = parse_polynomial("3*y^3 - y + 2", Y)
    assert dense_coefficients(f, "y") == [3, 0, -1, 2]


def test_numeric_roots_are_polished():
    roots = numeric_roots([1, 0, 0, -8])
    assert np.allclose(np.sort_complex(roots ** 3), [8, 8, 8])
    assert numeric_roots([0, 0, 5]).size == 0
