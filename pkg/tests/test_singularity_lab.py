from fractions import Fraction

import pytest

from cuspworks.core.cyclo_arith import EPS, EPS2, ONE, ZERO, CycloNumber
from cuspworks.core.errors import (
    ExactFactorizationFailed,
    NotACriticalPoint,
    NotMonomialReducible,
)
from cuspworks.core.poly_core import Polynomial, VarTable, monomial_str
from cuspworks.core.poly_parser import parse_polynomial
from cuspworks.core.singularity_lab import (
    CUSP_TEXT,
    GERM_TABLE,
    DeformationPoint,
    GermPresentation,
    SingularityClass,
    classify_singularity,
    eliminated_pair,
    fiber_product_singular_locus,
    hyperplane_normal_form,
    miniversal_family,
    numeric_singular_locus,
    singular_conditions,
    singular_locus,
    three_node_points,
    tjurina_basis,
    versal_family,
)


def basis_names(text, variables=None):
    germ = GermPresentation.parse(text, variables)
    return sorted(monomial_str(germ.f.table, m) for m in tjurina_basis(germ))


# --- Tjurina algebras ---


@pytest.mark.parametrize(
    "text, expected",
    [
        (CUSP_TEXT, ["1", "w", "y", "y*w"]),
        ("x^2 - y^3", ["1", "y"]),
        ("x^2 + y^2 + z^2", ["1"]),
        ("x", []),
        ("x + 1", []),
    ],
)
def test_tjurina_basis(text, expected):
    assert basis_names(text) == expected


def test_tjurina_basis_at_a_shifted_point():
    germ = GermPresentation(parse_polynomial("x^2 - (y - 1)^3"), base_point=(0, 1))
    assert len(tjurina_basis(germ)) == 2


def test_non_monomial_jacobian_is_refused():
    with pytest.raises(NotMonomialReducible):
        tjurina_basis(GermPresentation.parse("x^3 + y^3 + x*y^2"))


def test_miniversal_family_of_the_cusp_uses_conventional_names():
    family = miniversal_family(GermPresentation.parse(CUSP_TEXT))
    assert family == versal_family()
    assert family.table.names[4:] == ("lambda", "mu", "nu", "sigma")


def test_miniversal_family_of_a_generic_germ_gets_fresh_parameters():
    family = miniversal_family(GermPresentation.parse("x^2 + y^4"))
    assert family.table.names == ("x", "y", "t0", "t1", "t2")
    assert family == parse_polynomial("x^2 + y^4 + t0 + t1*y + t2*y^2", family.table)


# --- deformation points ---


def test_tuple_convention():
    point = DeformationPoint.from_tuple(-10, 9, -9, 6)
    assert point.nu == CycloNumber(9)
    assert point.as_tuple() == (-10, 9, -9, 6)
    assert str(point) == "(-10, 9, -9, 6)"
    assert point.to_dict()["nu"] == "9"
    assert point.to_dict()["tuple"] == ["-10", "9", "-9", "6"]


def test_symbolic_points_specialize():
    point = DeformationPoint.symbolic()
    assert not point.is_exact
    exact = point.substitute({"lambda": 1, "mu": 2, "nu": 3, "sigma": 4})
    assert exact.is_exact
    assert exact == DeformationPoint(1, 2, 3, 4)


def test_versal_family_over_a_point():
    f = versal_family(DeformationPoint(1, 2, 3, 4))
    assert f == parse_polynomial("x^2 - y^3 - z^2 + w^3 + 1 + 2*y - 3*w + 4*y*w", GERM_TABLE)


def test_singular_conditions_and_elimination():
    family = versal_family(DeformationPoint.symbolic(laurent=("sigma",)))
    table = family.table
    cond1, cond2, cond3 = singular_conditions(family)
    assert cond1 == parse_polynomial("3*y^2 - sigma*w - mu", table)
    assert cond2 == parse_polynomial("3*w^2 + sigma*y - nu", table)
    assert cond3 == parse_polynomial("sigma*y*w + 2*mu*y - 2*nu*w + 3*lambda", table)

    r1, r2, w_of_y = eliminated_pair(family)
    assert r1 == parse_polynomial("27*y^4 - 18*mu*y^2 + sigma^3*y + 3*mu^2 - nu*sigma^2", table)
    assert r2 == parse_polynomial(
        "3*sigma*y^3 - 6*nu*y^2 + mu*sigma*y + 2*mu*nu + 3*lambda*sigma", table
    )
    assert w_of_y == parse_polynomial("(3*y^2 - mu)*sigma^-1", table)


# --- classification ---


def test_classify_the_cusp():
    f = parse_polynomial(CUSP_TEXT, GERM_TABLE)
    c = classify_singularity(f, (0, 0, 0, 0))
    assert c.klass is SingularityClass.CA2_IIXII
    assert c.hessian_rank == 2
    assert c.corank_data == parse_polynomial("-y^3 + w^3", GERM_TABLE)


def test_classify_node_and_i1xii():
    node = parse_polynomial("x^2 - y^3 - z^2 + w^3 + 3*y^2 + 3*w^2", GERM_TABLE)
    assert classify_singularity(node, (0, 0, 0, 0)).klass is SingularityClass.NODE
    i1 = parse_polynomial("x^2 - y^3 - z^2 + w^3 + 3*w^2", GERM_TABLE)
    c = classify_singularity(i1, (0, 0, 0, 0))
    assert c.klass is SingularityClass.CA2_I1XII
    assert c.hessian_rank == 3


def test_classify_rejects_regular_points():
    f = parse_polynomial(CUSP_TEXT, GERM_TABLE)
    with pytest.raises(NotACriticalPoint):
        classify_singularity(f, (1, 0, 0, 0))


# --- singular loci ---


def test_three_nodes_at_sigma_three():
    records = singular_locus(DeformationPoint(1, 0, 0, 3))
    assert [r.coords for r in records] == sorted(
        three_node_points(CycloNumber(3)), key=lambda p: [c.sort_key() for c in p]
    )
    assert {r.coords for r in records} == {
        (ZERO, -ONE, ZERO, ONE),
        (ZERO, -EPS, ZERO, EPS2),
        (ZERO, -EPS2, ZERO, EPS),
    }
    assert all(r.klass is SingularityClass.NODE and r.hessian_rank == 4 for r in records)


def test_central_fiber_has_one_cusp():
    (record,) = singular_locus(DeformationPoint())
    assert record.klass is SingularityClass.CA2_IIXII
    assert record.multiplicity == 4
    assert str(record.corank_data) == "-y^3 + w^3"


def test_smooth_fiber():
    assert singular_locus(DeformationPoint(1, 0, 0, 0)) == []


def test_symbolic_sigma_on_the_three_node_curve():
    table = VarTable(("sigma",), {"sigma"})
    sigma = Polynomial.variable(table, "sigma")
    records = singular_locus(DeformationPoint(sigma**3 / 27, 0, 0, sigma))
    assert len(records) == 3
    assert {r.coords for r in records} == set(three_node_points(sigma))


@pytest.mark.parametrize("a, b", [(1, 2), (0, 1), (1, 0), (0, 0), (EPS, Fraction(1, 2))])
def test_hyperplane_normal_form(a, b):
    point, shifted = hyperplane_normal_form(a, b)
    assert point.sigma == ZERO
    expected = parse_polynomial(
        f"x^2 - y^3 - z^2 + w^3 - 3*({a})*y^2 + 3*({b})*w^2", GERM_TABLE
    )
    assert shifted == expected
    records = singular_locus(point)
    assert 1 <= len(records) <= 2
    center = (ZERO, CycloNumber.coerce(a), ZERO, CycloNumber.coerce(b))
    assert any(r.coords == center for r in records)


def test_exact_and_numeric_agree(rng, quick):
    for _ in range(quick.locus_draws):
        sigma = CycloNumber(rng.randint(-9, 9), rng.randint(-9, 9))
        if sigma.is_zero():
            continue
        point = DeformationPoint(sigma**3 / 27, 0, 0, sigma)
        exact = singular_locus(point, profile=quick)
        numeric = numeric_singular_locus(
            *(c.to_complex() for c in point.coordinates()), profile=quick
        )
        assert len(exact) == len(numeric) == 3
        for record in exact:
            target = [c.to_complex() for c in record.coords]
            assert any(
                all(abs(t - c) < 1e-8 for t, c in zip(target, other.coords)) for other in numeric
            )
        assert all(r.klass is SingularityClass.NODE for r in numeric)


def test_non_split_fiber_raises_with_a_fallback():
    with pytest.raises(ExactFactorizationFailed) as info:
        singular_locus(DeformationPoint(0, 6, 6, 0))
    assert info.value.fallback == "--mode numeric"


def test_numeric_mode_needs_exact_input_and_known_mode():
    with pytest.raises(ValueError):
        singular_locus(DeformationPoint.symbolic(), mode="numeric")
    with pytest.raises(ValueError):
        singular_locus(DeformationPoint(), mode="fast")


# --- fiber product ---


def test_fiber_product_over_sixth_roots():
    points = fiber_product_singular_locus(parse_polynomial("t^6 - 1"))
    assert len(points) == 6
    assert {p.t0 for p in points} == {u * s for u in (ONE, EPS, EPS2) for s in (1, -1)}
    assert all(p.isolated for p in points)


def test_fiber_product_multiple_root_is_not_isolated():
    points = fiber_product_singular_locus(parse_polynomial("(t - 1)^2*(t + 2)"))
    orders = {p.t0: p.vanishing_order for p in points}
    assert orders == {CycloNumber(1): 2, CycloNumber(-2): 1}
    assert {p.t0: p.isolated for p in points} == {CycloNumber(1): False, CycloNumber(-2): True}


def test_fiber_product_numeric_mode():
    points = fiber_product_singular_locus(parse_polynomial("t^6 - 1"), mode="numeric")
    assert len(points) == 6
    assert all(abs(p.t0**6 - 1) < 1e-9 for p in points)


def test_fiber_product_input_checks():
    with pytest.raises(ValueError):
        fiber_product_singular_locus(parse_polynomial("t^7 - 1"))
    with pytest.raises(ValueError):
        fiber_product_singular_locus(parse_polynomial("t - s"))
    assert fiber_product_singular_locus(parse_polynomial("5")) == []
