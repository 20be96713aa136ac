import pytest

from cuspworks.core import namikawa_verifier as nv
from cuspworks.core.cyclo_arith import EPS, EPS2, ONE, CycloNumber
from cuspworks.core.errors import SymbolicMismatch, ZeroScale
from cuspworks.core.poly_core import Polynomial
from cuspworks.core.poly_parser import parse_polynomial
from cuspworks.core.singularity_lab import (
    DeformationPoint,
    SingularityClass,
    singular_locus,
    versal_family,
)


def test_equal_up_to_unit():
    table = nv.SCALE_TABLE.extend("nu")
    a = parse_polynomial("3*sigma^-2*(nu - sigma)", table)
    b = parse_polynomial("nu - sigma", table)
    assert nv.equal_up_to_unit(a, b)
    assert not nv.equal_up_to_unit(a, b + 1)
    assert not nv.equal_up_to_unit(parse_polynomial("nu^2 - nu*sigma", table), b)
    assert nv.equal_up_to_unit(Polynomial.zero(table), Polynomial.zero(table))


# --- S ---


def test_product_deformations_fill_the_hyperplane():
    locus = nv.induced_image_s()
    sigma = Polynomial.variable(nv.PARAMETER_TABLE, "sigma")
    assert locus.equations == (sigma,)
    assert nv.induced_point(5, 2, 3, 4) == DeformationPoint(2, 2, 4, 0)
    assert locus.contains(nv.induced_point(1, EPS, 0, -7))


def test_family_coordinates_reads_back_the_point():
    assert nv.family_coordinates(versal_family()) == DeformationPoint.symbolic()
    point = DeformationPoint(1, EPS, 3, -2)
    family = versal_family(point).retable(versal_family().table)
    assert nv.family_coordinates(family).substitute({}) == point


def test_family_coordinates_rejects_other_deformations():
    family = versal_family()
    extra = family + Polynomial.variable(family.table, "x") * Polynomial.variable(
        family.table, "y"
    )
    with pytest.raises(SymbolicMismatch):
        nv.family_coordinates(extra)


# --- three nodes ---


def test_remainder_conditions_are_the_cleared_coefficients():
    conditions = nv.remainder_conditions()
    expected = [parse_polynomial(t, nv.LAURENT_PARAMETERS) for t in nv.CONDITION_TEXTS]
    assert conditions == expected


def test_four_families_and_their_values_at_sigma_six():
    locus = nv.three_node_locus()
    assert [s.name for s in locus.solutions] == ["Lambda0", "Lambda1", "Lambda2", "Lambda3"]
    lambda1 = locus.solutions[1].point.substitute({"sigma": 6})
    assert lambda1 == DeformationPoint(-10, 9, 9, 6)
    assert lambda1.as_tuple() == (-10, 9, -9, 6)
    lambda0 = locus.solutions[0].point.substitute({"sigma": 3})
    assert lambda0 == DeformationPoint(1, 0, 0, 3)


def test_collapsed_family_has_one_degenerate_point():
    (record,) = singular_locus(DeformationPoint(-10, 9, 9, 6))
    assert record.coords == (0, 1, 0, -1)
    assert record.multiplicity == 3
    assert record.hessian_rank == 3
    assert record.klass is SingularityClass.DEGENERATE_OTHER


def test_split_family_has_three_nodes():
    records = singular_locus(DeformationPoint(1, 0, 0, 3))
    assert len(records) == 3
    assert all(r.klass is SingularityClass.NODE for r in records)


def test_curve_c():
    curve = nv.curve_c()
    at_one = curve.parametrizations[0].point.substitute({"sigma": 1})
    assert curve.contains(at_one)
    assert curve.dimension_at(at_one) == 1
    assert curve.meets_hyperplane_s_only_at_origin()
    assert not curve.contains(DeformationPoint(1, 0, 0, 1))
    with pytest.raises(SymbolicMismatch):
        curve.dimension_at(DeformationPoint(1, 0, 0, 1))


def test_curve_c_is_transversal_to_s():
    report = nv.curve_c_transversality()
    assert report.tangent == (0, 0, 0, 1)
    assert report.s_value == ONE
    assert report.transversal


# --- the three-line family ---


def test_plane_membership():
    assert nv.FaParameters(-EPS, 1, 0).on_plane
    assert not nv.FaParameters(1, 0, 0).on_plane
    assert nv.FaParameters(1, 2, 3).s == CycloNumber(1) + EPS * 2 + EPS2 * 3


def test_expansion_matches_the_displayed_family():
    assert nv.fa_family(nv.FaParameters.symbolic()) == nv.displayed_fa()


def test_lines_off_the_plane_give_three_nodes():
    records = nv.fa_singular_points(nv.FaParameters(1, 0, 0, 2, -1))
    assert len(records) == 3
    assert all(r.klass is SingularityClass.NODE and r.multiplicity == 1 for r in records)


def test_concurrent_lines_give_one_cusp():
    (record,) = nv.fa_singular_points(nv.FaParameters(-EPS, 1, 0))
    assert record.klass is SingularityClass.CA2_IIXII
    assert record.multiplicity == 3
    assert record.hessian_rank == 2


def test_closed_points_coincide_exactly_on_the_plane():
    assert nv.coincidence_on_plane()


def test_scaled_point_has_rank_one():
    p = nv.FaParameters(1, 2, 3, k=2)
    s = p.s
    assert nv.scaled_point(p).lines == (s * 2, s * EPS2 * 2, s * EPS * 2)


def test_map_g():
    p = nv.FaParameters(1, 0, 0, k=1)
    assert nv.map_g(p) == DeformationPoint(-1, 0, 0, -3)
    assert nv.map_g(nv.FaParameters(-EPS, 1, 0)) == DeformationPoint()
    with pytest.raises(ZeroScale):
        nv.map_g(nv.FaParameters(1, 0, 0, k=0))


def test_pullback_and_image():
    assert nv.pullback_identity(nv.FaParameters(1, 2, 3, 0, 0, k=EPS))
    assert nv.pullback_identity(nv.FaParameters.symbolic())
    assert nv.image_meets_s()


# --- deformation diagram ---


def test_friedman_rows_are_exact():
    report = nv.friedman_report()
    assert report.top_row == (3, 3, 6, 27, 21)
    assert report.bottom_row == (3, 19, 24, 27, 19)
    assert report.row_exactness == (("top", 0), ("bottom", 0))
    assert report.cusps == 6
    assert report.tjurina == 4
    assert report.exceptional_curves == 12
    payload = report.to_dict()
    assert payload["dimdef_X"] == payload["t1_X"] == 19
    assert payload["dimdef_Xhat"] == 3
    assert payload["h0_R1"] == 6


def test_alternating_sum():
    assert nv.alternating_sum([3, 3, 6, 27, 21]) == 0
    assert nv.alternating_sum([1, 2]) == -1
