import random

import pytest

from cuspworks.core import blowup_geometry as bg
from cuspworks.core.errors import (
    CenterNotLinear,
    NothingToTransform,
    PointNotOnVariety,
    UnboundVariable,
)
from cuspworks.core.poly_core import Polynomial, VarTable
from cuspworks.core.poly_parser import parse_polynomial
from cuspworks.core.singularity_lab import SingularityClass, classify_singularity


@pytest.fixture(scope="module")
def resolution():
    return bg.resolve_cusp()


def displayed(texts, variety):
    return tuple(parse_polynomial(t, variety.table) for t in texts)


def test_cusp_is_singular_only_at_the_origin():
    cusp = bg.cusp_system()
    assert not bg.is_smooth_at(cusp, bg.origin(cusp))
    assert bg.is_smooth_at(cusp, bg.origin(cusp, x=1, y=1, u=1, v=1))


def test_origin_accepts_every_coordinate_name(resolution):
    chart = resolution[0].charts[1].variety
    point = bg.origin(chart, x=1, y=1, u=1, v=1, mu0=1)
    assert point == {"x": 1, "y": 1, "u": 1, "v": 1, "mu0": 1}
    assert bg.is_smooth_at(chart, point)


def test_intermediate_node_is_nondegenerate(resolution):
    chart = resolution[0].charts[1].variety
    (equation,) = chart.equations
    germ = ("y", "u", "v", "mu0")
    found = classify_singularity(equation, [0, 0, 0, 0], germ)
    assert found.klass is SingularityClass.NODE
    assert found.hessian_rank == 4


def test_first_blowup_charts(resolution):
    first, _ = resolution
    chart1, chart0 = first.charts[1], first.charts[0]
    assert (chart1.substituted, chart1.exceptional, chart1.affine) == ("x", "u", "mu0")
    assert chart1.powers == (1,)
    assert chart1.variety.equations == displayed(
        ("mu0*y - v*((1+eps)*v - eps*u)",), chart1.variety
    )
    assert chart1.variety.relations == displayed(("x - mu0*u",), chart1.variety)
    assert (chart0.substituted, chart0.exceptional, chart0.affine) == ("u", "x", "mu1")
    assert chart1.variety.label == "cusp/bl{x,u}/mu-chart1"


def test_global_systems(resolution):
    first, second = resolution
    assert first.global_system.polynomials == displayed(
        ("mu1*x - mu0*u", "mu0*y - mu1*v*((1+eps)*v - eps*u)"), first.global_system
    )
    assert second.global_system.polynomials == displayed(
        ("mu1*x - mu0*u", "nu1*y - nu0*v", "mu0*nu0 - mu1*nu1*((1+eps)*v - eps*u)"),
        second.global_system,
    )
    assert second.global_system.table.names == (
        "x", "y", "u", "v", "mu0", "mu1", "nu0", "nu1"
    )
    assert second.global_system.label.endswith("-global")


def test_intermediate_chart_keeps_a_node(resolution):
    chart = resolution[0].charts[1].variety
    assert not bg.is_smooth_at(chart, bg.origin(chart))


def test_second_blowup_is_smooth_over_the_exceptional_fiber(resolution):
    second = resolution[1]
    fiber = bg.exceptional_fiber(second)
    rng = random.Random(7)
    for chart in second.charts:
        for point in bg.exceptional_samples(chart.variety, fiber, rng, count=3):
            assert bg.is_smooth_at(chart.variety, point)


def test_exceptional_fiber(resolution):
    fiber = bg.exceptional_fiber(resolution[1])
    assert str(fiber.equation) == "mu0*nu0"
    assert fiber.components == ("mu0", "nu0")
    assert fiber.intersections == (((0, 1), (0, 1)),)
    assert bg.fiber_dimension(resolution[1]) == 1


def test_flop_centers():
    table = bg.flop_center_table()
    assert [(offset, center.names) for offset, center in table] == [
        (0, ("x", "u")),
        (2, ("x", "v")),
        (3, ("y", "u")),
    ]


def test_charts_restore_the_original(resolution):
    first, second = resolution
    assert bg.chart_restores_original(bg.cusp_system(), first)
    assert bg.chart_restores_original(first.charts[1].variety, second)


def test_blowing_up_again_has_nothing_to_transform(resolution):
    first = resolution[0]
    for chart in first.charts:
        center = bg.BlowupCenter.of(chart.variety.table, "x", "u", "lam")
        with pytest.raises(NothingToTransform):
            bg.blowup_strict_transform(chart.variety, center)


def test_center_validation():
    cusp = bg.cusp_system()
    with pytest.raises(CenterNotLinear):
        bg.BlowupCenter.of(cusp.table, "x", "x")
    x = Polynomial.variable(cusp.table, "x")
    u = Polynomial.variable(cusp.table, "u")
    with pytest.raises(CenterNotLinear):
        bg.BlowupCenter((x * 2, u))
    with pytest.raises(CenterNotLinear):
        bg.BlowupCenter((x + u, u))
    other = VarTable(("x", "q"))
    with pytest.raises(CenterNotLinear):
        bg.blowup_strict_transform(cusp, bg.BlowupCenter.of(other, "x", "q"))
    with pytest.raises(NothingToTransform):
        bg.blowup_strict_transform(cusp, bg.BlowupCenter.of(cusp.table, "x", "y"))


def test_projective_names_cannot_be_reused(resolution):
    chart = resolution[0].charts[1].variety
    with pytest.raises(CenterNotLinear):
        bg.blowup_strict_transform(chart, bg.BlowupCenter.of(chart.table, "y", "v", "mu"))


def test_smoothness_needs_a_point_on_the_variety():
    cusp = bg.cusp_system()
    with pytest.raises(UnboundVariable):
        bg.is_smooth_at(cusp, {"x": 0})
    with pytest.raises(PointNotOnVariety):
        bg.is_smooth_at(cusp, bg.origin(cusp, x=1, y=1))


def test_homogenize():
    factor = bg.ProjectiveFactor("mu", 1)
    assert factor.affine == "mu0"
    assert factor.homogenizing == "mu1"
    table = VarTable(("v", "mu0", "mu1"))
    f = parse_polynomial("mu0^2*v + mu0 + v", table)
    assert bg.homogenize(f, factor, table) == parse_polynomial(
        "mu0^2*v + mu0*mu1 + v*mu1^2", table
    )
