# cuspworks/core/blowup_geometry.py
"""
Blow-ups of affine chart systems along coordinate-linear codimension-2 centres.

A chart is described by its equations plus graph relations: blowing up the
centre {a = b = 0} with projective coordinates (n0 : n1), n1*a = n0*b, gives

    chart 1 (n1 = 1):  a = n0*b, exceptional coordinate b
    chart 0 (n0 = 1):  b = n1*a, exceptional coordinate a

The eliminated variable stays in the chart with its relation, so a chart
records the full history and Jacobians are taken on equations and relations
together.  Strict transforms divide each equation by the largest power of the
exceptional coordinate (equation-wise, not ideal saturation).
"""

from __future__ import annotations

import logging
import random
from collections.abc import Mapping
from dataclasses import dataclass, field

from .cyclo_arith import CycloNumber, Scalar, matrix_rank, random_cyclo_number
from .errors import (
    CenterNotLinear,
    NothingToTransform,
    PointNotOnVariety,
    SymbolicMismatch,
    UnboundVariable,
)
from .poly_core import Polynomial, VarTable, univariate_division
from .poly_parser import parse_polynomial

logger = logging.getLogger(__name__)

CUSP_VARS = ("x", "y", "u", "v")
CUSP_TEXT = "x*y - u*v*((1+eps)*v - eps*u)"


@dataclass(frozen=True)
class ProjectiveFactor:
    """One P^1 factor (name0 : name1) and the coordinate set to 1 in this chart."""

    name: str
    chart: int

    @property
    def coordinates(self) -> tuple[str, str]:
        return (f"{self.name}0", f"{self.name}1")

    @property
    def affine(self) -> str:
        """The coordinate that survives as an affine variable."""
        return self.coordinates[1 - self.chart]

    @property
    def homogenizing(self) -> str:
        return self.coordinates[self.chart]


@dataclass(frozen=True)
class ChartVariety:
    """Equations and graph relations over one affine chart.

    Args:
        equations: strict-transform equations
        vars: ordered chart variables; every polynomial lives over VarTable(vars)
        label: blow-up history, e.g. "cusp/bl{x,u}/mu-chart1"
        relations: graph equations a - n*b of earlier blow-ups
        factors: the projective factors met so far, with the chart used in each
    """

    equations: tuple[Polynomial, ...]
    vars: tuple[str, ...]
    label: str
    relations: tuple[Polynomial, ...] = ()
    factors: tuple[ProjectiveFactor, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        table = self.table
        object.__setattr__(self, "equations", tuple(p.retable(table) for p in self.equations))
        object.__setattr__(self, "relations", tuple(p.retable(table) for p in self.relations))
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def table(self) -> VarTable:
        return VarTable(self.vars)

    @property
    def polynomials(self) -> tuple[Polynomial, ...]:
        return self.relations + self.equations

    def __str__(self) -> str:
        body = ", ".join(str(p) for p in self.polynomials)
        return f"{self.label}: {{{body}}}"


@dataclass(frozen=True)
class BlowupCenter:
    """Centre {a = b = 0}; both forms are distinct bare coordinates."""

    forms: tuple[Polynomial, Polynomial]
    factor: str = "mu"

    def __post_init__(self):
        if len(self.forms) != 2:
            raise CenterNotLinear(f"a centre needs exactly two forms, got {len(self.forms)}")
        names = tuple(_coordinate_name(form) for form in self.forms)
        if names[0] == names[1]:
            raise CenterNotLinear(f"centre forms {names[0]}, {names[1]} are dependent")

    @classmethod
    def of(cls, table: VarTable, a: str, b: str, factor: str = "mu") -> BlowupCenter:
        return cls(
            (Polynomial.variable(table, a), Polynomial.variable(table, b)),
            factor,
        )

    @property
    def names(self) -> tuple[str, str]:
        a, b = self.forms
        return (_coordinate_name(a), _coordinate_name(b))

    def __str__(self) -> str:
        a, b = self.names
        return f"{{{a},{b}}}"


def _coordinate_name(form: Polynomial) -> str:
    if len(form.terms) != 1 or form.degree() != 1:
        raise CenterNotLinear(f"centre form {form} is not a coordinate")
    ((exps, coeff),) = form.terms.items()
    if coeff != 1:
        raise CenterNotLinear(f"centre form {form} must have coefficient 1")
    return form.table.names[exps.index(1)]


@dataclass(frozen=True)
class BlowupChart:
    """One affine chart of a blow-up.

    ``substituted`` was replaced by ``affine * exceptional``; ``powers`` are the
    exceptional powers divided out of each equation.
    """

    variety: ChartVariety
    substituted: str
    exceptional: str
    affine: str
    powers: tuple[int, ...]


@dataclass(frozen=True)
class BlowupResult:
    center: BlowupCenter
    charts: tuple[BlowupChart, BlowupChart]
    global_system: ChartVariety

    def varieties(self) -> list[ChartVariety]:
        return [chart.variety for chart in self.charts] + [self.global_system]


def _strip_exceptional(f: Polynomial, exceptional: str) -> tuple[Polynomial, int]:
    """Divide out the largest power of ``exceptional`` dividing f."""
    if f.is_zero():
        return f, 0
    power = f.min_degree_in(exceptional)
    if power <= 0:
        return f, 0
    divisor = Polynomial.monomial(f.table, {exceptional: power})
    quotient, remainder = univariate_division(f, divisor, exceptional)
    if not remainder.is_zero():
        raise SymbolicMismatch(f"{exceptional}^{power} does not divide {f}")
    return quotient, power


def _chart(
    v: ChartVariety, center: BlowupCenter, index: int
) -> BlowupChart:
    a, b = center.names
    factor = ProjectiveFactor(center.factor, index)
    affine = factor.affine
    table = v.table.extend(affine)
    s = Polynomial.variable(table, affine)
    if index == 1:
        substituted, exceptional = a, b
    else:
        substituted, exceptional = b, a
    image = s * Polynomial.variable(table, exceptional)
    bindings = {substituted: image}

    equations, powers = [], []
    for f in v.equations:
        strict, power = _strip_exceptional(f.retable(table).substitute(bindings), exceptional)
        equations.append(strict)
        powers.append(power)
    relations = [
        _strip_exceptional(r.retable(table).substitute(bindings), exceptional)[0]
        for r in v.relations
    ]
    relations.append(Polynomial.variable(table, substituted) - image)

    variety = ChartVariety(
        tuple(equations),
        table.names,
        f"{v.label}/bl{center}/{center.factor}-chart{index}",
        tuple(relations),
        v.factors + (factor,),
    )
    logger.debug("Chart %s: %s", variety.label, variety)
    return BlowupChart(variety, substituted, exceptional, affine, tuple(powers))


def homogenize(f: Polynomial, factor: ProjectiveFactor, table: VarTable) -> Polynomial:
    """Multiply each term by the homogenizing coordinate up to the top degree of the affine one."""
    f = f.retable(table)
    if f.is_zero():
        return f
    top = f.degree_in(factor.affine)
    out = Polynomial.zero(table)
    for e, coeff in f.coefficients(factor.affine).items():
        out = out + coeff * Polynomial.monomial(
            table, {factor.affine: e, factor.homogenizing: top - e}
        )
    return out


def global_system(chart: ChartVariety) -> ChartVariety:
    """Bi-homogeneous closure of a chart in all of its projective factors."""
    projective = [n for factor in chart.factors for n in factor.coordinates]
    base = [n for n in chart.vars if n not in projective]
    table = VarTable(tuple(base) + tuple(projective))
    polys = []
    for f in chart.polynomials:
        g = f.retable(table)
        for factor in chart.factors:
            g = homogenize(g, factor, table)
        polys.append(g)
    label = chart.label.rsplit("-chart", 1)[0] + "-global"
    return ChartVariety(tuple(polys), table.names, label, (), chart.factors)


def blowup_strict_transform(v: ChartVariety, center: BlowupCenter) -> BlowupResult:
    """Blow up ``v`` along ``center``; both affine charts plus the global system."""
    a, b = center.names
    for name in (a, b):
        if name not in v.table:
            raise CenterNotLinear(f"centre coordinate {name!r} is not a variable of {v.label}")
    for coordinate in ProjectiveFactor(center.factor, 0).coordinates:
        if coordinate in v.table:
            raise CenterNotLinear(f"projective coordinate {coordinate!r} already in use")

    on_center = {a: 0, b: 0}
    if not any(f.substitute(on_center).is_zero() for f in v.equations):
        raise NothingToTransform(f"no equation of {v.label} vanishes on {center}")

    charts = (_chart(v, center, 0), _chart(v, center, 1))
    result = BlowupResult(center, charts, global_system(charts[1].variety))
    logger.info("Blew up %s along %s: %s", v.label, center, result.global_system)
    return result


def cusp_system() -> ChartVariety:
    """The threefold cusp in the coordinates where its three planes are visible."""
    f = parse_polynomial(CUSP_TEXT, CUSP_VARS)
    return ChartVariety((f,), CUSP_VARS, "cusp")


def resolve_cusp() -> tuple[BlowupResult, BlowupResult]:
    """Blow up {x = u = 0}, then the strict transform along {y = v = 0} in the mu1 = 1 chart."""
    cusp = cusp_system()
    first = blowup_strict_transform(cusp, BlowupCenter.of(cusp.table, "x", "u", "mu"))
    chart = first.charts[1].variety
    second = blowup_strict_transform(chart, BlowupCenter.of(chart.table, "y", "v", "nu"))
    return first, second


def jacobian_at(
    v: ChartVariety, point: Mapping[str, Scalar]
) -> list[list[CycloNumber]]:
    return [[f.derivative(n).evaluate(point) for n in v.vars] for f in v.polynomials]


def is_smooth_at(v: ChartVariety, point: Mapping[str, Scalar]) -> bool:
    """Jacobian criterion: full row rank at a point of the chart."""
    missing = [n for n in v.vars if n not in point]
    if missing:
        raise UnboundVariable(f"no value for {', '.join(missing)}")
    for f in v.polynomials:
        value = f.evaluate(point)
        if not value.is_zero():
            raise PointNotOnVariety(f"{f} takes the value {value} at the point")
    rank = matrix_rank(jacobian_at(v, point))
    logger.debug("Jacobian rank %d of %d on %s", rank, len(v.polynomials), v.label)
    return rank == len(v.polynomials)


def origin(variety: ChartVariety, /, **overrides: Scalar) -> dict[str, Scalar]:
    point: dict[str, Scalar] = {n: 0 for n in variety.vars}
    point.update(overrides)
    return point


@dataclass(frozen=True)
class ExceptionalFiber:
    """Fiber over the base point, inside the product of the projective factors.

    ``components`` are coordinates c with the component {c = 0};
    ``intersections`` are points given as one (c0 : c1) pair per factor.
    """

    equation: Polynomial
    components: tuple[str, ...]
    intersections: tuple[tuple[tuple[int, int], ...], ...]


def _fiber_equations(result: BlowupResult) -> list[Polynomial]:
    system = result.global_system
    projective = {n for factor in system.factors for n in factor.coordinates}
    base_point = {n: 0 for n in system.vars if n not in projective}
    restricted = [f.substitute(base_point) for f in system.polynomials]
    return [f for f in restricted if not f.is_zero()]


def exceptional_fiber(result: BlowupResult) -> ExceptionalFiber:
    """Fiber of the composite over the singular point; two P^1 meeting once."""
    factors = result.global_system.factors
    equations = _fiber_equations(result)
    if len(equations) != 1 or len(equations[0].terms) != 1:
        raise SymbolicMismatch(
            f"fiber over the origin is not cut out by one monomial: {equations}"
        )
    (equation,) = equations
    components = equation.variables_used()

    owner = {c: factor for factor in factors for c in factor.coordinates}
    intersections = []
    for i, first in enumerate(components):
        for second in components[i + 1 :]:
            if owner[first].name == owner[second].name:
                continue
            point = []
            for factor in factors:
                zero = next((c for c in (first, second) if c in factor.coordinates), None)
                if zero is None:
                    break
                point.append((0, 1) if zero == factor.coordinates[0] else (1, 0))
            else:
                intersections.append(tuple(point))

    fiber = ExceptionalFiber(equation, components, tuple(intersections))
    if len(fiber.components) != 2 or len(fiber.intersections) != 1:
        raise SymbolicMismatch(
            f"expected two components meeting once, got {fiber.components} "
            f"meeting in {fiber.intersections}"
        )
    logger.info("Exceptional fiber {%s = 0}", equation)
    return fiber


def fiber_dimension(result: BlowupResult) -> int:
    """Dimension of the fiber over the origin: projective factors minus cutting equations."""
    return len(result.global_system.factors) - len(_fiber_equations(result))


FLOP_CENTERS = ((0, ("x", "u")), (2, ("x", "v")), (3, ("y", "u")))


def flop_center_table() -> list[tuple[int, BlowupCenter]]:
    """Centres of the small resolutions related by flops, each checked on the cusp."""
    cusp = cusp_system()
    table = []
    for offset, (a, b) in FLOP_CENTERS:
        center = BlowupCenter.of(cusp.table, a, b, "mu")
        dimension = fiber_dimension(blowup_strict_transform(cusp, center))
        if dimension != 1:
            raise SymbolicMismatch(
                f"blow-up along {center} has a {dimension}-dimensional fiber over 0"
            )
        table.append((offset, center))
    return table


def chart_restores_original(v: ChartVariety, result: BlowupResult) -> bool:
    """Undo each chart substitution through its inverse rational map.

    With affine = substituted / exceptional, exceptional^k * strict must give
    back the original equation.
    """
    for chart in result.charts:
        target = v.table.with_laurent(chart.exceptional)
        inverse = {
            chart.affine: Polynomial.variable(target, chart.substituted)
            * Polynomial.monomial(target, {chart.exceptional: -1})
        }
        for original, strict, power in zip(
            v.equations, chart.variety.equations, chart.powers, strict=True
        ):
            restored = strict.substitute(
                {n: Polynomial.variable(target, n) for n in v.vars} | inverse, target
            )
            restored = restored * Polynomial.monomial(target, {chart.exceptional: power})
            if restored != original.retable(target):
                logger.debug("Chart %s does not restore %s", chart.variety.label, original)
                return False
    return True


def exceptional_samples(
    v: ChartVariety, fiber: ExceptionalFiber, rng: random.Random, count: int = 5
) -> list[dict[str, Scalar]]:
    """Exact points of each fiber component visible in the chart, plus their meeting point."""
    affine = [factor.affine for factor in v.factors]
    points = [origin(v)]
    for component in fiber.components:
        if component not in affine:
            continue
        others = [c for c in affine if c != component]
        for _ in range(count):
            values = {c: random_cyclo_number(rng) for c in others}
            points.append(origin(v, **values))
    return points
