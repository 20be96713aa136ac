# cuspworks/core/namikawa_verifier.py
"""
Exact re-derivation of the loci cut out in the base of the versal family of
the threefold cusp.

- S = {sigma = 0}: image of the deformations induced by the two cuspidal
  curves of a fiber product.
- C = {sigma^3 - 27*lambda = mu = nu = 0}: the curve of fibers with three
  nodes, met transversally by S at the origin only.
- The three-line family F_a, its nodes, and the map g whose image is C.
- The dimension bookkeeping of the deformation diagram of a fiber product
  with six cusps.

Every identity here is an equality of ``Polynomial`` term maps; a failure
raises ``SymbolicMismatch``.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

from .blowup_geometry import exceptional_fiber, resolve_cusp
from .cyclo_arith import EPS, EPS2, ONE, ZERO, CycloNumber, matrix_rank, nullspace
from .errors import SymbolicMismatch, ZeroScale
from .poly_core import Polynomial, VarTable, univariate_division
from .poly_parser import parse_polynomial
from .root_finder import linear_factor_roots
from .singularity_lab import (
    CUSP_TEXT,
    GERM_TABLE,
    GERM_VARS,
    PARAMETER_NAMES,
    PARAMETER_TABLE,
    Coordinate,
    DeformationPoint,
    GermPresentation,
    SingularPointRecord,
    classify_singularity,
    eliminated_pair,
    fiber_product_singular_locus,
    tjurina_basis,
    versal_family,
)
from .solver_profiles import DEFAULT_PROFILE, SolverProfile

logger = logging.getLogger(__name__)

SCALE_TABLE = VarTable(("sigma",), frozenset({"sigma"}))
LAURENT_PARAMETERS = PARAMETER_TABLE.with_laurent("sigma")


def _lift(value: Coordinate, table: VarTable) -> Polynomial:
    if isinstance(value, Polynomial):
        return value.retable(table)
    return Polynomial.constant(table, value)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SymbolicMismatch(message)


def equal_up_to_unit(a: Polynomial, b: Polynomial) -> bool:
    """True when a = c * m * b for a nonzero constant c and a monomial m in Laurent variables."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    lead_a, lead_b = max(a.terms), max(b.terms)
    shift = tuple(p - q for p, q in zip(lead_a, lead_b, strict=True))
    flags = a.table.laurent_flags
    if any(e and not flag for e, flag in zip(shift, flags, strict=True)):
        return False
    unit = Polynomial(a.table, {shift: a.terms[lead_a] / b.terms[lead_b]})
    return a == unit * b


# --- loci in the base ---


@dataclass(frozen=True)
class Parametrization:
    name: str
    point: DeformationPoint


@dataclass(frozen=True)
class LocusDescription:
    """Equations in (lambda, mu, nu, sigma) and named parametrizations lying on them."""

    equations: tuple[Polynomial, ...]
    parametrizations: tuple[Parametrization, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(
            self, "equations", tuple(e.retable(PARAMETER_TABLE) for e in self.equations)
        )
        object.__setattr__(self, "parametrizations", tuple(self.parametrizations))

    def residuals(self, point: DeformationPoint) -> list[Coordinate]:
        bindings = dict(zip(PARAMETER_NAMES, point.coordinates(), strict=True))
        if point.is_exact:
            return [e.evaluate(bindings) for e in self.equations]
        return [e.substitute(bindings, point.parameter_table) for e in self.equations]

    def contains(self, point: DeformationPoint) -> bool:
        return all(r.is_zero() for r in self.residuals(point))

    def check(self) -> None:
        """Every parametrization satisfies every equation identically."""
        for param in self.parametrizations:
            _require(self.contains(param.point), f"{param.name} = {param.point} is off the locus")

    def jacobian_rank_at(self, point: DeformationPoint) -> int:
        bindings = dict(zip(PARAMETER_NAMES, point.coordinates(), strict=True))
        rows = [
            [e.derivative(n).evaluate(bindings) for n in PARAMETER_NAMES] for e in self.equations
        ]
        return matrix_rank(rows)

    def dimension_at(self, point: DeformationPoint) -> int:
        """Dimension at a smooth exact point: 4 minus the Jacobian rank."""
        _require(self.contains(point), f"{point} is off the locus")
        return len(PARAMETER_NAMES) - self.jacobian_rank_at(point)

    def meets_hyperplane_s_only_at_origin(self) -> bool:
        """With sigma = 0 the equations become linear of full rank in (lambda, mu, nu)."""
        rest = PARAMETER_NAMES[:3]
        restricted = [e.substitute({"sigma": 0}) for e in self.equations]
        if any(e.degree() > 1 or not e.constant_term().is_zero() for e in restricted):
            return False
        rows = [[e.coefficient({n: 1}).constant_term() for n in rest] for e in restricted]
        return bool(rows) and matrix_rank(rows) == len(rest)


def family_coordinates(f: Polynomial) -> DeformationPoint:
    """Read (lambda, mu, nu, sigma) off a deformation of the cusp; the rest must be the cusp."""
    params = f.table.without(*GERM_VARS)

    def read(powers: Mapping[str, int]) -> Polynomial:
        full = {v: 0 for v in GERM_VARS} | dict(powers)
        return f.coefficient(full).retable(params)

    point = DeformationPoint(read({}), read({"y": 1}), -read({"w": 1}), read({"y": 1, "w": 1}))
    _require(versal_family(point).retable(f.table) == f, f"{f} is not of the form F_L")
    return point


# --- the hyperplane S ---

PRODUCT_NAMES = ("lambda1", "mu", "lambda2", "nu")


def induced_deformation() -> Polynomial:
    """(x^2 - y^3 + lambda1 + mu*y) - (z^2 - w^3 + lambda2 + nu*w)."""
    table = GERM_TABLE.extend(*PRODUCT_NAMES)
    first = parse_polynomial("x^2 - y^3 + lambda1 + mu*y", table)
    second = parse_polynomial("z^2 - w^3 + lambda2 + nu*w", table)
    return first - second


def induced_image_s() -> LocusDescription:
    """Image of the product deformations: {(lambda1 - lambda2, mu, -nu, 0)} = {sigma = 0}."""
    point = family_coordinates(induced_deformation())
    vectors = [
        [c.coefficient({name: 1}).constant_term() for c in point.coordinates()]
        for name in PRODUCT_NAMES
    ]
    forms = nullspace(vectors, width=len(PARAMETER_NAMES))
    coordinates = Polynomial.variables(PARAMETER_TABLE)
    zero = Polynomial.zero(PARAMETER_TABLE)
    equations = tuple(
        sum((v * c for v, c in zip(coordinates, form, strict=True)), zero) for form in forms
    )
    sigma = Polynomial.variable(PARAMETER_TABLE, "sigma")
    _require(equations == (sigma,), f"image equations {equations} differ from sigma = 0")
    locus = LocusDescription(equations, (Parametrization("product", point),))
    locus.check()
    logger.info("Induced image: {%s = 0}", sigma)
    return locus


def induced_point(lambda1, mu, lambda2, nu) -> DeformationPoint:
    point = family_coordinates(induced_deformation())
    return point.substitute(dict(zip(PRODUCT_NAMES, (lambda1, mu, lambda2, nu), strict=True)))


# --- three nodes and the curve C ---

R1_TEXT = "27*y^4 - 18*mu*y^2 + sigma^3*y + 3*mu^2 - nu*sigma^2"
R2_TEXT = "3*sigma*y^3 - 6*nu*y^2 + mu*sigma*y + 2*mu*nu + 3*lambda*sigma"
QUOTIENT_TEXT = "9*sigma^-1*y + 18*nu*sigma^-2"
REMAINDER_TEXT = (
    "27*sigma^-2*(4*nu^2 - mu*sigma^2)*y^2"
    " + sigma^-1*(sigma^4 - 36*mu*nu - 27*lambda*sigma)*y"
    " + sigma^-2*(3*mu^2*sigma^2 - nu*sigma^4 - 36*mu*nu^2 - 54*lambda*nu*sigma)"
)
CONDITION_TEXTS = (
    "4*nu^2 - mu*sigma^2",
    "sigma^4 - 36*mu*nu - 27*lambda*sigma",
    "3*mu^2*sigma^2 - nu*sigma^4 - 36*mu*nu^2 - 54*lambda*nu*sigma",
)
CURVE_C_TEXTS = ("sigma^3 - 27*lambda", "mu", "nu")
COLLAPSED_CUBIC_TEXT = "3*sigma*(y - sigma/6)^3"
SPLIT_CUBIC_TEXT = "3*sigma*(y + sigma/3)*(y + eps*sigma/3)*(y + eps^2*sigma/3)"


def symbolic_family() -> Polynomial:
    """F_L over symbolic parameters with sigma invertible."""
    return versal_family(DeformationPoint.symbolic(laurent=("sigma",)))


def eliminated_cubics() -> tuple[Polynomial, Polynomial]:
    """(R1, R2) for symbolic parameters, checked against their expanded forms."""
    family = symbolic_family()
    r1, r2, _ = eliminated_pair(family)
    _require(r1 == parse_polynomial(R1_TEXT, family.table), f"R1 = {r1}")
    _require(r2 == parse_polynomial(R2_TEXT, family.table), f"R2 = {r2}")
    return r1, r2


def remainder_identity() -> tuple[Polynomial, Polynomial]:
    """Divide R1 by R2 in y; returns (quotient, remainder) after checking both and q*R2 + r = R1."""
    r1, r2 = eliminated_cubics()
    table = r1.table
    q, r = univariate_division(r1, r2, "y")
    _require(q == parse_polynomial(QUOTIENT_TEXT, table), f"quotient {q}")
    _require(r == parse_polynomial(REMAINDER_TEXT, table), f"remainder {r}")
    _require(q * r2 + r == r1, "q*R2 + r differs from R1")
    return q, r


def remainder_conditions() -> list[Polynomial]:
    """The y-coefficients of the remainder, matched against the cleared conditions.

    Returned in the cleared form, over the parameter table with sigma invertible.
    """
    _, r = remainder_identity()
    coefficients = r.coefficients("y")
    conditions = []
    for degree, text in zip((2, 1, 0), CONDITION_TEXTS, strict=True):
        displayed = parse_polynomial(text, r.table)
        found = coefficients.get(degree, Polynomial.zero(r.table))
        _require(
            equal_up_to_unit(found, displayed),
            f"coefficient of y^{degree} is {found}, not a unit times {displayed}",
        )
        conditions.append(displayed.retable(LAURENT_PARAMETERS))
    return conditions


def solved_family(nu: Polynomial) -> DeformationPoint:
    """mu = 4nu^2/sigma^2, lambda = sigma^3/27 - 16nu^3/(3sigma^3) for nu a multiple of sigma^2."""
    sigma = Polynomial.variable(SCALE_TABLE, "sigma")
    nu = nu.retable(SCALE_TABLE)
    mu = nu**2 * sigma**-2 * 4
    lam = sigma**3 / 27 - nu**3 * sigma**-3 * 16 / 3
    return DeformationPoint(lam, mu, nu, sigma)


def expected_solutions() -> list[Parametrization]:
    sigma = Polynomial.variable(SCALE_TABLE, "sigma")
    quarter = sigma**2 / 4
    nus = (quarter * 0, quarter, quarter * EPS, quarter * EPS2)
    return [Parametrization(f"Lambda{k}", solved_family(nu)) for k, nu in enumerate(nus)]


def three_node_solutions(
    conditions: Sequence[Polynomial], profile: SolverProfile = DEFAULT_PROFILE
) -> list[Parametrization]:
    """Solve the first two conditions for mu and lambda, then the third in nu."""
    first, second, third = conditions
    table = first.table
    sigma = Polynomial.variable(table, "sigma")
    nu = Polynomial.variable(table, "nu")
    mu = nu**2 * sigma**-2 * 4
    _require(first.substitute({"mu": mu}).is_zero(), "mu does not solve the first condition")
    lam = (sigma**4 - mu * nu * 36) * sigma**-1 / 27
    _require(
        second.substitute({"mu": mu, "lambda": lam}).is_zero(),
        "lambda does not solve the second condition",
    )
    in_nu = third.substitute({"mu": mu, "lambda": lam})
    _require(
        in_nu == nu * sigma**-2 * 3 * (nu**3 * 64 - sigma**6),
        f"third condition reduces to {in_nu}",
    )
    search = linear_factor_roots(in_nu, "nu", profile)
    _require(search.complete, f"{in_nu} does not split over Q(eps)")

    expected = expected_solutions()
    found = {root.retable(SCALE_TABLE) for root, _ in search.roots}
    wanted = {param.point.nu for param in expected}
    _require(found == wanted, f"nu roots {sorted(map(str, found))} differ from the four families")
    return expected


def cubic_of(point: DeformationPoint) -> tuple[Polynomial, Polynomial]:
    """(R1, R2) over the fiber of a point."""
    r1, r2, _ = eliminated_pair(versal_family(point))
    return r1, r2


def check_cubics(solutions: Sequence[Parametrization]) -> None:
    """R2 divides R1 on every family; Lambda1 collapses and Lambda0 splits."""
    for param in solutions:
        r1, r2 = cubic_of(param.point)
        remainder = univariate_division(r1, r2, "y")[1]
        _require(remainder.is_zero(), f"R2 does not divide R1 on {param.name}")
    lambda0, lambda1 = solutions[0].point, solutions[1].point
    r2 = cubic_of(lambda1)[1]
    _require(r2 == parse_polynomial(COLLAPSED_CUBIC_TEXT, r2.table), f"cubic of Lambda1 is {r2}")
    r2 = cubic_of(lambda0)[1]
    _require(r2 == parse_polynomial(SPLIT_CUBIC_TEXT, r2.table), f"cubic of Lambda0 is {r2}")


# (y, w) rescalings carrying Lambda2 and Lambda3 onto Lambda1.
TRIVIALIZING_SCALINGS = {2: (EPS, EPS2), 3: (EPS2, EPS)}


def check_trivial_families(solutions: Sequence[Parametrization]) -> None:
    """F over Lambda2 and Lambda3 become F over Lambda1 after rescaling y and w."""
    reference = versal_family(solutions[1].point)
    cubic = cubic_of(solutions[1].point)[1]
    table = reference.table
    y, w = Polynomial.variable(table, "y"), Polynomial.variable(table, "w")
    for index, (cy, cw) in TRIVIALIZING_SCALINGS.items():
        family = versal_family(solutions[index].point)
        moved = family.substitute({"y": y * cy, "w": w * cw})
        _require(moved == reference, f"{solutions[index].name} is not a rescaling of Lambda1")
        r2 = cubic_of(solutions[index].point)[1].substitute({"y": y * cy})
        _require(r2 == cubic, f"cubic of {solutions[index].name} is not a rescaling")


def curve_c() -> LocusDescription:
    equations = tuple(parse_polynomial(t, PARAMETER_TABLE) for t in CURVE_C_TEXTS)
    lambda0 = expected_solutions()[0]
    locus = LocusDescription(equations, (lambda0,))
    locus.check()
    return locus


class ThreeNodeLocus(NamedTuple):
    conditions3: list[Polynomial]
    solutions: list[Parametrization]
    curve_c: LocusDescription


def three_node_locus(profile: SolverProfile = DEFAULT_PROFILE) -> ThreeNodeLocus:
    """Eliminate, divide, solve; the four families and the curve of their first member."""
    conditions = remainder_conditions()
    solutions = three_node_solutions(conditions, profile)
    check_cubics(solutions)
    check_trivial_families(solutions)
    curve = curve_c()
    _require(curve.meets_hyperplane_s_only_at_origin(), "C meets S away from the origin")
    logger.info("Three-node families: %s", ", ".join(str(s.point) for s in solutions))
    return ThreeNodeLocus(conditions, solutions, curve)


@dataclass(frozen=True)
class TransversalityReport:
    tangent: tuple[CycloNumber, ...]
    s_value: CycloNumber
    transversal: bool


def curve_c_transversality() -> TransversalityReport:
    """Tangent of sigma -> Lambda0(sigma) at 0, paired with the equation of S."""
    point = curve_c().parametrizations[0].point
    at_zero = {"sigma": 0}
    tangent = tuple(c.derivative("sigma").evaluate(at_zero) for c in point.coordinates())
    s_equation = induced_image_s().equations[0]
    s_value = s_equation.evaluate(dict(zip(PARAMETER_NAMES, tangent, strict=True)))
    proportional = all(c.is_zero() for c in tangent[:3]) and not tangent[3].is_zero()
    report = TransversalityReport(tangent, s_value, proportional and not s_value.is_zero())
    logger.info("Tangent of C at 0: %s, S-equation value %s", tangent, s_value)
    return report


# --- the three-line family F_a and the map g ---

FA_VARS = ("X", "Y", "U", "V")
FA_PARAMETERS = ("alpha", "beta", "gamma", "xi", "upsilon", "k")
FA_PARAMETER_TABLE = VarTable(FA_PARAMETERS)
FA_TABLE = VarTable(FA_VARS + FA_PARAMETERS)
FA_GERM_TABLE = VarTable(FA_VARS)

CUSP_DEF_TEXT = (
    "(X - U + xi)*(X + U + upsilon)"
    " - (Y - V + alpha)*(Y - eps*V + beta)*(Y - eps^2*V + gamma)"
)
DISPLAYED_FA_TEXT = (
    "X^2 - U^2 - Y^3 + V^3 - (alpha + beta + gamma)*Y^2"
    " - (alpha + eps*beta + eps^2*gamma)*Y*V - (alpha + eps^2*beta + eps*gamma)*V^2"
    " - (alpha*beta + alpha*gamma + beta*gamma)*Y"
    " + (beta*gamma + eps*alpha*gamma + eps^2*alpha*beta)*V - alpha*beta*gamma"
)
# Rank-one matrix of the map a -> p(a), up to the scale k.
P_MATRIX = ((ONE, EPS, EPS2), (EPS2, ONE, EPS), (EPS, EPS2, ONE))


@dataclass(frozen=True)
class FaParameters:
    """Coefficients a = (alpha, beta, gamma) of the three lines, shifts xi, upsilon, scale k.

    ``None`` stands for the symbolic parameter of the same name.
    """

    alpha: Coordinate | None = None
    beta: Coordinate | None = None
    gamma: Coordinate | None = None
    xi: Coordinate | None = None
    upsilon: Coordinate | None = None
    k: Coordinate | None = ONE

    def __post_init__(self):
        for name in FA_PARAMETERS:
            value = getattr(self, name)
            if value is not None and not isinstance(value, Polynomial):
                object.__setattr__(self, name, CycloNumber.coerce(value))

    @classmethod
    def symbolic(cls) -> FaParameters:
        return cls(None, None, None, None, None, None)

    def value(self, name: str) -> Coordinate:
        value = getattr(self, name)
        if value is None:
            return Polynomial.variable(FA_PARAMETER_TABLE, name)
        return value

    @property
    def lines(self) -> tuple[Coordinate, Coordinate, Coordinate]:
        return (self.value("alpha"), self.value("beta"), self.value("gamma"))

    @property
    def is_exact(self) -> bool:
        return all(not isinstance(self.value(n), Polynomial) for n in ("alpha", "beta", "gamma"))

    @property
    def s(self) -> Coordinate:
        """alpha + eps*beta + eps^2*gamma; a lies on the plane pi iff s = 0."""
        alpha, beta, gamma = self.lines
        return alpha + beta * EPS + gamma * EPS2

    @property
    def on_plane(self) -> bool:
        return self.s.is_zero()


def cusp_def(p: FaParameters) -> Polynomial:
    """(X - U + xi)(X + U + upsilon) - (Y - V + alpha)(Y - eps*V + beta)(Y - eps^2*V + gamma)."""
    raw = parse_polynomial(CUSP_DEF_TEXT, FA_TABLE)
    return raw.substitute({n: _lift(p.value(n), FA_TABLE) for n in FA_PARAMETERS if n != "k"})


def fa_family(p: FaParameters) -> Polynomial:
    """cusp_def after X -> X - (xi + upsilon)/2, U -> U + (xi - upsilon)/2."""
    table = FA_TABLE
    xi, upsilon = _lift(p.value("xi"), table), _lift(p.value("upsilon"), table)
    big_x, big_u = Polynomial.variable(table, "X"), Polynomial.variable(table, "U")
    f = cusp_def(p).substitute({"X": big_x - (xi + upsilon) / 2, "U": big_u + (xi - upsilon) / 2})
    used = set(f.variables_used())
    if used <= set(FA_VARS):
        return f.retable(FA_GERM_TABLE)
    return f


def displayed_fa() -> Polynomial:
    return parse_polynomial(DISPLAYED_FA_TEXT, FA_TABLE)


def fa_closed_points(p: FaParameters) -> list[tuple[Coordinate, ...]]:
    """Pairwise intersections of the lines: p1 of (beta, gamma), p2 of (alpha, gamma),
    p3 of (alpha, beta)."""
    alpha, beta, gamma = p.lines
    zero = alpha * 0
    one_eps, one_eps2 = ONE - EPS, ONE - EPS2
    return [
        (zero, (beta * EPS - gamma) / one_eps, zero, (beta - gamma) / (EPS * one_eps)),
        (zero, (alpha * EPS2 - gamma) / one_eps2, zero, (alpha - gamma) / one_eps2),
        (zero, (alpha * EPS - beta) / one_eps, zero, (alpha - beta) / one_eps),
    ]


def _check_fa_critical(f: Polynomial, point: Sequence[Coordinate]) -> None:
    bindings = {n: _lift(c, f.table) for n, c in zip(FA_VARS, point, strict=True)}
    for g in (f, *(f.derivative(n) for n in FA_VARS)):
        _require(g.substitute(bindings).is_zero(), f"{point} is not a critical point of F_a")


def _same_point(a: Sequence[Coordinate], b: Sequence[Coordinate]) -> bool:
    return all((x - y).is_zero() for x, y in zip(a, b, strict=True))


def fa_singular_points(p: FaParameters) -> list[SingularPointRecord]:
    """The nodes of F_a; a single IIxII point when the three lines are concurrent."""
    f = fa_family(p)
    points = fa_closed_points(p)
    for point in points:
        _check_fa_critical(f, point)

    distinct = not any(_same_point(a, b) for i, a in enumerate(points) for b in points[i + 1 :])
    coincident = all(_same_point(points[0], b) for b in points[1:])
    if p.is_exact:
        if p.on_plane:
            _require(coincident, "lines are concurrent but the points differ")
        else:
            _require(distinct, f"s = {p.s} is nonzero but two points coincide")
    else:
        _require(distinct, "symbolic points coincide")

    groups = [(points[0], 3)] if p.is_exact and p.on_plane else [(q, 1) for q in points]
    records = []
    for point, multiplicity in groups:
        lifted = tuple(_lift(c, f.table) for c in point)
        classification = classify_singularity(f, lifted, FA_VARS)
        records.append(
            SingularPointRecord(
                point,
                classification.hessian_rank,
                classification.corank_data,
                classification.klass,
                multiplicity,
            )
        )
    logger.info("F_a over s = %s: %d singular point(s)", p.s, len(records))
    return records


def coincidence_on_plane() -> bool:
    """Symbolic closed forms differ, and all agree after alpha -> -eps*beta - eps^2*gamma."""
    points = fa_closed_points(FaParameters.symbolic())
    table = FA_PARAMETER_TABLE
    beta, gamma = Polynomial.variable(table, "beta"), Polynomial.variable(table, "gamma")
    on_plane = {"alpha": -(beta * EPS) - gamma * EPS2}
    pairs = [(a, b) for i, a in enumerate(points) for b in points[i + 1 :]]
    apart = all(not _same_point(a, b) for a, b in pairs)
    together = all(
        (x - y).substitute(on_plane).is_zero() for a, b in pairs for x, y in zip(a, b, strict=True)
    )
    return apart and together


def scaled_point(p: FaParameters) -> FaParameters:
    """p(a) = k * P_MATRIX * a."""
    k = p.value("k")
    images = [
        sum((row[j] * p.lines[j] for j in range(3)), ZERO) * k for row in P_MATRIX
    ]
    return FaParameters(*images, xi=p.xi, upsilon=p.upsilon, k=p.k)


def line_coordinates(p: FaParameters) -> DeformationPoint:
    """i(a): the point of the versal base whose fiber is F_a."""
    alpha, beta, gamma = p.lines
    return DeformationPoint(
        -(alpha * beta * gamma),
        -(alpha * gamma + alpha * beta + beta * gamma),
        -(beta * gamma + alpha * gamma * EPS + alpha * beta * EPS2),
        -(alpha + beta * EPS + gamma * EPS2),
    )


def map_g(p: FaParameters) -> DeformationPoint:
    """g(a) = i(p(a)) = (-k^3 s^3, 0, 0, -3ks); lies on C."""
    k = p.value("k")
    if not isinstance(k, Polynomial) and k.is_zero():
        raise ZeroScale("the scale k of the map p must be nonzero")
    point = line_coordinates(scaled_point(p))
    ks = p.s * k
    expected = DeformationPoint(-(ks**3), 0, 0, ks * -3)
    pairs = zip(point.coordinates(), expected.coordinates(), strict=True)
    _require(
        all((a - b).is_zero() for a, b in pairs),
        f"g(a) = {point}, expected {expected}",
    )
    _require(curve_c().contains(point), f"g(a) = {point} is off C")
    return point


PULLBACK_RENAMING = {"X": "x", "Y": "y", "U": "z", "V": "w"}
PULLBACK_TABLE = GERM_TABLE.extend(*FA_PARAMETERS)


def pullback_identity(p: FaParameters) -> bool:
    """F_{p(a)} with X, Y, U, V -> x, y, z, w equals the versal fiber over g(a)."""
    table = PULLBACK_TABLE
    fa = fa_family(scaled_point(p))
    renamed = fa.substitute(
        {old: Polynomial.variable(table, new) for old, new in PULLBACK_RENAMING.items()}, table
    )
    versal = versal_family(map_g(p)).retable(table)
    return renamed == versal


def image_meets_s() -> bool:
    """im(g) lies on C for symbolic a, k, and C meets {sigma = 0} only at 0."""
    point = map_g(FaParameters.symbolic())
    return curve_c().contains(point) and curve_c().meets_hyperplane_s_only_at_origin()


# --- deformation diagram of the fiber product with six cusps ---

# Moduli of a rational elliptic surface: those of an elliptic pencil in P^2.
MODULI_OF_SURFACE = 8
# h^0(O_P1(6)): positions of the six cuspidal fibers.
SECTIONS_O6 = 7
DIM_GL2 = 4
# Drop of h^{1,2} from the smoothing to the small resolution; quoted, not computed.
H12_DROP = 16
# Rise of h^{1,1} from the smoothing to the small resolution; quoted, not computed.
H11_RISE = 2
CUSPIDAL_B = "t^6 - 1"


@dataclass(frozen=True)
class FriedmanReport:
    dimdef_x: int
    dimdef_xhat: int
    h12_tilde: int
    h11_tilde: int
    h12_hat: int
    h11_hat: int
    t1_local_total: int
    t1_x: int
    cusps: int
    tjurina: int
    h0_r1: int
    h2_theta: int
    exceptional_curves: int
    top_row: tuple[int, ...]
    bottom_row: tuple[int, ...]
    row_exactness: tuple[tuple[str, int], ...]

    def to_dict(self) -> dict:
        return {
            "dimdef_X": self.dimdef_x,
            "dimdef_Xhat": self.dimdef_xhat,
            "h12_tilde": self.h12_tilde,
            "h11_tilde": self.h11_tilde,
            "h12_hat": self.h12_hat,
            "h11_hat": self.h11_hat,
            "t1_local_total": self.t1_local_total,
            "t1_X": self.t1_x,
            "cusps": self.cusps,
            "tjurina": self.tjurina,
            "h0_R1": self.h0_r1,
            "h2_theta": self.h2_theta,
            "exceptional_curves": self.exceptional_curves,
            "row_exactness": [list(r) for r in self.row_exactness],
        }


def alternating_sum(row: Sequence[int]) -> int:
    return sum(d if i % 2 == 0 else -d for i, d in enumerate(row))


def friedman_report(profile: SolverProfile = DEFAULT_PROFILE) -> FriedmanReport:
    """Dimensions of both rows of the diagram; local data come from the other solvers."""
    dimdef_x = 2 * MODULI_OF_SURFACE + SECTIONS_O6 - DIM_GL2
    h12_tilde = h11_tilde = dimdef_x
    h12_hat = h12_tilde - H12_DROP
    h11_hat = h11_tilde + H11_RISE

    cusps = len(fiber_product_singular_locus(parse_polynomial(CUSPIDAL_B), profile=profile))
    tjurina = len(tjurina_basis(GermPresentation.parse(CUSP_TEXT)))
    t1_local_total = cusps * tjurina

    curve = curve_c()
    at_one = curve.parametrizations[0].point.substitute({"sigma": 1})
    h0_r1 = cusps * curve.dimension_at(at_one)
    h2_theta = h0_r1 + h11_hat
    components = len(exceptional_fiber(resolve_cusp()[1]).components)

    # top: 0 -> C^3 = C^3 -(0)-> C^6 -> C^27 -> C^21 -> 0
    top = (h12_hat, h12_hat, h0_r1, h2_theta, h11_hat)
    # bottom: 0 -> C^3 -> T^1_X -> local T^1 -> C^27 -> C^19 -> 0
    bottom = (h12_hat, dimdef_x, t1_local_total, h2_theta, h11_tilde)
    report = FriedmanReport(
        dimdef_x=dimdef_x,
        dimdef_xhat=h12_hat,
        h12_tilde=h12_tilde,
        h11_tilde=h11_tilde,
        h12_hat=h12_hat,
        h11_hat=h11_hat,
        t1_local_total=t1_local_total,
        t1_x=dimdef_x,
        cusps=cusps,
        tjurina=tjurina,
        h0_r1=h0_r1,
        h2_theta=h2_theta,
        exceptional_curves=cusps * components,
        top_row=top,
        bottom_row=bottom,
        row_exactness=(("top", alternating_sum(top)), ("bottom", alternating_sum(bottom))),
    )
    logger.info("Deformation diagram: %s", report.row_exactness)
    return report
