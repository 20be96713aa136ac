# cuspworks/core/singularity_lab.py
"""
Local algebra of the threefold cusp F = x^2 - y^3 - z^2 + w^3.

- Tjurina bases and miniversal families of germs whose Jacobian ideal is
  monomial up to units.
- Fibers of the versal family
      F_L = F + lambda + mu*y - nu*w + sigma*y*w
  over a point L = (lambda, mu, nu, sigma): exact and numeric singular-point
  solvers, and the node / I1xII / IIxII classification of each point.
- Singular points of the fiber product {X^2 - Y^3 = B(t) = U^2 - V^3}.

``nu`` is stored as the coefficient carrying the minus sign in F_L; the
tuple convention (lambda, mu, -nu, sigma) is available through
``DeformationPoint.from_tuple`` / ``as_tuple``.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .cyclo_arith import ZERO, CycloNumber, eps_power, matrix_rank
from .errors import (
    ExactFactorizationFailed,
    NonUnitLeadingCoefficient,
    NotACriticalPoint,
    NotMonomialReducible,
    SymbolicMismatch,
    TableMismatch,
    ToleranceAmbiguity,
    ZeroDivisor,
)
from .poly_core import (
    Monomial,
    Polynomial,
    VarTable,
    monomial_quotient_basis,
    univariate_division,
    univariate_gcd,
)
from .poly_parser import parse_polynomial, variables_in_order
from .root_finder import dense_coefficients, numeric_roots, require_split, root_multiplicity
from .solver_profiles import DEFAULT_PROFILE, SolverProfile

logger = logging.getLogger(__name__)

GERM_VARS = ("x", "y", "z", "w")
PARAMETER_NAMES = ("lambda", "mu", "nu", "sigma")
GERM_TABLE = VarTable(GERM_VARS)
PARAMETER_TABLE = VarTable(PARAMETER_NAMES)
CUSP_TEXT = "x^2 - y^3 - z^2 + w^3"

# Germs whose versal parameters carry conventional names (and signs).
_NAMED_FAMILIES = (
    (CUSP_TEXT, GERM_VARS, (("lambda", 1), ("mu", 1), ("nu", -1), ("sigma", 1))),
    ("x^2 - y^3", ("x", "y"), (("lambda", 1), ("mu", 1))),
)

Coordinate = CycloNumber | Polynomial


def _coerce_coordinate(value) -> Coordinate:
    if isinstance(value, Polynomial):
        return value
    return CycloNumber.coerce(value)


def _lift(value, table: VarTable) -> Polynomial:
    if isinstance(value, Polynomial):
        return value.retable(table)
    return Polynomial.constant(table, CycloNumber.coerce(value))


def _fresh_name(table: VarTable, stem: str) -> str:
    if stem not in table:
        return stem
    i = 1
    while f"{stem}{i}" in table:
        i += 1
    return f"{stem}{i}"


# --- germs and Tjurina algebras ---


@dataclass(frozen=True)
class GermPresentation:
    """A hypersurface germ f at base_point in the variables ``vars``.

    ``vars`` defaults to every variable of f's table, ``base_point`` to the
    origin.  Remaining table variables are coefficients.
    """

    f: Polynomial
    vars: tuple[str, ...] = ()
    base_point: tuple[Coordinate, ...] = ()

    def __post_init__(self):
        names = tuple(self.vars) or self.f.table.names
        for name in names:
            self.f.table.index(name)
        point = tuple(self.base_point) or (ZERO,) * len(names)
        if len(point) != len(names):
            raise ValueError(f"base point has {len(point)} coordinates for {len(names)} variables")
        object.__setattr__(self, "vars", names)
        object.__setattr__(self, "base_point", tuple(_coerce_coordinate(c) for c in point))

    @classmethod
    def parse(cls, text: str, variables: Sequence[str] | None = None) -> GermPresentation:
        """Germ in ``variables`` (default: all names in the text, in order of appearance)."""
        if not variables:
            return cls(parse_polynomial(text))
        names = tuple(variables)
        extra = tuple(n for n in variables_in_order(text) if n not in names)
        return cls(parse_polynomial(text, names + extra), names)

    def centered(self) -> Polynomial:
        """f in local coordinates: every germ variable shifted by its base-point value."""
        if all(isinstance(c, CycloNumber) and c.is_zero() for c in self.base_point):
            return self.f
        table = self.f.table
        return self.f.substitute(
            {
                v: Polynomial.variable(table, v) + _lift(c, table)
                for v, c in zip(self.vars, self.base_point, strict=True)
            }
        )


def _monomial_generator(partial: Polynomial, germ_vars: Sequence[str], name: str) -> Monomial:
    """Monomial m with partial = m * unit in the local ring."""
    idx = [partial.table.index(v) for v in germ_vars]
    exps = list(partial.table.zero_monomial())
    for i in idx:
        exps[i] = min(e[i] for e in partial.terms)
    generator = tuple(exps)
    if generator not in partial.terms:
        raise NotMonomialReducible(
            f"d/d{name} = {partial} is not a monomial times a unit; unsupported germ"
        )
    return generator


def tjurina_basis(germ: GermPresentation) -> list[Monomial]:
    """Monomial basis of O/((f) + J_f) at the base point, graded order."""
    f = germ.centered()
    table = f.table
    coefficient_idx = [i for i, n in enumerate(table.names) if n not in germ.vars]
    if any(e[i] for e in f.terms for i in coefficient_idx):
        raise NotMonomialReducible(
            f"{f} has coefficients in {', '.join(table.names[i] for i in coefficient_idx)}"
        )
    if not f.constant_term().is_zero():
        logger.info("Germ does not pass through its base point; the local algebra is zero")
        return []

    generators: list[Monomial] = []
    for name in germ.vars:
        partial = f.derivative(name)
        if not partial.constant_term().is_zero():
            logger.info("d/d%s is a unit; the germ is smooth", name)
            return []
        if not partial.is_zero():
            generators.append(_monomial_generator(partial, germ.vars, name))

    for exps in f.terms:
        if not any(all(a >= b for a, b in zip(exps, g, strict=True)) for g in generators):
            raise NotMonomialReducible(
                f"{f} is not in the monomial ideal of its partial derivatives"
            )
    basis = monomial_quotient_basis(generators, table, germ.vars)
    logger.info("Tjurina number %d for %s", len(basis), germ.f)
    return basis


def _family_parameters(germ: GermPresentation, count: int) -> list[tuple[str, int]]:
    table = germ.f.table
    centered = germ.centered()
    for text, names, params in _NAMED_FAMILIES:
        if germ.vars != names or len(params) != count:
            continue
        if any(p in table for p, _ in params):
            continue
        if not all(n in table for n in variables_in_order(text)):
            continue
        if centered == parse_polynomial(text, table):
            return list(params)
    fresh = (f"t{i}" for i in itertools.count() if f"t{i}" not in table)
    return [(next(fresh), 1) for _ in range(count)]


def miniversal_family(germ: GermPresentation) -> Polynomial:
    """f + sum of t_i * m_i over the Tjurina basis, one fresh parameter per monomial."""
    basis = tjurina_basis(germ)
    if not basis:
        return germ.f
    params = _family_parameters(germ, len(basis))
    table = germ.f.table.extend(*(name for name, _ in params))
    shift = {
        v: Polynomial.variable(table, v) - _lift(c, table)
        for v, c in zip(germ.vars, germ.base_point, strict=True)
    }
    family = germ.f.retable(table)
    for exps, (name, sign) in zip(basis, params, strict=True):
        monomial = Polynomial(germ.f.table, {exps: 1}).retable(table).substitute(shift)
        family = family + Polynomial.variable(table, name) * monomial * sign
    return family


# --- the versal family of the cusp ---


@dataclass(frozen=True)
class DeformationPoint:
    """A point (lambda, mu, nu, sigma) of the base of the versal family.

    Coordinates are exact ``CycloNumber``s or polynomials over one common
    parameter table (symbolic points).
    """

    lam: Coordinate = ZERO
    mu: Coordinate = ZERO
    nu: Coordinate = ZERO
    sigma: Coordinate = ZERO

    def __post_init__(self):
        values = [_coerce_coordinate(v) for v in (self.lam, self.mu, self.nu, self.sigma)]
        tables = {v.table for v in values if isinstance(v, Polynomial)}
        if len(tables) > 1:
            raise TableMismatch("deformation coordinates live in different tables")
        if tables:
            table = tables.pop()
            values = [_lift(v, table) for v in values]
        for name, value in zip(("lam", "mu", "nu", "sigma"), values, strict=True):
            object.__setattr__(self, name, value)

    @classmethod
    def from_tuple(cls, lam, mu, minus_nu, sigma) -> DeformationPoint:
        """Read (lambda, mu, -nu, sigma), the sign convention of tangent-space tuples."""
        return cls(lam, mu, -_coerce_coordinate(minus_nu), sigma)

    @classmethod
    def symbolic(cls, laurent: Iterable[str] = ()) -> DeformationPoint:
        table = PARAMETER_TABLE.with_laurent(*laurent)
        return cls(*Polynomial.variables(table))

    def coordinates(self) -> tuple[Coordinate, Coordinate, Coordinate, Coordinate]:
        return (self.lam, self.mu, self.nu, self.sigma)

    def as_tuple(self) -> tuple[Coordinate, Coordinate, Coordinate, Coordinate]:
        return (self.lam, self.mu, -self.nu, self.sigma)

    @property
    def parameter_table(self) -> VarTable | None:
        return self.lam.table if isinstance(self.lam, Polynomial) else None

    @property
    def is_exact(self) -> bool:
        return self.parameter_table is None

    def parameters_used(self) -> tuple[str, ...]:
        if self.is_exact:
            return ()
        used = set().union(*(c.variables_used() for c in self.coordinates()))
        return tuple(n for n in self.parameter_table.names if n in used)

    def substitute(self, bindings: Mapping[str, Coordinate]) -> DeformationPoint:
        """Specialize symbolic coordinates; the result is exact once no parameter is left."""
        if self.is_exact:
            return self
        values = [c.substitute(bindings) for c in self.coordinates()]
        if all(v.is_constant() for v in values):
            return DeformationPoint(*(v.constant_term() for v in values))
        return DeformationPoint(*values)

    def to_dict(self) -> dict:
        stored = dict(zip(PARAMETER_NAMES, (str(c) for c in self.coordinates()), strict=True))
        return {**stored, "tuple": [str(c) for c in self.as_tuple()]}

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.as_tuple()) + ")"


def versal_family(point: DeformationPoint | None = None) -> Polynomial:
    """F_L = x^2 - y^3 - z^2 + w^3 + lambda + mu*y - nu*w + sigma*y*w over the germ variables
    plus the parameters of a symbolic point (default: fully symbolic)."""
    point = point if point is not None else DeformationPoint.symbolic()
    params = point.parameter_table
    if params is None:
        table = GERM_TABLE
    else:
        table = GERM_TABLE.extend(*params.names, laurent=params.laurent)
    x, y, z, w = (Polynomial.variable(table, n) for n in GERM_VARS)
    lam, mu, nu, sigma = (_lift(c, table) for c in point.coordinates())
    return x**2 - y**3 - z**2 + w**3 + lam + mu * y - nu * w + sigma * y * w


def singular_conditions(family: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """The three conditions on (y, w) left once x = z = 0:

        3y^2 - sigma*w - mu,  3w^2 + sigma*y - nu,  sigma*y*w + 2mu*y - 2nu*w + 3lambda

    computed as -F_y, F_w and 3F + y*(-F_y) - w*F_w.
    """
    f0 = family.substitute({"x": 0, "z": 0})
    y = Polynomial.variable(family.table, "y")
    w = Polynomial.variable(family.table, "w")
    cond1 = -f0.derivative("y")
    cond2 = f0.derivative("w")
    return cond1, cond2, f0 * 3 + y * cond1 - w * cond2


def eliminated_pair(family: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(R1, R2, w(y)): the conditions with w = (3y^2 - mu)/sigma eliminated.

    R1 = sigma^2 * cond2(w(y)) and R2 = sigma * cond3(w(y)); sigma must be a unit.
    """
    sigma = family.coefficient({"y": 1, "w": 1})
    cond1, cond2, cond3 = singular_conditions(family)
    w_of_y = cond1.substitute({"w": 0}) * sigma.unit_inverse()
    r1 = cond2.substitute({"w": w_of_y}) * sigma**2
    r2 = cond3.substitute({"w": w_of_y}) * sigma
    return r1, r2, w_of_y


# --- classification ---


class SingularityClass(Enum):
    NODE = "node"
    CA2_I1XII = "cA2_I1xII"
    CA2_IIXII = "cA2_IIxII"
    DEGENERATE_OTHER = "degenerate_other"


@dataclass(frozen=True)
class Classification:
    klass: SingularityClass
    hessian_rank: int
    corank_data: Polynomial | None = None


def determinant(matrix: Sequence[Sequence[Polynomial]], table: VarTable) -> Polynomial:
    """Laplace expansion along the first row."""
    n = len(matrix)
    if n == 0:
        return Polynomial.constant(table, 1)
    if n == 1:
        return matrix[0][0]
    total = Polynomial.zero(table)
    for j, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = entry * determinant(minor, table)
        total = total + term if j % 2 == 0 else total - term
    return total


def generic_rank(matrix: Sequence[Sequence[Polynomial]], table: VarTable) -> int:
    """Size of the largest minor that is not identically zero."""
    n = len(matrix)
    for size in range(n, 0, -1):
        for rows in itertools.combinations(range(n), size):
            for cols in itertools.combinations(range(n), size):
                sub = [[matrix[r][c] for c in cols] for r in rows]
                if not determinant(sub, table).is_zero():
                    return size
    return 0


def _kernel_from_adjugate(
    matrix: Sequence[Sequence[Polynomial]], table: VarTable
) -> list[Polynomial]:
    """A nonzero kernel vector of a corank-1 matrix: a nonzero column of its adjugate."""
    n = len(matrix)
    for j in range(n):
        column = []
        for i in range(n):
            minor = [
                [matrix[r][c] for c in range(n) if c != i] for r in range(n) if r != j
            ]
            cofactor = determinant(minor, table)
            column.append(cofactor if (i + j) % 2 == 0 else -cofactor)
        if any(not entry.is_zero() for entry in column):
            return column
    raise SymbolicMismatch("corank-1 matrix with a vanishing adjugate")


def _default_germ_vars(table: VarTable) -> tuple[str, ...]:
    if all(v in table for v in GERM_VARS):
        return GERM_VARS
    return table.names


def classify_singularity(
    f: Polynomial,
    point: Sequence[Coordinate | int | Fraction],
    germ_vars: Sequence[str] | None = None,
) -> Classification:
    """Classify the critical point ``point`` of f by its Hessian and cubic part.

    Entries of the Hessian may be polynomials in parameters; ranks are
    generic ranks.
    """
    names = tuple(germ_vars) if germ_vars else _default_germ_vars(f.table)
    if len(point) != len(names):
        raise ValueError(f"point has {len(point)} coordinates for {len(names)} germ variables")
    table = f.table
    g = f.substitute(
        {
            v: Polynomial.variable(table, v) + _lift(c, table)
            for v, c in zip(names, point, strict=True)
        }
    )
    for degree in (0, 1):
        if not g.homogeneous_part(names, degree).is_zero():
            raise NotACriticalPoint(
                f"{'value' if degree == 0 else 'gradient'} of {f} does not vanish at the point"
            )
    quadratic = g.homogeneous_part(names, 2)
    cubic = g.homogeneous_part(names, 3)
    hessian = [[quadratic.derivative(a).derivative(b) for b in names] for a in names]
    rank = generic_rank(hessian, table)
    n = len(names)

    if rank == n:
        return Classification(SingularityClass.NODE, rank)

    if rank == n - 1:
        kernel = _kernel_from_adjugate(hessian, table)
        t_name = _fresh_name(table, "t")
        extended = table.extend(t_name)
        t = Polynomial.variable(extended, t_name)
        restricted = cubic.retable(extended).substitute(
            {v: k.retable(extended) * t for v, k in zip(names, kernel, strict=True)}
        )
        klass = SingularityClass.CA2_I1XII if restricted else SingularityClass.DEGENERATE_OTHER
        return Classification(klass, rank, restricted)

    if rank == n - 2:
        zero_columns = [
            i for i in range(n) if all(hessian[r][i].is_zero() for r in range(n))
        ]
        if len(zero_columns) == 2:
            a, b = (names[i] for i in zero_columns)
            restricted = cubic.substitute({v: 0 for v in names if v not in (a, b)})
            pure = (restricted.coefficient({a: 3, b: 0}), restricted.coefficient({a: 0, b: 3}))
            if all(not c.is_zero() for c in pure):
                return Classification(SingularityClass.CA2_IIXII, rank, restricted)
            return Classification(SingularityClass.DEGENERATE_OTHER, rank, restricted)

    return Classification(SingularityClass.DEGENERATE_OTHER, rank)


# --- singular loci of fibers ---


@dataclass(frozen=True)
class SingularPointRecord:
    """A singular point (x, y, z, w) of a fiber.

    Exact records carry ``CycloNumber`` coordinates (or polynomials in a
    symbolic scale); numeric records carry Python complex numbers.
    """

    coords: tuple
    hessian_rank: int
    corank_data: Polynomial | None
    klass: SingularityClass
    multiplicity: int = 1

    @property
    def exact(self) -> bool:
        return not any(isinstance(c, complex) for c in self.coords)

    def sort_key(self) -> tuple:
        if self.exact:
            return tuple(c.sort_key() for c in self.coords)
        return tuple((c.real, c.imag) for c in self.coords)

    def to_dict(self) -> dict:
        return {
            "coords": [
                [c.real, c.imag] if isinstance(c, complex) else str(c) for c in self.coords
            ],
            "hessian_rank": self.hessian_rank,
            "class": self.klass.value,
            "multiplicity": self.multiplicity,
            "corank_cubic": None if self.corank_data is None else str(self.corank_data),
        }


def _exact_gcd(*polys: Polynomial) -> Polynomial:
    try:
        result = polys[0]
        for p in polys[1:]:
            result = univariate_gcd(result, p, "y")
        return result
    except (NonUnitLeadingCoefficient, ZeroDivisor) as exc:
        raise ExactFactorizationFailed(f"elimination needs a non-unit division: {exc}") from exc


def _exact_candidates(
    family: Polynomial, point: DeformationPoint, profile: SolverProfile
) -> list[tuple[Polynomial, Polynomial, int]]:
    """(y, w, multiplicity) of every singular point on x = z = 0, over family's table."""
    table = family.table
    sigma = family.coefficient({"y": 1, "w": 1})
    if not sigma.is_zero():
        if not sigma.is_unit():
            raise ExactFactorizationFailed(f"sigma = {sigma} is not invertible")
        r1, r2, w_of_y = eliminated_pair(family)
        common = _exact_gcd(r2, r1)
        if common.degree_in("y") <= 0:
            return []
        search = require_split(common, "y", profile)
        return [
            (y0, w_of_y.substitute({"y": y0}), root_multiplicity(r2, "y", y0))
            for y0, _ in search.roots
        ]

    lam, mu, nu, _ = (_lift(c, table) for c in point.coordinates())
    cond1, cond2, cond3 = singular_conditions(family)
    y = Polynomial.variable(table, "y")
    if nu.is_zero():
        w_of_y = Polynomial.zero(table)
    elif nu.is_unit():
        w_of_y = (mu * y * 2 + lam * 3) * (nu * 2).unit_inverse()
    else:
        raise ExactFactorizationFailed(f"nu = {nu} is not invertible")
    common = _exact_gcd(cond1, cond2.substitute({"w": w_of_y}), cond3.substitute({"w": w_of_y}))
    if common.degree_in("y") <= 0:
        return []
    out = []
    for y0, _ in require_split(common, "y", profile).roots:
        w0 = w_of_y.substitute({"y": y0})
        multiplicity = root_multiplicity(cond1, "y", y0) * root_multiplicity(cond2, "w", w0)
        out.append((y0, w0, multiplicity))
    return out


def _check_critical(family: Polynomial, y0: Polynomial, w0: Polynomial) -> None:
    bindings = {"x": 0, "y": y0, "z": 0, "w": w0}
    for g in (family, *(family.derivative(v) for v in GERM_VARS)):
        if not g.substitute(bindings).is_zero():
            raise SymbolicMismatch(f"(0, {y0}, 0, {w0}) is not a critical point of {family}")


def _exact_singular_locus(
    point: DeformationPoint, profile: SolverProfile
) -> list[SingularPointRecord]:
    family = versal_family(point)
    sigma = family.coefficient({"y": 1, "w": 1})
    if sigma.variables_used():
        family = family.retable(family.table.with_laurent(*sigma.variables_used()))
    output_table = family.table.without(*GERM_VARS)

    records = []
    for y0, w0, multiplicity in _exact_candidates(family, point, profile):
        _check_critical(family, y0, w0)
        zero = Polynomial.zero(family.table)
        classification = classify_singularity(family, (zero, y0, zero, w0))
        coords = tuple(c.retable(output_table) for c in (zero, y0, zero, w0))
        if point.is_exact:
            coords = tuple(c.constant_value() for c in coords)
        records.append(
            SingularPointRecord(
                coords,
                classification.hessian_rank,
                classification.corank_data,
                classification.klass,
                multiplicity,
            )
        )
    return records


def _relative_residual(terms: Sequence[complex]) -> float:
    return abs(sum(terms)) / (1.0 + sum(abs(t) for t in terms))


def _classify_numeric(
    y: complex, w: complex, sigma: complex, profile: SolverProfile
) -> Classification:
    hessian = np.array(
        [[2, 0, 0, 0], [0, -6 * y, 0, sigma], [0, 0, -2, 0], [0, sigma, 0, 6 * w]],
        dtype=complex,
    )
    _, singular_values, vh = np.linalg.svd(hessian)
    cutoff = profile.separation_threshold * max(1.0, float(singular_values[0]))
    rank = int(np.sum(singular_values > cutoff))
    if rank == 4:
        return Classification(SingularityClass.NODE, rank)
    if rank == 3:
        kernel = vh[-1].conj()
        # cubic part of F_L at any point is -y^3 + w^3
        value = -kernel[1] ** 3 + kernel[3] ** 3
        if abs(value) > cutoff:
            return Classification(SingularityClass.CA2_I1XII, rank)
    if rank == 2 and max(abs(y), abs(w), abs(sigma)) <= cutoff:
        return Classification(SingularityClass.CA2_IIXII, rank)
    return Classification(SingularityClass.DEGENERATE_OTHER, rank)


def _square_roots(value: complex, profile: SolverProfile) -> list[tuple[complex, int]]:
    """Roots of 3t^2 = value with multiplicities."""
    if abs(value) <= profile.embed_tolerance:
        return [(0j, 2)]
    root = complex(np.sqrt(complex(value) / 3))
    return [(root, 1), (-root, 1)]


def numeric_singular_locus(
    lam: complex,
    mu: complex,
    nu: complex,
    sigma: complex,
    profile: SolverProfile = DEFAULT_PROFILE,
) -> list[SingularPointRecord]:
    """Floating-point singular points of F_L; residuals are relative to the term sizes."""
    tol = profile.residual_tolerance
    points: list[tuple[complex, complex, int]] = []
    if abs(sigma) <= profile.embed_tolerance:
        for (y, my), (w, mw) in itertools.product(
            _square_roots(mu, profile), _square_roots(nu, profile)
        ):
            if _relative_residual([2 * mu * y, -2 * nu * w, 3 * lam]) <= tol:
                points.append((y, w, my * mw))
    else:
        coeffs = np.array([3 * sigma, -6 * nu, mu * sigma, 2 * mu * nu + 3 * lam * sigma])
        scale = float(np.sum(np.abs(coeffs)))
        slope = np.polyder(coeffs)
        roots = numeric_roots(coeffs)
        for a, b in itertools.combinations(roots, 2):
            if abs(a - b) < profile.separation_threshold:
                raise ToleranceAmbiguity(
                    f"eliminated cubic has roots {a:.6g} and {b:.6g} closer than "
                    f"{profile.separation_threshold:g}"
                )
        for y in roots:
            if abs(np.polyval(slope, y)) <= profile.separation_threshold * scale:
                raise ToleranceAmbiguity(f"eliminated cubic is ill-conditioned at y = {y:.6g}")
            w = (3 * y * y - mu) / sigma
            if (
                _relative_residual([3 * w * w, sigma * y, -nu]) <= tol
                and _relative_residual([sigma * y * w, 2 * mu * y, -2 * nu * w, 3 * lam]) <= tol
            ):
                points.append((complex(y), complex(w), 1))

    records = []
    for y, w, multiplicity in points:
        classification = _classify_numeric(y, w, sigma, profile)
        records.append(
            SingularPointRecord(
                (0j, y, 0j, w),
                classification.hessian_rank,
                None,
                classification.klass,
                multiplicity,
            )
        )
    records.sort(key=SingularPointRecord.sort_key)
    return records


def singular_locus(
    point: DeformationPoint,
    mode: str = "exact",
    profile: SolverProfile = DEFAULT_PROFILE,
) -> list[SingularPointRecord]:
    """Singular points of the fiber of the versal family over ``point``.

    Exact mode solves over Q(eps) (sigma may be a symbolic scale) and raises
    ExactFactorizationFailed when the eliminated polynomial does not split;
    numeric mode embeds the coordinates in C.
    """
    if mode == "exact":
        records = _exact_singular_locus(point, profile)
        records.sort(key=SingularPointRecord.sort_key)
    elif mode == "numeric":
        if not point.is_exact:
            raise ValueError("numeric mode needs numeric coordinates")
        records = numeric_singular_locus(
            *(c.to_complex() for c in point.coordinates()), profile=profile
        )
    else:
        raise ValueError(f"unknown mode {mode!r} (exact or numeric)")
    logger.info("Fiber over %s: %d singular point(s) [%s]", point, len(records), mode)
    return records


def hyperplane_normal_form(
    y_shift: Coordinate, w_shift: Coordinate
) -> tuple[DeformationPoint, Polynomial]:
    """Fiber over sigma = 0 recentred at its singular point (0, y_shift, 0, w_shift).

    mu = 3*y_shift^2, nu = 3*w_shift^2, lambda = 2*w_shift^3 - 2*y_shift^3; the
    recentred equation is x^2 - y^3 - z^2 + w^3 - 3*y_shift*y^2 + 3*w_shift*w^2.
    """
    a, b = _coerce_coordinate(y_shift), _coerce_coordinate(w_shift)
    point = DeformationPoint(b**3 * 2 - a**3 * 2, a**2 * 3, b**2 * 3, 0)
    family = versal_family(point)
    table = family.table
    shifted = family.substitute(
        {
            "y": Polynomial.variable(table, "y") + _lift(a, table),
            "w": Polynomial.variable(table, "w") + _lift(b, table),
        }
    )
    return point, shifted


def three_node_points(sigma: Coordinate) -> list[tuple[Coordinate, ...]]:
    """(0, -eps^k*sigma/3, 0, eps^2k*sigma/3), k = 0, 1, 2: the nodes over
    (sigma^3/27, 0, 0, sigma)."""
    s = _coerce_coordinate(sigma)
    zero = s * 0
    return [
        (zero, -(s * eps_power(k)) / 3, zero, (s * eps_power(2 * k)) / 3) for k in range(3)
    ]


# --- fiber product of two cuspidal families over a line ---


@dataclass(frozen=True)
class FiberPoint:
    """Singular point (0, 0, 0, 0, t0) of {X^2 - Y^3 = B(t) = U^2 - V^3}."""

    t0: CycloNumber | complex
    vanishing_order: int

    @property
    def isolated(self) -> bool:
        return self.vanishing_order == 1

    @property
    def coords(self) -> tuple:
        zero = 0j if isinstance(self.t0, complex) else ZERO
        return (zero, zero, zero, zero, self.t0)

    def to_dict(self) -> dict:
        t0 = [self.t0.real, self.t0.imag] if isinstance(self.t0, complex) else str(self.t0)
        return {"t0": t0, "vanishing_order": self.vanishing_order, "isolated": self.isolated}


MAX_FIBER_DEGREE = 6


def fiber_product_system(b: Polynomial, t: str) -> tuple[Polynomial, Polynomial]:
    """X^2 - Y^3 - B(t) and U^2 - V^3 - B(t) over (X, Y, U, V, t)."""
    table = VarTable(("X", "Y", "U", "V", t))
    big_x, big_y, big_u, big_v = (Polynomial.variable(table, n) for n in ("X", "Y", "U", "V"))
    lifted = b.retable(table)
    return big_x**2 - big_y**3 - lifted, big_u**2 - big_v**3 - lifted


def _check_fiber_point(system: tuple[Polynomial, Polynomial], t: str, t0: CycloNumber) -> None:
    names = system[0].table.names
    point = {n: (t0 if n == t else ZERO) for n in names}
    if any(not g.evaluate(point).is_zero() for g in system):
        raise SymbolicMismatch(f"t0 = {t0} is not on the fiber product")
    jacobian = [[g.derivative(n).evaluate(point) for n in names] for g in system]
    if matrix_rank(jacobian) == 2:
        raise SymbolicMismatch(f"fiber product is smooth at t0 = {t0}")


def fiber_product_singular_locus(
    b: Polynomial, mode: str = "exact", profile: SolverProfile = DEFAULT_PROFILE
) -> list[FiberPoint]:
    """Singular points over the roots of B, with the order of vanishing of B there."""
    if b.is_zero():
        raise ValueError("B vanishes identically")
    used = b.variables_used()
    if not used:
        return []
    if len(used) > 1:
        raise ValueError(f"B must be univariate, got variables {', '.join(used)}")
    (t,) = used
    if b.degree_in(t) > MAX_FIBER_DEGREE:
        raise ValueError(f"B has degree {b.degree_in(t)} > {MAX_FIBER_DEGREE}")
    b = b.retable(VarTable((t,)))

    if mode == "exact":
        system = fiber_product_system(b, t)
        points = []
        for root, multiplicity in require_split(b, t, profile).roots:
            t0 = root.constant_value()
            _check_fiber_point(system, t, t0)
            points.append(FiberPoint(t0, multiplicity))
        points.sort(key=lambda p: p.t0.sort_key())
    elif mode == "numeric":
        squarefree = univariate_division(b, univariate_gcd(b, b.derivative(t), t), t)[0]
        dense = [c.to_complex() for c in dense_coefficients(squarefree, t)]
        coeffs = b.coefficients(t)
        points = []
        for t0 in numeric_roots(dense):
            order = _numeric_vanishing_order(coeffs, complex(t0), profile)
            points.append(FiberPoint(complex(t0), order))
        points.sort(key=lambda p: (p.t0.real, p.t0.imag))
    else:
        raise ValueError(f"unknown mode {mode!r} (exact or numeric)")
    logger.info("Fiber product over B = %s: %d singular point(s)", b, len(points))
    return points


def _numeric_vanishing_order(
    coeffs: Mapping[int, Polynomial], t0: complex, profile: SolverProfile
) -> int:
    """First derivative order at which B does not vanish at t0, relative to term sizes."""
    values = {e: c.constant_term().to_complex() for e, c in coeffs.items()}
    order = 0
    while values:
        terms = [c * t0**e for e, c in values.items()]
        if _relative_residual(terms) > profile.residual_tolerance:
            return order
        values = {e - 1: c * e for e, c in values.items() if e > 0}
        order += 1
    return order
