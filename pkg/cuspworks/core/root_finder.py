# cuspworks/core/root_finder.py
"""
Roots of univariate polynomials over Q(eps), exact and numeric.

Exact search finds linear factors only.  Candidates come from two sources:
  - companion-matrix roots (numpy) pulled back through the embedding and
    rounded to small denominators;
  - a rational-root scan on the norm polynomial, times 1, eps, eps^2.
Every candidate is confirmed by exact evaluation, and multiplicities by
repeated exact division, so a wrong guess can never produce a wrong root.

A polynomial in the main variable and one Laurent scale variable is
handled when it is weighted homogeneous: the scale is set to 1 and the roots
are lifted back as r * scale^d.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import divisors

from .cyclo_arith import CUBE_ROOTS_OF_UNITY, ZERO, CycloNumber
from .errors import ExactFactorizationFailed
from .poly_core import Polynomial, VarTable, univariate_division, univariate_gcd
from .solver_profiles import DEFAULT_PROFILE, SolverProfile

logger = logging.getLogger(__name__)

NEWTON_STEPS = 3


@dataclass(frozen=True)
class RootSearch:
    """Outcome of the exact linear-factor search.

    Args:
        roots: (root, multiplicity) pairs; roots are polynomials in the scale
            variable (constants when there is none)
        degree: degree of the searched polynomial in the main variable
    """

    roots: tuple[tuple[Polynomial, int], ...]
    degree: int

    @property
    def found(self) -> int:
        return sum(m for _, m in self.roots)

    @property
    def complete(self) -> bool:
        return self.found == self.degree


def dense_coefficients(f: Polynomial, main: str) -> list[CycloNumber]:
    """Constant coefficients of a univariate polynomial, highest degree first."""
    coeffs = f.coefficients(main)
    if any(not c.is_constant() for c in coeffs.values()):
        raise ExactFactorizationFailed(f"{f} has non-constant coefficients in {main}")
    if any(e < 0 for e in coeffs):
        raise ExactFactorizationFailed(f"{f} has negative powers of {main}")
    degree = max(coeffs)
    return [coeffs[e].constant_term() if e in coeffs else ZERO for e in range(degree, -1, -1)]


def polish_roots(coeffs: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """A few Newton steps on each companion-matrix root."""
    derivative = np.polyder(coeffs)
    polished = roots.astype(complex)
    for _ in range(NEWTON_STEPS):
        slope = np.polyval(derivative, polished)
        safe = np.abs(slope) > 0
        step = np.zeros_like(polished)
        step[safe] = np.polyval(coeffs, polished[safe]) / slope[safe]
        polished = polished - step
    return polished


def numeric_roots(coeffs: list[complex] | np.ndarray) -> np.ndarray:
    """Companion-matrix roots of a dense coefficient vector (highest degree first)."""
    array = np.trim_zeros(np.asarray(coeffs, dtype=complex), "f")
    if array.size <= 1:
        return np.zeros(0, dtype=complex)
    return polish_roots(array, np.roots(array))


def root_multiplicity(f: Polynomial, main: str, root: CycloNumber | Polynomial) -> int:
    """Number of times (main - root) divides f exactly."""
    factor = Polynomial.variable(f.table, main) - root
    multiplicity = 0
    current = f
    while not current.is_zero():
        q, r = univariate_division(current, factor, main)
        if not r.is_zero():
            break
        multiplicity += 1
        current = q
    return multiplicity


def _norm_scan_candidates(
    coeffs: list[CycloNumber], limit: int
) -> list[CycloNumber]:
    """Rational-root candidates of the norm polynomial, times the cube roots of unity."""
    table = VarTable(("z",))
    z = Polynomial.variable(table, "z")
    top = len(coeffs) - 1
    u = sum((c * z ** (top - i) for i, c in enumerate(coeffs)), Polynomial.zero(table))
    norm = u * u.conjugate()
    dense = dense_coefficients(norm, "z")
    if any(not c.is_rational() for c in dense):
        return []
    rationals = [c.re for c in dense]
    scale = math.lcm(*(r.denominator for r in rationals))
    integers = [int(r * scale) for r in rationals]
    lead, tail = abs(integers[0]), abs(integers[-1])
    if tail == 0 or lead > limit or tail > limit:
        return []
    candidates = set()
    for p in divisors(tail):
        for q in divisors(lead):
            for sign in (1, -1):
                candidates.add(Fraction(sign * p, q))
    return [c * unit for c in sorted(candidates) for unit in CUBE_ROOTS_OF_UNITY]


def _constant_roots(
    f: Polynomial, main: str, profile: SolverProfile
) -> list[tuple[CycloNumber, int]]:
    """Distinct roots in Q(eps) of a constant-coefficient polynomial with multiplicities."""
    found: dict[CycloNumber, int] = {}
    shift = f.min_degree_in(main)
    if shift > 0:
        found[ZERO] = shift
        f = univariate_division(f, Polynomial.monomial(f.table, {main: shift}), main)[0]
    if f.degree_in(main) <= 0:
        return list(found.items())

    squarefree = univariate_division(f, univariate_gcd(f, f.derivative(main), main), main)[0]
    coeffs = dense_coefficients(squarefree, main)
    target = len(coeffs) - 1

    def accept(candidate: CycloNumber) -> None:
        if candidate in found:
            return
        point = {n: (candidate if n == main else 0) for n in f.table.names}
        if squarefree.evaluate(point).is_zero():
            found[candidate] = root_multiplicity(f, main, candidate)

    approximations = numeric_roots([c.to_complex() for c in coeffs])
    for z in approximations:
        for denominator in profile.recovery_denominators:
            accept(CycloNumber.approximate(complex(z), denominator))
    if sum(1 for r in found if not r.is_zero()) < target:
        for candidate in _norm_scan_candidates(coeffs, profile.rational_scan_limit):
            accept(candidate)
    return list(found.items())


def _scale_weight(f: Polynomial, main: str, scale: str) -> Fraction | None:
    """Weight d with main ~ scale^d making f weighted homogeneous; None if impossible."""
    i, j = f.table.index(main), f.table.index(scale)
    pairs = {(e[i], e[j]) for e in f.terms}
    mains = sorted({a for a, _ in pairs})
    if len(mains) < 2:
        return Fraction(0) if len({b for _, b in pairs}) == 1 else None
    (a1, b1), (a2, b2) = (
        next(p for p in pairs if p[0] == mains[0]),
        next(p for p in pairs if p[0] == mains[-1]),
    )
    d = Fraction(b1 - b2, a2 - a1)
    total = a1 * d + b1
    if any(a * d + b != total for a, b in pairs):
        return None
    return d


def linear_factor_roots(
    f: Polynomial, main: str, profile: SolverProfile = DEFAULT_PROFILE
) -> RootSearch:
    """Exact roots of f in ``main`` over Q(eps), optionally scaled by one Laurent parameter."""
    if f.is_zero():
        raise ExactFactorizationFailed("the polynomial vanishes identically")
    others = [n for n in f.variables_used() if n != main]
    if not others:
        constant_roots = _constant_roots(f, main, profile)
        lifted = [(Polynomial.constant(f.table, r), m) for r, m in constant_roots]
        return _finish(f, main, lifted, f.degree_in(main))
    if len(others) > 1:
        raise ExactFactorizationFailed(
            f"more than one symbolic parameter ({', '.join(others)}) in {f}"
        )

    (scale,) = others
    d = _scale_weight(f, main, scale)
    if d is None or d.denominator != 1:
        raise ExactFactorizationFailed(f"{f} is not weighted homogeneous in {main}, {scale}")
    weight = int(d)
    if weight < 0 and not f.table.is_laurent(scale):
        raise ExactFactorizationFailed(f"roots would need negative powers of {scale}")

    specialized = f.substitute({scale: 1})
    lifted = []
    scale_power = Polynomial.monomial(f.table, {scale: weight})
    for root, multiplicity in _constant_roots(specialized, main, profile):
        lifted.append((scale_power * root, multiplicity))
    for root, _ in lifted:
        check = f.substitute({main: root})
        if not check.is_zero():
            raise ExactFactorizationFailed(f"lifted root {root} does not annihilate {f}")
    return _finish(f, main, lifted, specialized.degree_in(main))


def _finish(
    f: Polynomial, main: str, roots: list[tuple[Polynomial, int]], degree: int
) -> RootSearch:
    roots.sort(key=lambda rm: rm[0].sort_key())
    search = RootSearch(tuple(roots), max(degree, 0))
    logger.debug(
        "Linear factors of %s in %s: %d of %d", f, main, search.found, search.degree
    )
    return search


def require_split(f: Polynomial, main: str, profile: SolverProfile = DEFAULT_PROFILE) -> RootSearch:
    """Like linear_factor_roots but raise unless f splits completely."""
    search = linear_factor_roots(f, main, profile)
    if not search.complete:
        raise ExactFactorizationFailed(
            f"{f} does not split into linear factors over Q(eps) "
            f"({search.found} of {search.degree} roots found)"
        )
    return search
