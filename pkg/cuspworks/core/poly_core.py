# cuspworks/core/poly_core.py
"""
Sparse multivariate polynomials over Q(eps).

A polynomial is a map from exponent tuples (indexed by a ``VarTable``) to
nonzero ``CycloNumber`` coefficients.  Variables flagged as Laurent in the
table may carry negative exponents; this is how parameter denominators such
as 1/sigma^2 are represented without a rational-function field.

Equality is term-map equality, so ``f == g`` is a proof of a polynomial
identity, never a numerical comparison.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType

from .cyclo_arith import ONE, ZERO, CycloNumber, Scalar
from .errors import (
    ExponentOverflow,
    InfiniteQuotient,
    NonUnitLaurentSubstitution,
    NonUnitLeadingCoefficient,
    TableMismatch,
    UnboundVariable,
    UnknownVariable,
    ZeroDivisor,
)

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]

# Exponents are machine-sized signed integers; degrees in this workbench stay tiny.
EXPONENT_LIMIT = 2**31 - 1


@dataclass(frozen=True)
class VarTable:
    """Ordered variable names plus the set of Laurent (invertible) variables."""

    names: tuple[str, ...]
    laurent: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "laurent", frozenset(self.laurent))
        if len(set(self.names)) != len(self.names):
            raise TableMismatch(f"duplicate variable names in {self.names}")
        stray = self.laurent.difference(self.names)
        if stray:
            raise UnknownVariable(f"laurent flag on unknown variable(s) {sorted(stray)}")

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise UnknownVariable(
                f"unknown variable {name!r} (table: {', '.join(self.names)})"
            ) from None

    def is_laurent(self, name: str) -> bool:
        return name in self.laurent

    @property
    def laurent_flags(self) -> tuple[bool, ...]:
        return tuple(name in self.laurent for name in self.names)

    def extend(self, *names: str, laurent: Iterable[str] = ()) -> VarTable:
        """Append the names not already present."""
        fresh = tuple(n for n in names if n not in self._positions)
        return VarTable(self.names + fresh, self.laurent | frozenset(laurent))

    def with_laurent(self, *names: str) -> VarTable:
        for name in names:
            self.index(name)
        return VarTable(self.names, self.laurent | frozenset(names))

    def without(self, *names: str) -> VarTable:
        dropped = set(names)
        return VarTable(
            tuple(n for n in self.names if n not in dropped), self.laurent - dropped
        )

    def zero_monomial(self) -> Monomial:
        return (0,) * len(self.names)


def _check_monomial(table: VarTable, exps: Monomial) -> None:
    if len(exps) != len(table):
        raise TableMismatch(f"monomial of length {len(exps)} for a table of size {len(table)}")
    for name, e, flag in zip(table.names, exps, table.laurent_flags, strict=True):
        if not isinstance(e, int):
            raise TypeError(f"exponent of {name} must be an int")
        if abs(e) > EXPONENT_LIMIT:
            raise ExponentOverflow(f"exponent {e} of {name} out of range")
        if e < 0 and not flag:
            raise TableMismatch(f"negative exponent on non-laurent variable {name}")


def _add_exponents(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b, strict=True))
    if any(abs(e) > EXPONENT_LIMIT for e in out):
        raise ExponentOverflow("exponent overflow in monomial product")
    return out


def monomial_degree(exps: Monomial) -> int:
    return sum(exps)


def graded_key(exps: Monomial) -> tuple[int, tuple[int, ...]]:
    """Ascending graded order; within a degree earlier variables come first."""
    return (sum(exps), tuple(-e for e in exps))


def monomial_str(table: VarTable, exps: Monomial) -> str:
    factors = []
    for name, e in zip(table.names, exps, strict=True):
        if e == 1:
            factors.append(name)
        elif e != 0:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def monomial_from_powers(table: VarTable, powers: Mapping[str, int]) -> Monomial:
    exps = [0] * len(table)
    for name, e in powers.items():
        exps[table.index(name)] = e
    out = tuple(exps)
    _check_monomial(table, out)
    return out


class Polynomial:
    """Immutable sparse polynomial; see module docstring."""

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: VarTable, terms: Mapping[Sequence[int], Scalar] | None = None):
        clean: dict[Monomial, CycloNumber] = {}
        for exps, c in (terms or {}).items():
            key = tuple(exps)
            _check_monomial(table, key)
            clean[key] = clean.get(key, ZERO) + CycloNumber.coerce(c)
        self.table = table
        self._terms = {k: v for k, v in clean.items() if not v.is_zero()}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, table: VarTable, terms: dict[Monomial, CycloNumber]) -> Polynomial:
        poly = cls.__new__(cls)
        poly.table = table
        poly._terms = {k: v for k, v in terms.items() if not v.is_zero()}
        poly._hash = None
        return poly

    # --- constructors ---
    @classmethod
    def zero(cls, table: VarTable) -> Polynomial:
        return cls._raw(table, {})

    @classmethod
    def constant(cls, table: VarTable, value: Scalar) -> Polynomial:
        return cls._raw(table, {table.zero_monomial(): CycloNumber.coerce(value)})

    @classmethod
    def variable(cls, table: VarTable, name: str) -> Polynomial:
        exps = [0] * len(table)
        exps[table.index(name)] = 1
        return cls._raw(table, {tuple(exps): ONE})

    @classmethod
    def monomial(
        cls, table: VarTable, powers: Mapping[str, int], coefficient: Scalar = 1
    ) -> Polynomial:
        exps = monomial_from_powers(table, powers)
        return cls._raw(table, {exps: CycloNumber.coerce(coefficient)})

    @classmethod
    def variables(cls, table: VarTable) -> tuple[Polynomial, ...]:
        return tuple(cls.variable(table, name) for name in table.names)

    # --- inspection ---
    @property
    def terms(self) -> Mapping[Monomial, CycloNumber]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self._terms)

    def constant_term(self) -> CycloNumber:
        return self._terms.get(self.table.zero_monomial(), ZERO)

    def constant_value(self) -> CycloNumber:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.constant_term()

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = self.table.index(name)
        return max((e[i] for e in self._terms), default=-1)

    def min_degree_in(self, name: str) -> int:
        i = self.table.index(name)
        return min((e[i] for e in self._terms), default=0)

    def variables_used(self) -> tuple[str, ...]:
        used = [False] * len(self.table)
        for exps in self._terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(n for n, flag in zip(self.table.names, used, strict=True) if flag)

    def coefficients(self, name: str) -> dict[int, Polynomial]:
        """Univariate view in ``name``: exponent -> coefficient polynomial."""
        i = self.table.index(name)
        buckets: dict[int, dict[Monomial, CycloNumber]] = {}
        for exps, c in self._terms.items():
            stripped = exps[:i] + (0,) + exps[i + 1 :]
            buckets.setdefault(exps[i], {})[stripped] = c
        return {e: Polynomial._raw(self.table, t) for e, t in buckets.items()}

    def coefficient(self, powers: Mapping[str, int]) -> Polynomial:
        """Coefficient of a monomial in the given variables, as a polynomial in the rest."""
        idx = {self.table.index(n): e for n, e in powers.items()}
        out = {}
        for exps, c in self._terms.items():
            if all(exps[i] == e for i, e in idx.items()):
                out[tuple(0 if i in idx else e for i, e in enumerate(exps))] = c
        return Polynomial._raw(self.table, out)

    def leading_coefficient(self, name: str) -> Polynomial:
        if self.is_zero():
            return self
        return self.coefficients(name)[self.degree_in(name)]

    def homogeneous_part(self, names: Sequence[str], degree: int) -> Polynomial:
        idx = [self.table.index(n) for n in names]
        return Polynomial._raw(
            self.table,
            {e: c for e, c in self._terms.items() if sum(e[i] for i in idx) == degree},
        )

    def is_unit(self) -> bool:
        """Nonzero scalar times a monomial in Laurent variables only."""
        if len(self._terms) != 1:
            return False
        (exps,) = self._terms
        return all(e == 0 or flag for e, flag in zip(exps, self.table.laurent_flags, strict=True))

    def unit_inverse(self) -> Polynomial:
        if self.is_zero():
            raise ZeroDivisor("the zero polynomial has no inverse")
        if not self.is_unit():
            raise NonUnitLeadingCoefficient(f"{self} is not a unit")
        ((exps, c),) = self._terms.items()
        return Polynomial._raw(self.table, {tuple(-e for e in exps): c.inverse()})

    def retable(self, table: VarTable) -> Polynomial:
        """Re-index onto another table containing every variable in use."""
        if table == self.table:
            return self
        positions = [table.index(n) if n in table else None for n in self.table.names]
        out = {}
        for exps, c in self._terms.items():
            new = [0] * len(table)
            for e, pos, name in zip(exps, positions, self.table.names, strict=True):
                if e:
                    if pos is None:
                        raise UnknownVariable(f"variable {name!r} missing from target table")
                    new[pos] = e
            key = tuple(new)
            _check_monomial(table, key)
            out[key] = c
        return Polynomial._raw(table, out)

    def map_coefficients(self, fn) -> Polynomial:
        return Polynomial._raw(self.table, {e: fn(c) for e, c in self._terms.items()})

    def conjugate(self) -> Polynomial:
        return self.map_coefficients(CycloNumber.conjugate)

    def sort_key(self) -> tuple:
        return tuple(sorted((e, c.sort_key()) for e, c in self._terms.items()))

    # --- arithmetic ---
    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            if other.table != self.table:
                raise TableMismatch(
                    f"tables differ: {self.table.names} vs {other.table.names}"
                )
            return other
        if isinstance(other, (CycloNumber, int, Fraction)):
            return Polynomial.constant(self.table, other)
        return None

    def __add__(self, other) -> Polynomial:
        o = self._coerce(other)
        return NotImplemented if o is None else p_add(self, o)

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        o = self._coerce(other)
        return NotImplemented if o is None else p_add(self, p_neg(o))

    def __rsub__(self, other) -> Polynomial:
        o = self._coerce(other)
        return NotImplemented if o is None else p_add(o, p_neg(self))

    def __neg__(self) -> Polynomial:
        return p_neg(self)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (CycloNumber, int, Fraction)):
            c = CycloNumber.coerce(other)
            return Polynomial._raw(self.table, {e: v * c for e, v in self._terms.items()})
        o = self._coerce(other)
        return NotImplemented if o is None else p_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Polynomial:
        if isinstance(other, (CycloNumber, int, Fraction)):
            return self * CycloNumber.coerce(other).inverse()
        o = self._coerce(other)
        return NotImplemented if o is None else p_mul(self, o.unit_inverse())

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int):
            return NotImplemented
        return p_pow(self, exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.table == other.table and self._terms == other._terms
        if isinstance(other, (CycloNumber, int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # --- calculus / composition ---
    def derivative(self, name: str) -> Polynomial:
        return p_derivative(self, name)

    def substitute(
        self, bindings: Mapping[str, Polynomial | Scalar], table: VarTable | None = None
    ) -> Polynomial:
        return p_substitute(self, bindings, table)

    def evaluate(self, point: Mapping[str, Scalar]) -> CycloNumber:
        return p_eval(self, point)

    # --- printing ---
    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
        parts = []
        for exps, c in ordered:
            mono = "" if not any(exps) else monomial_str(self.table, exps)
            if not mono:
                text = str(c)
            elif c == 1:
                text = mono
            elif c == -1:
                text = f"-{mono}"
            else:
                text = f"{c}*{mono}"
            if parts:
                parts.append(f" - {text[1:]}" if text.startswith("-") else f" + {text}")
            else:
                parts.append(text)
        return "".join(parts)


# --- ring operations ---


def _same_table(f: Polynomial, g: Polynomial) -> None:
    if f.table != g.table:
        raise TableMismatch(f"tables differ: {f.table.names} vs {g.table.names}")


def p_add(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_table(f, g)
    out = dict(f._terms)
    for e, c in g._terms.items():
        out[e] = out.get(e, ZERO) + c
    return Polynomial._raw(f.table, out)


def p_neg(f: Polynomial) -> Polynomial:
    return Polynomial._raw(f.table, {e: -c for e, c in f._terms.items()})


def p_sub(f: Polynomial, g: Polynomial) -> Polynomial:
    return p_add(f, p_neg(g))


def p_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_table(f, g)
    out: dict[Monomial, CycloNumber] = {}
    for (ea, ca), (eb, cb) in itertools.product(f._terms.items(), g._terms.items()):
        e = _add_exponents(ea, eb)
        out[e] = out.get(e, ZERO) + ca * cb
    return Polynomial._raw(f.table, out)


def p_pow(f: Polynomial, exponent: int) -> Polynomial:
    base = f if exponent >= 0 else f.unit_inverse()
    result = Polynomial.constant(f.table, 1)
    n = abs(exponent)
    while n:
        if n & 1:
            result = p_mul(result, base)
        n >>= 1
        if n:
            base = p_mul(base, base)
    return result


def p_derivative(f: Polynomial, name: str) -> Polynomial:
    """Formal partial derivative; Laurent variables follow the same power rule."""
    i = f.table.index(name)
    out = {}
    for exps, c in f._terms.items():
        e = exps[i]
        if e:
            out[exps[:i] + (e - 1,) + exps[i + 1 :]] = c * e
    return Polynomial._raw(f.table, out)


def p_substitute(
    f: Polynomial,
    bindings: Mapping[str, Polynomial | Scalar],
    table: VarTable | None = None,
) -> Polynomial:
    """Compose f with ``bindings``; unbound variables map to themselves in the target table.

    A variable appearing with a negative exponent may only be bound to a unit.
    """
    for name in bindings:
        f.table.index(name)
    target = table or _infer_target(f, bindings)

    images: list[Polynomial | None] = []
    for name in f.table.names:
        if name in bindings:
            value = bindings[name]
            if isinstance(value, Polynomial):
                images.append(value.retable(target))
            else:
                images.append(Polynomial.constant(target, value))
        elif name in target:
            images.append(Polynomial.variable(target, name))
        else:
            images.append(None)

    negative = [False] * len(images)
    for exps in f._terms:
        for i, e in enumerate(exps):
            if e < 0:
                negative[i] = True
    for i, img in enumerate(images):
        if not negative[i]:
            continue
        if img is None:
            raise UnknownVariable(f"variable {f.table.names[i]!r} missing from target table")
        if not img.is_unit():
            raise NonUnitLaurentSubstitution(
                f"{f.table.names[i]} occurs with a negative power; its image {img} is not a unit"
            )

    cache: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in cache:
            image = images[i]
            if image is None:
                raise UnknownVariable(f"variable {f.table.names[i]!r} missing from target table")
            cache[key] = p_pow(image, e)
        return cache[key]

    result: dict[Monomial, CycloNumber] = {}
    for exps, c in f._terms.items():
        term = Polynomial.constant(target, c)
        for i, e in enumerate(exps):
            if e:
                term = p_mul(term, power(i, e))
        for e, v in term._terms.items():
            result[e] = result.get(e, ZERO) + v
    return Polynomial._raw(target, result)


def _infer_target(f: Polynomial, bindings: Mapping[str, Polynomial | Scalar]) -> VarTable:
    tables = {b.table for b in bindings.values() if isinstance(b, Polynomial)}
    if not tables:
        return f.table
    if len(tables) > 1:
        raise TableMismatch("substitution bindings live in different tables")
    return tables.pop()


def p_eval(f: Polynomial, point: Mapping[str, Scalar]) -> CycloNumber:
    missing = [n for n in f.table.names if n not in point]
    if missing:
        raise UnboundVariable(f"no value for {', '.join(missing)}")
    values = [CycloNumber.coerce(point[n]) for n in f.table.names]
    total = ZERO
    for exps, c in f._terms.items():
        term = c
        for v, e in zip(values, exps, strict=True):
            if e:
                term = term * v**e
        total = total + term
    return total


# --- univariate views ---


def univariate_division(f: Polynomial, g: Polynomial, main: str) -> tuple[Polynomial, Polynomial]:
    """Division with remainder in ``main``: f = q*g + r with deg_main(r) < deg_main(g).

    The leading coefficient of g in ``main`` must be a unit of the coefficient
    ring, i.e. a nonzero scalar times a monomial in Laurent variables.
    """
    _same_table(f, g)
    if g.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    deg_g = g.degree_in(main)
    lead = g.leading_coefficient(main)
    if not lead.is_unit():
        raise NonUnitLeadingCoefficient(
            f"leading coefficient {lead} of the divisor in {main} is not a unit; "
            "flag its variables as laurent first"
        )
    inv = lead.unit_inverse()
    x = Polynomial.variable(f.table, main)
    q = Polynomial.zero(f.table)
    r = f
    while not r.is_zero() and r.degree_in(main) >= deg_g:
        shift = r.degree_in(main) - deg_g
        t = r.leading_coefficient(main) * inv * p_pow(x, shift)
        q = q + t
        r = r - t * g
    return q, r


def univariate_gcd(f: Polynomial, g: Polynomial, main: str) -> Polynomial:
    """Monic gcd by Euclid's algorithm; requires unit leading coefficients along the way."""
    _same_table(f, g)
    a, b = f, g
    while not b.is_zero():
        _, r = univariate_division(a, b, main)
        a, b = b, r
    if a.is_zero():
        return a
    return a * a.leading_coefficient(main).unit_inverse()


def monomial_quotient_basis(
    generators: Sequence[Monomial], table: VarTable, restricted_vars: Sequence[str]
) -> list[Monomial]:
    """Standard monomials of a monomial ideal: those divisible by no generator.

    Only generators supported on ``restricted_vars`` take part.  Every
    restricted variable needs a pure power among them, else the quotient is
    infinite.
    """
    idx = [table.index(n) for n in restricted_vars]
    others = [i for i in range(len(table)) if i not in idx]
    gens = [g for g in generators if all(g[i] == 0 for i in others)]

    bounds = []
    for i in idx:
        pure = [g[i] for g in gens if g[i] > 0 and all(g[j] == 0 for j in idx if j != i)]
        if not pure:
            raise InfiniteQuotient(
                f"no pure power of {table.names[i]} among the generators; the quotient is infinite"
            )
        bounds.append(min(pure))

    basis = []
    for powers in itertools.product(*(range(b) for b in bounds)):
        exps = [0] * len(table)
        for i, e in zip(idx, powers, strict=True):
            exps[i] = e
        candidate = tuple(exps)
        if not any(all(candidate[i] >= g[i] for i in idx) for g in gens):
            basis.append(candidate)
    basis.sort(key=graded_key)
    logger.debug("Quotient basis over %s: %d monomials", restricted_vars, len(basis))
    return basis
