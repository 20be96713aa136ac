# cuspworks/core/cyclo_arith.py
"""
Exact arithmetic in Q and in the cyclotomic field Q(eps), eps^2 + eps + 1 = 0.

Elements are stored on the basis {1, eps}, so equality is structural:
a + b*eps == c + d*eps exactly when a == c and b == d.  Rationals are
``fractions.Fraction`` (arbitrary precision, always reduced).

Also hosts the small exact linear-algebra helpers (row reduction, rank,
nullspace) used for Jacobian and tangent-space computations.
"""

from __future__ import annotations

import math
import random
from collections.abc import Sequence
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero

Rational = Fraction
Scalar = Union[int, Fraction, "CycloNumber"]

SQRT3_HALF = math.sqrt(3.0) / 2.0


def _as_rational(value: int | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class CycloNumber:
    """An element re + ep*eps of Q(eps). Immutable."""

    __slots__ = ("_re", "_ep")

    def __init__(self, re: int | Fraction = 0, ep: int | Fraction = 0):
        self._re = _as_rational(re)
        self._ep = _as_rational(ep)

    @classmethod
    def coerce(cls, value: Scalar) -> CycloNumber:
        if isinstance(value, CycloNumber):
            return value
        return cls(_as_rational(value))

    @classmethod
    def approximate(cls, z: complex, max_denominator: int) -> CycloNumber:
        """Closest element with denominators <= max_denominator to a complex number.

        Inverts the embedding: z = a + b*(-1 + i*sqrt(3))/2.
        """
        b = z.imag / SQRT3_HALF
        a = z.real + b / 2.0
        return cls(
            Fraction(a).limit_denominator(max_denominator),
            Fraction(b).limit_denominator(max_denominator),
        )

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def ep(self) -> Fraction:
        return self._ep

    def is_zero(self) -> bool:
        return self._re == 0 and self._ep == 0

    def is_rational(self) -> bool:
        return self._ep == 0

    # --- field operations ---
    def __add__(self, other: Scalar) -> CycloNumber:
        if not isinstance(other, (CycloNumber, int, Fraction)):
            return NotImplemented
        o = CycloNumber.coerce(other)
        return CycloNumber(self._re + o._re, self._ep + o._ep)

    __radd__ = __add__

    def __neg__(self) -> CycloNumber:
        return CycloNumber(-self._re, -self._ep)

    def __sub__(self, other: Scalar) -> CycloNumber:
        if not isinstance(other, (CycloNumber, int, Fraction)):
            return NotImplemented
        o = CycloNumber.coerce(other)
        return CycloNumber(self._re - o._re, self._ep - o._ep)

    def __rsub__(self, other: Scalar) -> CycloNumber:
        return CycloNumber.coerce(other) - self

    def __mul__(self, other: Scalar) -> CycloNumber:
        if not isinstance(other, (CycloNumber, int, Fraction)):
            return NotImplemented
        return cy_mul(self, CycloNumber.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> CycloNumber:
        if not isinstance(other, (CycloNumber, int, Fraction)):
            return NotImplemented
        return cy_mul(self, cy_inv(CycloNumber.coerce(other)))

    def __rtruediv__(self, other: Scalar) -> CycloNumber:
        return cy_mul(CycloNumber.coerce(other), cy_inv(self))

    def __pow__(self, exponent: int) -> CycloNumber:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else cy_inv(self)
        result = ONE
        n = abs(exponent)
        while n:
            if n & 1:
                result = cy_mul(result, base)
            base = cy_mul(base, base)
            n >>= 1
        return result

    def conjugate(self) -> CycloNumber:
        """Galois conjugate eps -> eps^2: a + b*eps -> (a - b) - b*eps."""
        return CycloNumber(self._re - self._ep, -self._ep)

    def norm(self) -> Fraction:
        a, b = self._re, self._ep
        return a * a - a * b + b * b

    def inverse(self) -> CycloNumber:
        return cy_inv(self)

    def to_complex(self) -> complex:
        re, im = cy_embed(self)
        return complex(re, im)

    # --- comparisons / hashing ---
    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloNumber):
            return self._re == other._re and self._ep == other._ep
        if isinstance(other, (int, Fraction)):
            return self._ep == 0 and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._ep == 0:
            return hash(self._re)
        return hash((self._re, self._ep))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self._re, self._ep)

    def __repr__(self) -> str:
        return f"CycloNumber({self._re!s}, {self._ep!s})"

    def __str__(self) -> str:
        if self._ep == 0:
            return str(self._re)
        if self._re == 0:
            return _eps_term(self._ep)
        sign = "-" if self._ep < 0 else "+"
        return f"({self._re}{sign}{_eps_term(abs(self._ep))})"


def _eps_term(coefficient: Fraction) -> str:
    if coefficient == 1:
        return "eps"
    if coefficient == -1:
        return "-eps"
    return f"{coefficient}*eps"


ZERO = CycloNumber(0, 0)
ONE = CycloNumber(1, 0)
EPS = CycloNumber(0, 1)
EPS2 = CycloNumber(-1, -1)
CUBE_ROOTS_OF_UNITY = (ONE, EPS, EPS2)


def cy_mul(x: CycloNumber, y: CycloNumber) -> CycloNumber:
    """(a + b eps)(c + d eps) = (ac - bd) + (ad + bc - bd) eps."""
    a, b = x.re, x.ep
    c, d = y.re, y.ep
    bd = b * d
    return CycloNumber(a * c - bd, a * d + b * c - bd)


def cy_inv(x: CycloNumber) -> CycloNumber:
    """x^-1 = (a - b - b eps) / N(x), N(a + b eps) = a^2 - ab + b^2."""
    n = x.norm()
    if n == 0:
        raise DivisionByZero("inverse of zero in Q(eps)")
    return CycloNumber((x.re - x.ep) / n, -x.ep / n)


def cy_embed(x: CycloNumber) -> tuple[float, float]:
    """Image under eps -> (-1 + i*sqrt(3))/2 as a (real, imaginary) pair."""
    return (float(x.re) - float(x.ep) / 2.0, float(x.ep) * SQRT3_HALF)


def eps_power(k: int) -> CycloNumber:
    return CUBE_ROOTS_OF_UNITY[k % 3]


def random_cyclo_number(
    rng: random.Random,
    max_numerator: int = 9,
    max_denominator: int = 4,
    zero_weight: float = 0.0,
) -> CycloNumber:
    """Random element with small numerators; exactly zero with probability zero_weight."""
    if zero_weight and rng.random() < zero_weight:
        return ZERO

    def part() -> Fraction:
        return Fraction(
            rng.randint(-max_numerator, max_numerator), rng.randint(1, max_denominator)
        )

    return CycloNumber(part(), part())


# --- exact linear algebra over Q(eps) ---


def row_reduce(rows: Sequence[Sequence[Scalar]]) -> tuple[list[list[CycloNumber]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    matrix = [[CycloNumber.coerce(v) for v in row] for row in rows]
    if not matrix:
        return [], []
    width = len(matrix[0])
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(matrix)) if not matrix[i][c].is_zero()), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        inv = cy_inv(matrix[r][c])
        matrix[r] = [v * inv for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and not matrix[i][c].is_zero():
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r], strict=True)]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    return matrix, pivots


def matrix_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(
    rows: Sequence[Sequence[Scalar]], width: int | None = None
) -> list[list[CycloNumber]]:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    if not rows:
        n = width or 0
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    reduced, pivots = row_reduce(rows)
    n = len(reduced[0])
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        vector = [ZERO] * n
        vector[free] = ONE
        for r, c in enumerate(pivots):
            vector[c] = -reduced[r][free]
        basis.append(vector)
    return basis
