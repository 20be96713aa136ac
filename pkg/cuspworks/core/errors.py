# cuspworks/core/errors.py
"""Exception hierarchy shared by every core module.

Library code raises these; only the command-line layer turns them into
report entries and exit codes.
"""

from __future__ import annotations


class CuspworksError(Exception):
    """Base class for all workbench errors."""


# --- arithmetic ---
class DivisionByZero(CuspworksError, ZeroDivisionError):
    pass


class ExponentOverflow(CuspworksError, OverflowError):
    pass


# --- polynomial kernel ---
class TableMismatch(CuspworksError):
    pass


class UnknownVariable(CuspworksError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class UnboundVariable(CuspworksError):
    pass


class NonUnitLaurentSubstitution(CuspworksError):
    pass


class NonUnitLeadingCoefficient(CuspworksError):
    pass


class ZeroDivisor(CuspworksError):
    pass


class InfiniteQuotient(CuspworksError):
    pass


class ParseError(CuspworksError):
    """Raised by the expression grammar; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


# --- singularity lab ---
class NotMonomialReducible(CuspworksError):
    pass


class NotACriticalPoint(CuspworksError):
    pass


class ExactFactorizationFailed(CuspworksError):
    """Exact linear-factor search did not split the eliminated polynomial."""

    fallback = "--mode numeric"


class ToleranceAmbiguity(CuspworksError):
    pass


# --- verifier / blow-ups ---
class SymbolicMismatch(CuspworksError):
    """A displayed identity failed to hold: an implementation bug, not bad input."""


class ZeroScale(CuspworksError):
    pass


class CenterNotLinear(CuspworksError):
    pass


class NothingToTransform(CuspworksError):
    pass


class PointNotOnVariety(CuspworksError):
    pass


# --- configuration ---
class UnknownProfile(CuspworksError):
    pass


class UnknownSuite(CuspworksError):
    pass
