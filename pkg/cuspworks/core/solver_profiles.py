# cuspworks/core/solver_profiles.py

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownProfile


@dataclass(frozen=True)
class SolverProfile:
    """Tolerances and sampling sizes for one run.

    Exact answers never depend on these; they steer the numeric path, the
    candidate generation of the exact root search and the randomized checks.
    """

    id: str
    name: str
    description: str

    # Numeric acceptance
    residual_tolerance: float = 1e-9
    separation_threshold: float = 1e-6
    agreement_tolerance: float = 1e-8
    embed_tolerance: float = 1e-12

    # Exact root recovery
    recovery_denominators: tuple[int, ...] = (1, 2, 3, 6, 12, 1000, 10**6)
    rational_scan_limit: int = 10**6

    # Randomized checks
    locus_draws: int = 200
    fa_draws: int = 100
    max_numerator: int = 9


SOLVER_PROFILES: dict[str, SolverProfile] = {
    "default": SolverProfile(
        id="default",
        name="Default",
        description="Tolerances and draw counts used by the verifier suites.",
    ),
    "quick": SolverProfile(
        id="quick",
        name="Quick",
        description="Fewer random draws; for interactive use and smoke tests.",
        locus_draws=20,
        fa_draws=10,
    ),
    "thorough": SolverProfile(
        id="thorough",
        name="Thorough",
        description="More draws with larger numerators and a tighter residual bound.",
        residual_tolerance=1e-11,
        locus_draws=1000,
        fa_draws=500,
        max_numerator=30,
    ),
}

DEFAULT_PROFILE = SOLVER_PROFILES["default"]


def get_profile(profile_id: str) -> SolverProfile:
    try:
        return SOLVER_PROFILES[profile_id]
    except KeyError:
        raise UnknownProfile(
            f"unknown profile {profile_id!r} (choose from {', '.join(SOLVER_PROFILES)})"
        ) from None
