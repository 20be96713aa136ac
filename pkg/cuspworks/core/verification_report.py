# cuspworks/core/verification_report.py
"""
Runs a verification suite and collects one result per check.

A check passes when it returns, fails on ``SymbolicMismatch`` or any other
library or value error, and is skipped when the exact path could not decide it
(``ExactFactorizationFailed``, ``ToleranceAmbiguity``). Any other exception is
an error in the check itself; it is logged with its traceback and reported
without stopping the suite.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .errors import CuspworksError, ExactFactorizationFailed, SymbolicMismatch, ToleranceAmbiguity
from .proposition_checks import CHECKS, CheckContext, PropositionCheck
from .solver_profiles import DEFAULT_PROFILE, SolverProfile
from .suite_presets import SuitePreset

logger = logging.getLogger(__name__)


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    ERROR = "error"


@dataclass(frozen=True)
class CheckResult:
    id: str
    cite: str
    status: CheckStatus
    details: str
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "cite": self.cite,
            "status": self.status.value,
            "details": self.details,
        }


@dataclass
class VerificationReport:
    """Results of one suite run, ordered by check id."""

    suite: str
    seed: int
    profile: str
    results: list[CheckResult] = field(default_factory=list)

    def _count(self, status: CheckStatus) -> int:
        return sum(1 for r in self.results if r.status is status)

    @property
    def passed(self) -> int:
        return self._count(CheckStatus.PASS)

    @property
    def failed(self) -> int:
        return self._count(CheckStatus.FAIL)

    @property
    def skipped(self) -> int:
        return self._count(CheckStatus.SKIPPED)

    @property
    def errors(self) -> int:
        return self._count(CheckStatus.ERROR)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.errors == 0

    def to_dict(self) -> dict:
        return {
            "checks": [r.to_dict() for r in self.results],
            "passed": self.passed,
            "failed": self.failed,
            "errors": self.errors,
        }

    def summary(self) -> dict:
        """Counts plus the ids of failed, skipped and erroring checks."""
        return {
            "suite": self.suite,
            "seed": self.seed,
            "profile": self.profile,
            "total": len(self.results),
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "errors": self.errors,
            "failed_checks": [r.id for r in self.results if r.status is CheckStatus.FAIL],
            "skipped_checks": [r.id for r in self.results if r.status is CheckStatus.SKIPPED],
            "error_checks": [r.id for r in self.results if r.status is CheckStatus.ERROR],
            "seconds": round(sum(r.seconds for r in self.results), 3),
        }

    def lines(self) -> list[str]:
        out = [f"{r.status.value.upper():7} {r.id}: {r.details}" for r in self.results]
        summary = f"{self.passed} passed, {self.failed} failed, {self.skipped} skipped"
        if self.errors:
            summary += f", {self.errors} errors"
        out.append(summary)
        return out


def run_check(check: PropositionCheck, ctx: CheckContext) -> CheckResult:
    start = time.perf_counter()
    try:
        details = check.run(ctx)
        status = CheckStatus.PASS
    except (SymbolicMismatch, AssertionError) as exc:
        status, details = CheckStatus.FAIL, str(exc) or type(exc).__name__
    except (ExactFactorizationFailed, ToleranceAmbiguity) as exc:
        status, details = CheckStatus.SKIPPED, f"{type(exc).__name__}: {exc}"
    except (CuspworksError, ValueError) as exc:
        status, details = CheckStatus.FAIL, f"{type(exc).__name__}: {exc}"
    except Exception as exc:
        logger.exception("Check %s raised", check.id)
        status, details = CheckStatus.ERROR, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start

    if status is CheckStatus.FAIL:
        logger.warning("Check %s failed: %s", check.id, details)
    elif status is not CheckStatus.ERROR:
        logger.info("Check %s: %s (%.2fs)", check.id, status.value, elapsed)
    return CheckResult(check.id, check.cite, status, details, elapsed)


def run_suite(
    preset: SuitePreset,
    seed: int = 0,
    profile: SolverProfile = DEFAULT_PROFILE,
    jobs: int = 1,
) -> VerificationReport:
    """Run every check of ``preset``; random draws depend only on seed and check id."""
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    ctx = CheckContext(seed, profile)
    checks = [CHECKS[check_id] for check_id in preset.checks]
    logger.info(
        "Suite %s: %d checks, seed %d, profile %s", preset.id, len(checks), seed, profile.id
    )

    if jobs == 1:
        results = [run_check(c, ctx) for c in checks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: run_check(c, ctx), checks))

    results.sort(key=lambda r: r.id)
    return VerificationReport(preset.id, seed, profile.id, results)
