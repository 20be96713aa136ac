# cuspworks/core/suite_presets.py

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownSuite


@dataclass(frozen=True)
class SuitePreset:
    id: str
    name: str
    description: str
    checks: tuple[str, ...]


LOCAL_CHECKS = (
    "local/tjurina-cusp",
    "local/tjurina-a2",
    "local/fiber-product-cusps",
    "local/miniversal-family",
)
S_CHECKS = (
    "S/induced-image",
    "S/induced-examples",
    "S/hyperplane-bound",
    "S/normal-form",
    "S/central-fiber",
)
C_CHECKS = (
    "C/remainder",
    "C/conditions",
    "C/solutions",
    "C/cubic-collapse",
    "C/trivial-families",
    "C/curve",
    "C/transversality",
    "C/three-nodes",
    "C/count-bound",
    "C/numeric-agreement",
    "C/lambda1-point",
)
FA_CHECKS = (
    "fa/expansion",
    "fa/closed-form-points",
    "fa/distinctness",
    "fa/coincident-cusp",
    "fa/map-g",
    "fa/image-meets-S",
    "fa/pullback",
    "fa/cross-count",
)
BLOWUP_CHECKS = (
    "blowup/first-system",
    "blowup/second-system",
    "blowup/intermediate-node",
    "blowup/final-smooth",
    "blowup/exceptional-fiber",
    "blowup/flop-centers",
    "blowup/stability",
    "blowup/chart-inverse",
)
FRIEDMAN_CHECKS = (
    "friedman/dimdef",
    "friedman/hodge",
    "friedman/local-t1",
    "friedman/rows",
)


SUITE_PRESETS: list[SuitePreset] = [
    SuitePreset(
        id="local",
        name="Local algebra",
        description="Tjurina bases, the miniversal family and the cusps of a fiber product.",
        checks=LOCAL_CHECKS,
    ),
    SuitePreset(
        id="S",
        name="Hyperplane S",
        description="Deformations induced by the two cuspidal curves fill the plane sigma = 0.",
        checks=S_CHECKS,
    ),
    SuitePreset(
        id="C",
        name="Three-node curve C",
        description="Elimination, the four three-node families and the curve C transversal to S.",
        checks=C_CHECKS,
    ),
    SuitePreset(
        id="fa",
        name="Three-line family",
        description="F_a, its nodes, the map g onto C and the pullback of the versal family.",
        checks=FA_CHECKS,
    ),
    SuitePreset(
        id="blowup",
        name="Small resolution",
        description="Two blow-ups resolving the cusp, the exceptional fiber and the flop centres.",
        checks=BLOWUP_CHECKS,
    ),
    SuitePreset(
        id="friedman",
        name="Deformation diagram",
        description="Dimension count of both rows of the deformation diagram of the fiber product.",
        checks=FRIEDMAN_CHECKS,
    ),
    SuitePreset(
        id="all",
        name="Everything",
        description="Every check of every suite.",
        checks=LOCAL_CHECKS + S_CHECKS + C_CHECKS + FA_CHECKS + BLOWUP_CHECKS + FRIEDMAN_CHECKS,
    ),
]


def list_suites() -> list[SuitePreset]:
    return SUITE_PRESETS


def get_suite(suite_id: str) -> SuitePreset:
    for s in SUITE_PRESETS:
        if s.id == suite_id:
            return s
    raise UnknownSuite(
        f"unknown suite {suite_id!r} (choose from {', '.join(s.id for s in SUITE_PRESETS)})"
    )
