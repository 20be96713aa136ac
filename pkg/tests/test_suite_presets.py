import pytest

from cuspworks.core.errors import UnknownSuite
from cuspworks.core.proposition_checks import CHECKS, get_check
from cuspworks.core.suite_presets import get_suite, list_suites


def test_every_listed_check_is_registered():
    for suite in list_suites():
        for check_id in suite.checks:
            assert get_check(check_id).id == check_id


def test_check_ids_carry_their_suite_prefix():
    for suite in list_suites():
        if suite.id == "all":
            continue
        assert all(c.startswith(f"{suite.id}/") for c in suite.checks)
        assert len(set(suite.checks)) == len(suite.checks)


def test_all_is_the_union_of_the_suites():
    everything = get_suite("all").checks
    parts = [c for s in list_suites() if s.id != "all" for c in s.checks]
    assert list(everything) == parts
    assert set(everything) == set(CHECKS)


def test_every_check_has_a_citation():
    assert all(check.cite for check in CHECKS.values())


def test_unknown_suite():
    with pytest.raises(UnknownSuite, match="local, S, C, fa, blowup, friedman, all"):
        get_suite("D")
