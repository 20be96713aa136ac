import dataclasses

import pytest

from cuspworks.core.errors import UnknownProfile
from cuspworks.core.solver_profiles import DEFAULT_PROFILE, SOLVER_PROFILES, get_profile


@pytest.mark.parametrize("profile_id", ["default", "quick", "thorough"])
def test_known_profiles(profile_id):
    profile = get_profile(profile_id)
    assert profile.id == profile_id
    assert 0 < profile.residual_tolerance < profile.separation_threshold
    assert profile.locus_draws > 0 and profile.fa_draws > 0


def test_default_profile():
    assert get_profile("default") is DEFAULT_PROFILE
    assert DEFAULT_PROFILE.locus_draws == 200
    assert DEFAULT_PROFILE.fa_draws == 100


def test_quick_draws_less_than_thorough():
    quick, thorough = get_profile("quick"), get_profile("thorough")
    assert quick.locus_draws < DEFAULT_PROFILE.locus_draws < thorough.locus_draws
    assert thorough.max_numerator > quick.max_numerator


def test_unknown_profile_lists_the_choices():
    with pytest.raises(UnknownProfile, match="default, quick, thorough"):
        get_profile("fast")


def test_profiles_are_frozen():
    with pytest.raises(dataclasses.FrozenInstanceError):
        DEFAULT_PROFILE.locus_draws = 1
    assert set(SOLVER_PROFILES) == {"default", "quick", "thorough"}
