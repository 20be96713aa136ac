import random

import pytest

from cuspworks.core.solver_profiles import get_profile


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def quick():
    return get_profile("quick")
