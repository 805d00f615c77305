import os

import hypothesis
import numpy as np
import pytest

from module.gruppen import build_group
from module.zufall import make_rng

np.seterr(all="warn")

hypothesis.settings.register_profile("dev", max_examples=10, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=50, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture
def rng():
    return make_rng(1234)


@pytest.fixture(scope="session")
def z8():
    return build_group("cyclic", 8)


@pytest.fixture(scope="session")
def d4():
    return build_group("dihedral", 4)


@pytest.fixture(scope="session")
def aff5():
    return build_group("affine", 5)
