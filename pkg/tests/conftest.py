import os

import pytest
from hypothesis import HealthCheck, settings

from coverquant.halfalg import HalfAlgebra
from coverquant.rootdatum import builtin

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=15,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def osp12():
    return builtin("osp(1|2)")


@pytest.fixture(scope="session")
def osp14():
    return builtin("osp(1|4)")


@pytest.fixture(scope="session")
def f12(osp12):
    return HalfAlgebra(osp12, 12)


@pytest.fixture(scope="session")
def f14(osp14):
    return HalfAlgebra(osp14, 7)
