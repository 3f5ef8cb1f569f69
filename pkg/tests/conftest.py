import pytest
from hypothesis import settings

from rsqea.presentations import build_presentation

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def V():
    return build_presentation("V")


@pytest.fixture(scope="session")
def U():
    return build_presentation("U")


@pytest.fixture(params=["U", "V"], scope="session")
def P(request):
    return build_presentation(request.param)
