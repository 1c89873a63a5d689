import pytest

from defshadow.models import build_dfr_model, build_example_algebra


@pytest.fixture(scope="session")
def so41():
    return build_example_algebra()


@pytest.fixture(scope="session")
def dfr():
    return build_dfr_model()
