import pytest
from hypothesis import settings

from facemonoid.gcm import validate_gcm
from facemonoid.verify import TEST_MATRICES

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def gcms():
    return {name: validate_gcm(m) for name, m in TEST_MATRICES.items()}


@pytest.fixture(scope="session")
def fin(gcms):
    return gcms["M_fin"]


@pytest.fixture(scope="session")
def aff(gcms):
    return gcms["M_aff"]


@pytest.fixture(scope="session")
def hyp(gcms):
    return gcms["M_hyp"]


@pytest.fixture(scope="session")
def dec(gcms):
    return gcms["M_dec"]


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[num])
