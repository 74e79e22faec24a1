import os

import pytest
from hypothesis import HealthCheck, settings

from tcw.codes import FAMILIES, build_code, dual_code
from tcw.gf import build_field

SEED = int(os.environ.get("TCW_TEST_SEED", "0"))

settings.register_profile(
    "default", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# filled by test_acceptance, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def seed():
    return SEED


@pytest.fixture(scope="session")
def gf27():
    return build_field(3, 3)


@pytest.fixture(scope="session")
def m3_codes(gf27):
    """The eight ternary m=3 codes keyed by (pair, dual)."""
    out = {}
    for pair in FAMILIES:
        c = build_code(*pair, q=3, m=3, spec=gf27)
        out[pair, False] = c
        out[pair, True] = dual_code(c)
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
