import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sgpd import catalog
from sgpd.oracle import random_partial_action, random_semigroupoid

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def small_actions(draw, max_order=4, max_carrier=4):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    S = random_semigroupoid(rng, max_order)
    return random_partial_action(rng, S, max_carrier)


@pytest.fixture
def nm():
    return catalog.null_semigroupoid()


@pytest.fixture
def nm_action():
    return catalog.null_action()


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
