import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from g2solitons import catalog

settings.register_profile(
    "default",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("thorough", deadline=None, max_examples=200)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SOLITONS = ("n2", "n3", "n4", "n5", "n6", "n7")


@pytest.fixture
def rng():
    return np.random.default_rng(20241014)


@pytest.fixture(scope="session")
def entries():
    """Default catalog instances, built once."""
    return {name: catalog.get(name) for name in catalog.NAMES}


@pytest.fixture(scope="session")
def flows(entries):
    """Soliton trajectories on [0, 1] at dt = 1e-3 with diagnostics, built on first use."""
    from g2solitons.flow import integrate

    cache = {}

    def get(name):
        if name not in cache:
            e = entries[name]
            cache[name] = integrate(e.algebra, e.form, 1.0, 1e-3)
        return cache[name]

    return get


ACCEPTANCE: dict = {}


@pytest.fixture
def report_criterion():
    """Record and print one PASS/FAIL line, then assert it."""

    def record(n: int, ok: bool, detail: str = ""):
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        ACCEPTANCE[n] = line
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
