from __future__ import annotations

from pathlib import Path

import pytest

from lexkit.dialects import read_resource
from lexkit.resources import demo_registry, demo_tagset

DATA = Path(__file__).parent / "data"

# filled by test_acceptance, printed after the run
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def data_path(name: str) -> Path:
    return DATA / name


@pytest.fixture(scope="session")
def registry():
    return demo_registry()


@pytest.fixture(scope="session")
def tagset_de(registry):
    return demo_tagset("de", registry)


@pytest.fixture(scope="session")
def tagset_fr(registry):
    return demo_tagset("fr", registry)


@pytest.fixture(scope="session")
def championne(registry):
    return read_resource(data_path("championne.morphalou.xml").read_bytes(), "morphalou", registry)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
