import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mackeyspec.groups import build_group, catalog  # noqa: E402
from mackeyspec.spectrum import build_spectrum  # noqa: E402

ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.fixture(scope="session")
def groups():
    cache = {}

    def get(descriptor):
        if descriptor not in cache:
            cache[descriptor] = build_group(descriptor)
        return cache[descriptor]

    return get


@pytest.fixture(scope="session")
def spaces(groups):
    cache = {}

    def get(descriptor, local=None):
        key = (descriptor, local)
        if key not in cache:
            cache[key] = build_spectrum(groups(descriptor), local=local)
        return cache[key]

    return get


CATALOG_24 = catalog(24)
CATALOG_16 = catalog(16)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[name]}  criterion {name}")
