from __future__ import annotations

import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from modsimple.builders import build  # noqa: E402


@lru_cache(maxsize=None)
def cached_group(spec: str):
    return build(spec)


@pytest.fixture
def group():
    return cached_group


def elements_of(G):
    """Element set as tuples, for the brute-force oracles."""
    return {tuple(int(x) for x in row) for row in G.elements}


def gens_of(G):
    return [g.images for g in G.generators]


# -- acceptance summary: one line per criterion --------------------------------------------

_criteria: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number covered by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for n in getattr(report, "criteria", ()):
        _criteria.setdefault(n, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = tuple(m.args[0] for m in item.iter_markers("criterion"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok = all(_criteria[n])
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} "
                                    f"({sum(_criteria[n])}/{len(_criteria[n])} checks)")
