from functools import lru_cache

import pytest

from solvsph.enumerate import enumerate_data
from solvsph.lie import build_chevalley
from solvsph.reconstruct import build_model
from solvsph.rootsys import build_root_system

ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def system(label):
    return build_root_system(label)


@lru_cache(maxsize=None)
def algebra(label):
    return build_chevalley(system(label))


@lru_cache(maxsize=None)
def data(label):
    return tuple(enumerate_data(system(label)))


@lru_cache(maxsize=None)
def model(d):
    return build_model(d, algebra(d.rs.label))


@pytest.fixture
def rs_factory():
    return system


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
