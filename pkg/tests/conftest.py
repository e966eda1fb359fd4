from fractions import Fraction

import pytest

from pisoliton import StructureConstants, PiStructure, golden_manifest
from pisoliton.curvature import curvature
from pisoliton.analysis import build_instance, run

PHI3 = [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
XI3 = [0, 0, 1]

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pi3():
    return PiStructure(phi=PHI3, xi=XI3)


def scaled_family(t):
    t = Fraction(t)
    return StructureConstants.from_brackets(3, [[3, 1, 2, -t], [3, 2, 1, -t]])


def curvature_of(sc, ps=None):
    ps = ps or pi3()
    return curvature(sc, ps.g, ps.g_assoc, ps.phi)


@pytest.fixture(scope="session")
def golden():
    return golden_manifest()


@pytest.fixture(scope="session")
def golden_instance(golden):
    return build_instance(golden)


@pytest.fixture(scope="session")
def golden_run(golden):
    return run(golden, seed=0)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {line}")
