import random
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from pisoliton import StructureConstants, PiStructure
from pisoliton.curvature import curvature
from pisoliton.checks import FAIL, PASS, SKIPPED
from pisoliton.classification import (
    EinsteinLikeFit,
    check_curvature_identities,
    check_eta_einstein_constants,
    check_rho_star,
    check_ricci_operator_identities,
    fit_einstein_like,
    is_para_sasaki_like,
)

from conftest import curvature_of, pi3, scaled_family
from test_structure import PHI5

SC5 = StructureConstants.from_brackets(5, [[5, 1, 2, -1], [5, 2, 1, -1], [5, 3, 4, -1], [5, 4, 3, -1]])
PS5 = PiStructure(phi=PHI5, xi=[0, 0, 0, 0, 1])


def reference():
    ps = pi3()
    conn, cd = curvature_of(scaled_family(1), ps)
    return ps, conn, cd


def test_reference_is_para_sasaki_like():
    ps, conn, cd = reference()
    rep = is_para_sasaki_like(ps, conn, cd)
    assert rep.passed
    assert [c.status for c in rep.checks] == [PASS] * 7


def test_abelian_is_not_para_sasaki_like():
    ps = pi3()
    conn, cd = curvature_of(StructureConstants.zero(3), ps)
    rep = is_para_sasaki_like(ps, conn, cd)
    assert not rep.passed
    assert "[1,3,1]" in " ".join(rep.checks[0].details)


@pytest.mark.parametrize("t", [Fraction(1, 2), 2, 3, -1])
def test_scaled_family_only_t_one(t):
    ps = pi3()
    conn, cd = curvature_of(scaled_family(t), ps)
    assert not is_para_sasaki_like(ps, conn, cd).passed


def test_five_dim_is_para_sasaki_like():
    conn, cd = curvature(SC5, PS5.g, PS5.g_assoc, PS5.phi)
    assert is_para_sasaki_like(PS5, conn, cd).passed
    assert check_curvature_identities(PS5, cd).passed


def test_curvature_identities_reference():
    ps, conn, cd = reference()
    rep = check_curvature_identities(ps, cd)
    assert rep.passed
    assert rep.checks[0].details == ["81 entries equal"]


def test_rho_star_values():
    ps, _, cd = reference()
    # rho* = -phi on the reference instance
    assert np.array_equal(cd.rho_star, -ps.phi)
    assert check_rho_star(ps, cd).ok
    assert check_rho_star(ps, cd, sign=+1).status == FAIL


def test_einstein_fit_reference():
    ps, _, cd = reference()
    fit = fit_einstein_like(cd.rho, ps.g, ps.g_assoc, ps.eta)
    assert fit.constants == (0, 0, -2)
    assert fit.kind == "eta-Einstein"


def test_flat_fit_is_einstein():
    ps = pi3()
    fit = fit_einstein_like(np.zeros((3, 3), dtype=int), ps.g, ps.g_assoc, ps.eta)
    assert fit.constants == (0, 0, 0) and fit.kind == "Einstein"


def test_perturbed_rho_has_no_fit():
    ps, _, cd = reference()
    rho = cd.rho.copy()
    rho[0, 0] += 1
    fit = fit_einstein_like(rho, ps.g, ps.g_assoc, ps.eta)
    assert fit.kind == "none" and fit.constants == (None, None, None)
    assert any(fit.residual.flat)


@pytest.mark.parametrize("ps", [pi3(), PS5], ids=["n1", "n2"])
def test_fit_round_trip(ps):
    rng = random.Random(7)
    for _ in range(50):
        a, b, c = (Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3))
        rho = a * ps.g + b * ps.g_assoc + c * ps.eta_eta
        fit = fit_einstein_like(rho, ps.g, ps.g_assoc, ps.eta)
        assert fit.constants == (a, b, c)
        if b:
            assert fit.kind == "para-Einstein-like"


def test_ricci_operator_identities():
    ps, conn, cd = reference()
    rep = check_ricci_operator_identities(ps, conn, cd)
    assert rep.passed
    assert check_ricci_operator_identities(ps, conn, cd, sign=+1).checks[0].status == FAIL
    conn5, cd5 = curvature(SC5, PS5.g, PS5.g_assoc, PS5.phi)
    assert check_ricci_operator_identities(PS5, conn5, cd5).passed


def test_ricci_operator_identities_gated():
    ps = pi3()
    conn, cd = curvature_of(StructureConstants.zero(3), ps)
    rep = check_ricci_operator_identities(ps, conn, cd)
    assert rep.skipped and not rep.passed


def test_perturbed_ricci_operator_is_located():
    ps, conn, cd = reference()
    Q = cd.Q.copy()
    Q[0, 1] += 1
    rep = check_ricci_operator_identities(ps, conn, replace(cd, Q=Q))
    assert rep.failures()
    assert any("got" in d for c in rep.failures() for d in c.details)


def test_eta_einstein_constants():
    ps, _, cd = reference()
    fit = fit_einstein_like(cd.rho, ps.g, ps.g_assoc, ps.eta)
    assert check_eta_einstein_constants(fit, cd.tau, cd.tau_assoc, 1).passed
    bad = EinsteinLikeFit(Fraction(0), Fraction(1), Fraction(-2), "para-Einstein-like", None)
    rep = check_eta_einstein_constants(bad, cd.tau, cd.tau_assoc, 1)
    assert rep["b = 0"].status == FAIL
    none = EinsteinLikeFit(None, None, None, "none", None)
    assert check_eta_einstein_constants(none, cd.tau, cd.tau_assoc, 1).checks[0].status == SKIPPED


@pytest.mark.parametrize("n", [1, 2, 3])
def test_eta_einstein_constants_at_tau_minus_2n(n):
    # tau = -2n reduces the constants to (a, b, c) = (0, 0, -2n), i.e. rho = -2n eta (x) eta
    fit = EinsteinLikeFit(Fraction(0), Fraction(0), Fraction(-2 * n), "eta-Einstein", None)
    assert check_eta_einstein_constants(fit, -2 * n, -2 * n, n).passed
    off = EinsteinLikeFit(Fraction(1), Fraction(0), Fraction(-2 * n), "eta-Einstein", None)
    assert check_eta_einstein_constants(off, -2 * n, -2 * n, n)["a = tau/2n + 1"].status == FAIL
