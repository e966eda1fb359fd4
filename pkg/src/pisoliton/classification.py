"""Structural predicates and exact Einstein-like fits."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .checks import PASS, Check, CheckReport, entrywise, equal, skipped
from .curvature import Connection, CurvatureData, nabla_tensor
from .exact import solve_linear, zeros
from .structure import PiStructure

__all__ = [
    "EinsteinLikeFit",
    "is_para_sasaki_like",
    "check_curvature_identities",
    "check_rho_star",
    "fit_einstein_like",
    "check_ricci_operator_identities",
    "check_eta_einstein_constants",
]

EINSTEIN, ETA_EINSTEIN, PARA_EINSTEIN_LIKE, NONE = "Einstein", "eta-Einstein", "para-Einstein-like", "none"


def is_para_sasaki_like(ps: PiStructure, conn: Connection, cd: CurvatureData | None = None) -> CheckReport:
    """Test ``(D_x phi) y = -g(x,y) xi - eta(y) x + 2 eta(x) eta(y) xi`` on frame vectors.

    When it holds and ``cd`` is given, the standard consequences for
    ``D xi``, ``D eta``, ``R(x,y) xi``, ``R(xi,y) xi`` and ``rho(., xi)``
    are checked as well.
    """
    d, n = ps.dim, ps.n
    g, xi, eta, phi = ps.g, ps.xi, ps.eta, ps.phi
    nphi = nabla_tensor(conn, phi, "ul")  # nphi[i, a, j] = ((D_i phi) e_j)^a
    expected = zeros((d, d, d))
    for i in range(d):
        for a in range(d):
            for j in range(d):
                expected[i, a, j] = -g[i, j] * xi[a] - eta[j] * (1 if a == i else 0) + 2 * eta[i] * eta[j] * xi[a]
    report = CheckReport("para-Sasaki-like", [entrywise("(D_x phi) y", nphi, expected)])
    if report.checks[0].status != PASS or cd is None:
        return report

    nxi = nabla_tensor(conn, xi, "u")
    report.checks.append(entrywise("D_x xi = phi x", nxi, phi.T))
    neta = nabla_tensor(conn, eta, "l")
    report.checks.append(entrywise("(D_x eta)(y) = g(x, phi y)", neta, g @ phi))

    R_op = cd.R_op
    rxy_xi = zeros((d, d, d))
    want = zeros((d, d, d))
    for i in range(d):
        for j in range(d):
            for l in range(d):
                rxy_xi[i, j, l] = sum((R_op[i, j, k, l] * xi[k] for k in range(d)), Fraction(0))
                want[i, j, l] = -eta[j] * (1 if l == i else 0) + eta[i] * (1 if l == j else 0)
    report.checks.append(entrywise("R(x,y) xi = -eta(y) x + eta(x) y", rxy_xi, want))

    rxi = zeros((d, d))
    for j in range(d):
        for l in range(d):
            rxi[j, l] = sum((xi[i] * xi[k] * R_op[i, j, k, l] for i in range(d) for k in range(d)), Fraction(0))
    report.checks.append(entrywise("R(xi,y) xi = phi^2 y", rxi, (phi @ phi).T))

    report.checks.append(entrywise("rho(x, xi) = -2n eta(x)", cd.rho @ xi, -2 * n * eta))
    report.checks.append(equal("rho(xi, xi) = -2n", xi @ cd.rho @ xi, -2 * n))
    return report


def check_rho_star(ps: PiStructure, cd: CurvatureData, sign: int = -1) -> Check:
    """``rho*(y,z) = rho(y, phi z) + sign (2n-1) g(y, phi z)``.

    ``sign = -1`` is the contraction of the ``R(x,y,phi z,w) - R(x,y,z,phi w)``
    identity over ``x, w``; ``sign = +1`` evaluates the opposite-sign variant.
    """
    n = ps.n
    rhs = cd.rho @ ps.phi + sign * (2 * n - 1) * (ps.g @ ps.phi)
    label = "-" if sign < 0 else "+"
    return entrywise(f"rho*(y,z) = rho(y,phi z) {label} (2n-1) g(y,phi z)", cd.rho_star, rhs)


def check_curvature_identities(ps: PiStructure, cd: CurvatureData) -> CheckReport:
    """Entrywise ``R(x,y,phi z,w) - R(x,y,z,phi w)`` identity and its ``rho*`` trace."""
    d = ps.dim
    g, eta, phi, R = ps.g, ps.eta, ps.phi, cd.R
    gphi = g @ phi
    lhs = zeros((d, d, d, d))
    rhs = zeros((d, d, d, d))

    def A(a, b):
        return g[a, b] - 2 * eta[a] * eta[b]

    for x, y, z, w in np.ndindex(R.shape):
        lhs[x, y, z, w] = sum((R[x, y, m, w] * phi[m, z] - R[x, y, z, m] * phi[m, w] for m in range(d)), Fraction(0))
        rhs[x, y, z, w] = -A(y, z) * gphi[x, w] - A(y, w) * gphi[x, z] + A(x, z) * gphi[y, w] + A(x, w) * gphi[y, z]
    return CheckReport(
        "curvature identities",
        [entrywise("R(x,y,phi z,w) - R(x,y,z,phi w)", lhs, rhs), check_rho_star(ps, cd)],
    )


@dataclass
class EinsteinLikeFit:
    a: Fraction | None
    b: Fraction | None
    c: Fraction | None
    kind: str
    residual: np.ndarray

    @property
    def constants(self):
        return (self.a, self.b, self.c)


def fit_einstein_like(rho, g, g_assoc, eta) -> EinsteinLikeFit:
    """Exact solve of ``rho = a g + b g~ + c eta (x) eta``."""
    rho = np.asarray(rho, dtype=object)
    d = rho.shape[0]
    ee = np.outer(eta, eta)
    rows, rhs = [], []
    for i in range(d):
        for j in range(d):
            rows.append([g[i][j], g_assoc[i][j], ee[i, j]])
            rhs.append(rho[i, j])
    sol = solve_linear(rows, rhs)
    if sol.rank < 3:
        raise AssertionError("g, g~ and eta (x) eta are linearly dependent")
    if not sol.consistent:
        return EinsteinLikeFit(None, None, None, NONE, rho.copy())
    a, b, c = sol.values
    if b == 0 and c == 0:
        kind = EINSTEIN
    elif b == 0:
        kind = ETA_EINSTEIN
    else:
        kind = PARA_EINSTEIN_LIKE
    return EinsteinLikeFit(a, b, c, kind, zeros((d, d)))


def check_ricci_operator_identities(
    ps: PiStructure,
    conn: Connection,
    cd: CurvatureData,
    sasaki: CheckReport | None = None,
    sign: int = -1,
) -> CheckReport:
    """Ricci operator identities of para-Sasaki-like manifolds.

    * ``(D_x Q) xi = -Q phi x + sign 2n phi x``
    * ``(D_xi Q) y = -2 Q phi y``
    * ``eta((D_x Q) xi) = 0`` and ``eta((D_xi Q) y) = 0``

    Differentiating ``Q xi = -2n xi`` with ``D xi = phi`` forces ``sign = -1``;
    ``sign = +1`` evaluates the opposite-sign variant.
    """
    title = "Ricci operator identities"
    if sasaki is None:
        sasaki = is_para_sasaki_like(ps, conn)
    if not sasaki.passed:
        return skipped(title, "requires a para-Sasaki-like structure")
    d, n = ps.dim, ps.n
    phi, xi, eta, Q = ps.phi, ps.xi, ps.eta, cd.Q
    nQ = nabla_tensor(conn, Q, "ul")  # nQ[i, a, b] = (D_i Q)^a_b
    nQ_xi = zeros((d, d))  # [i, a] = ((D_{e_i} Q) xi)^a
    for i in range(d):
        nQ_xi[i] = nQ[i] @ xi
    Qphi = Q @ phi
    want1 = (-Qphi + sign * 2 * n * phi).T
    nxiQ = zeros((d, d))
    for i in range(d):
        nxiQ = nxiQ + xi[i] * nQ[i]
    label = "-" if sign < 0 else "+"
    checks = [
        entrywise(f"(D_x Q) xi = -Q phi x {label} 2n phi x", nQ_xi, want1),
        entrywise("(D_xi Q) y = -2 Q phi y", nxiQ, -2 * Qphi),
        entrywise("eta((D_x Q) xi) = 0", nQ_xi @ eta, zeros(d)),
        entrywise("eta((D_xi Q) y) = 0", eta @ nxiQ, zeros(d)),
    ]
    return CheckReport(title, checks)


def check_eta_einstein_constants(fit: EinsteinLikeFit, tau, tau_assoc, n: int) -> CheckReport:
    """eta-Einstein constants forced on para-Sasaki-like Einstein-like manifolds."""
    title = "eta-Einstein constants"
    if fit.kind == NONE:
        return skipped(title, "requires an Einstein-like fit")
    tau = Fraction(tau)
    checks = [
        equal("b = 0", fit.b, 0),
        equal("a = tau/2n + 1", fit.a, tau / (2 * n) + 1),
        equal("c = -2n - 1 - tau/2n", fit.c, -2 * n - 1 - tau / (2 * n)),
        equal("tau~ = -2n", tau_assoc, -2 * n),
    ]
    return CheckReport(title, checks)
