"""Instance-independent properties of the connection and curvature tensors."""

from __future__ import annotations

import numpy as np

from .checks import Check, entrywise
from .curvature import Connection, CurvatureData, curvature_3dim_reconstruct, nabla_tensor
from .exact import zeros
from .lie import StructureConstants


def torsion_free(sc: StructureConstants, conn: Connection) -> Check:
    G = conn.Gamma
    return entrywise("torsion-free: Gamma_ij^k - Gamma_ji^k = c_ij^k", G - G.transpose(1, 0, 2), sc.c)


def metric_compatible(conn: Connection, g) -> Check:
    g = np.asarray(g, dtype=object)
    return entrywise("metric: D g = 0", nabla_tensor(conn, g, "ll"), zeros((conn.dim,) * 3))


def riemann_symmetries(cd: CurvatureData) -> list:
    R = cd.R
    return [
        entrywise("R_ijkl = -R_jikl", R, -R.transpose(1, 0, 2, 3)),
        entrywise("R_ijkl = -R_ijlk", R, -R.transpose(0, 1, 3, 2)),
        entrywise("R_ijkl = R_klij", R, R.transpose(2, 3, 0, 1)),
    ]


def first_bianchi(cd: CurvatureData) -> Check:
    R = cd.R
    # R_ijkl + R_jkil + R_kijl
    total = R + R.transpose(2, 0, 1, 3) + R.transpose(1, 2, 0, 3)
    return entrywise("first Bianchi: R_ijkl + R_jkil + R_kijl = 0", total, zeros(R.shape))


def second_bianchi(conn: Connection, cd: CurvatureData) -> Check:
    """Cyclic sum over ``(i, j, k)`` of ``(D_i R)(e_j, e_k, e_l, e_m)``."""
    nR = nabla_tensor(conn, cd.R, "llll")  # nR[i, j, k, l, m]
    total = nR + nR.transpose(1, 2, 0, 3, 4) + nR.transpose(2, 0, 1, 3, 4)
    return entrywise("second Bianchi: cyclic (D_i R)_jklm = 0", total, zeros(nR.shape))


def reconstruction_3dim(cd: CurvatureData, g) -> Check:
    return entrywise(
        "3-dim: R built from rho and tau equals R",
        curvature_3dim_reconstruct(cd.rho, cd.tau, g),
        cd.R,
    )


def ricci_contractions(cd: CurvatureData, g) -> list:
    g = np.asarray(g, dtype=object)
    return [
        entrywise("rho symmetric", cd.rho, cd.rho.T),
        entrywise("Q = g^-1 rho", g @ cd.Q, cd.rho),
    ]


def structural_checks(sc: StructureConstants, g, conn: Connection, cd: CurvatureData) -> list:
    checks = [torsion_free(sc, conn), metric_compatible(conn, g)]
    checks += riemann_symmetries(cd)
    checks += [first_bianchi(cd), second_bianchi(conn, cd)]
    checks += ricci_contractions(cd, g)
    if sc.dim == 3:
        checks.append(reconstruction_3dim(cd, g))
    return checks


__all__ = [
    "torsion_free",
    "metric_compatible",
    "riemann_symmetries",
    "first_bianchi",
    "second_bianchi",
    "reconstruction_3dim",
    "ricci_contractions",
    "structural_checks",
]
