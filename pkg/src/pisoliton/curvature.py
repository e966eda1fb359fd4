"""Levi-Civita connection and curvature of left-invariant metrics.

Conventions::

    R(x, y) z    = D_x D_y z - D_y D_x z - D_[x,y] z
    R(x, y, z, w) = g(R(x, y) z, w)
    rho(y, z)    = sum g^{ij} R(e_i, y, z, e_j)

All components are taken in the left-invariant frame, so they are constant
rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import frac, inverse, zeros
from .lie import StructureConstants

__all__ = [
    "CurvatureError",
    "Connection",
    "CurvatureData",
    "levi_civita",
    "riemann",
    "ricci_and_scalars",
    "curvature",
    "sectional",
    "curvature_3dim_reconstruct",
    "nabla_tensor",
]


class CurvatureError(ValueError):
    pass


@dataclass(eq=False)
class Connection:
    """``Gamma[i, j, k]``: ``D_{e_i} e_j = sum_k Gamma[i, j, k] e_k``."""

    Gamma: np.ndarray

    @property
    def dim(self) -> int:
        return self.Gamma.shape[0]

    def covariant(self, x, y) -> np.ndarray:
        """``D_x y`` for constant-coefficient vectors."""
        d = self.dim
        out = zeros(d)
        for i in range(d):
            if not x[i]:
                continue
            for j in range(d):
                if y[j]:
                    out = out + x[i] * y[j] * self.Gamma[i, j]
        return out


@dataclass(eq=False)
class CurvatureData:
    R_op: np.ndarray  # R_op[i, j, k, l]: e_l-component of R(e_i, e_j) e_k
    R: np.ndarray  # R[i, j, k, l] = R(e_i, e_j, e_k, e_l)
    rho: np.ndarray | None = None
    rho_star: np.ndarray | None = None
    Q: np.ndarray | None = None
    tau: Fraction | None = None
    tau_assoc: Fraction | None = None
    tau_assoc_full: Fraction | None = None

    def R_of(self, x, y, z, w) -> Fraction:
        return _contract4(self.R, x, y, z, w)


def levi_civita(sc: StructureConstants, g) -> Connection:
    """Koszul formula for left-invariant fields.

    ``2 g(D_i e_j, e_k) = g([e_i,e_j], e_k) - g([e_j,e_k], e_i) + g([e_k,e_i], e_j)``
    """
    d = sc.dim
    g = np.asarray(g, dtype=object)
    try:
        ginv = inverse(g)
    except ZeroDivisionError:
        raise CurvatureError("metric is singular") from None
    c = sc.c
    # lowered brackets: cl[i, j, k] = g([e_i, e_j], e_k)
    cl = zeros((d, d, d))
    for i in range(d):
        for j in range(d):
            for k in range(d):
                cl[i, j, k] = sum((c[i, j, m] * g[m, k] for m in range(d)), Fraction(0))
    lower = zeros((d, d, d))
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lower[i, j, k] = (cl[i, j, k] - cl[j, k, i] + cl[k, i, j]) / 2
    Gamma = zeros((d, d, d))
    for i in range(d):
        for j in range(d):
            for l in range(d):
                Gamma[i, j, l] = sum((lower[i, j, k] * ginv[k, l] for k in range(d)), Fraction(0))
    return Connection(Gamma)


def riemann(conn: Connection, sc: StructureConstants, g) -> CurvatureData:
    d = conn.dim
    G = conn.Gamma
    c = sc.c
    g = np.asarray(g, dtype=object)
    R_op = zeros((d, d, d, d))
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    s = Fraction(0)
                    for m in range(d):
                        s += G[j, k, m] * G[i, m, l] - G[i, k, m] * G[j, m, l] - c[i, j, m] * G[m, k, l]
                    R_op[i, j, k, l] = s
    R = zeros((d, d, d, d))
    for idx in np.ndindex(R.shape):
        i, j, k, l = idx
        R[idx] = sum((R_op[i, j, k, p] * g[p, l] for p in range(d)), Fraction(0))
    return CurvatureData(R_op=R_op, R=R)


def ricci_and_scalars(cd: CurvatureData, g, g_assoc, phi) -> CurvatureData:
    """Fill in ``rho``, ``rho_star``, ``Q``, ``tau`` and both ``g~`` traces.

    ``tau_assoc`` is the trace of ``rho`` against ``g~^{-1}``;
    ``tau_assoc_full`` is the full contraction ``g~^{il} g~^{jk} R_ijkl``.
    """
    g = np.asarray(g, dtype=object)
    d = g.shape[0]
    ginv = inverse(g)
    try:
        gainv = inverse(g_assoc)
    except ZeroDivisionError:
        raise CurvatureError("associated metric is singular") from None
    R = cd.R
    rho = zeros((d, d))
    rho_star = zeros((d, d))
    for b in range(d):
        for c in range(d):
            rho[b, c] = sum(
                (ginv[a, e] * R[a, b, c, e] for a in range(d) for e in range(d)), Fraction(0)
            )
            rho_star[b, c] = sum(
                (
                    ginv[a, e] * R[a, b, c, m] * phi[m, e]
                    for a in range(d)
                    for e in range(d)
                    for m in range(d)
                ),
                Fraction(0),
            )
    Q = ginv @ rho
    tau = sum((ginv[i, j] * rho[i, j] for i in range(d) for j in range(d)), Fraction(0))
    tau_assoc = sum((gainv[i, j] * rho[i, j] for i in range(d) for j in range(d)), Fraction(0))
    tau_full = Fraction(0)
    for i, j, k, l in np.ndindex(R.shape):
        if R[i, j, k, l]:
            tau_full += gainv[i, l] * gainv[j, k] * R[i, j, k, l]
    cd.rho, cd.rho_star, cd.Q = rho, rho_star, Q
    cd.tau, cd.tau_assoc, cd.tau_assoc_full = tau, tau_assoc, tau_full
    return cd


def curvature(sc: StructureConstants, g, g_assoc, phi) -> tuple[Connection, CurvatureData]:
    conn = levi_civita(sc, g)
    cd = riemann(conn, sc, g)
    return conn, ricci_and_scalars(cd, g, g_assoc, phi)


def _contract4(T, x, y, z, w):
    d = T.shape[0]
    total = Fraction(0)
    for i in range(d):
        if not x[i]:
            continue
        for j in range(d):
            if not y[j]:
                continue
            for k in range(d):
                if not z[k]:
                    continue
                for l in range(d):
                    if w[l] and T[i, j, k, l]:
                        total += x[i] * y[j] * z[k] * w[l] * T[i, j, k, l]
    return total


def sectional(cd: CurvatureData, g, x, y) -> Fraction:
    """Sectional curvature ``R(x,y,y,x) / (g(x,x) g(y,y) - g(x,y)^2)``."""
    g = np.asarray(g, dtype=object)
    x = [frac(v) for v in x]
    y = [frac(v) for v in y]
    gxx = np.dot(np.dot(x, g), x)
    gyy = np.dot(np.dot(y, g), y)
    gxy = np.dot(np.dot(x, g), y)
    denom = gxx * gyy - gxy * gxy
    if denom == 0:
        raise CurvatureError("degenerate plane: x and y are linearly dependent")
    return Fraction(cd.R_of(x, y, y, x)) / denom


def curvature_3dim_reconstruct(rho, tau, g) -> np.ndarray:
    """Curvature tensor of a 3-manifold rebuilt from its Ricci tensor."""
    g = np.asarray(g, dtype=object)
    rho = np.asarray(rho, dtype=object)
    if g.shape != (3, 3):
        raise CurvatureError(f"reconstruction needs dimension 3, got {g.shape[0]}")
    half = Fraction(tau) / 2
    R = zeros((3, 3, 3, 3))
    for x, y, z, w in np.ndindex(R.shape):
        R[x, y, z, w] = (
            g[y, z] * rho[x, w]
            - g[x, z] * rho[y, w]
            + rho[y, z] * g[x, w]
            - rho[x, z] * g[y, w]
            - half * (g[y, z] * g[x, w] - g[x, z] * g[y, w])
        )
    return R


def nabla_tensor(conn: Connection, T, variance: str) -> np.ndarray:
    """Covariant derivative of a frame-constant tensor.

    ``variance`` has one letter per index of ``T``: ``"u"`` for an upper
    (vector) slot and ``"l"`` for a lower (covector) slot, e.g. ``"ul"``
    for a (1,1) tensor. The result ``N`` has ``N[i, ...] = (D_{e_i} T)[...]``.
    """
    T = np.asarray(T, dtype=object)
    if len(variance) != T.ndim or set(variance) - {"u", "l"}:
        raise CurvatureError(f"unsupported valence {variance!r} for tensor of rank {T.ndim}")
    G = conn.Gamma
    d = conn.dim
    out = zeros((d,) + T.shape)
    for i in range(d):
        for idx in np.ndindex(T.shape):
            s = Fraction(0)
            for pos, kind in enumerate(variance):
                for m in range(d):
                    sub = idx[:pos] + (m,) + idx[pos + 1:]
                    t = T[sub]
                    if not t:
                        continue
                    if kind == "u":
                        s += G[i, m, idx[pos]] * t
                    else:
                        s -= G[i, idx[pos], m] * t
            out[(i,) + idx] = s
    return out
