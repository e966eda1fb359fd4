"""Potential vector fields, Lie derivatives and para-Ricci-like soliton fits.

A soliton with potential ``v`` and constants ``(lambda, mu, nu)`` means::

    rho = -1/2 L_v g - lambda g - mu g~ - nu eta (x) eta

The constants may be polynomials in declared parameters, so the theorem
checks below are ring identities rather than spot values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .checks import FAIL, PASS, SKIPPED, Check, CheckReport, entrywise, equal, skipped
from .classification import NONE, EinsteinLikeFit
from .curvature import Connection, CurvatureData, CurvatureError, sectional
from .exact import solve_linear
from .lie import ChartFrame, directional_derivative
from .ring import HypExpr, const, parse
from .structure import PiStructure

__all__ = [
    "SolitonError",
    "VectorField",
    "SolitonFit",
    "nabla_vector_field",
    "lie_derivative_metric",
    "lie_bracket_with_frame",
    "lie_derivative_vector",
    "lie_derivative_covariant",
    "solve_soliton_constants",
    "verify_soliton_potential",
    "verify_ricci_lie_derivative",
    "verify_ricci_form_and_sections",
    "random_rational_vector",
]


class SolitonError(ValueError):
    pass


def _hzeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(HypExpr())
    return out


class VectorField:
    """``v = sum_i coeffs[i] e_i`` with ring-valued coefficients."""

    def __init__(self, coeffs: Sequence, coordinates: int = 0, parameters: Sequence[str] = ()):
        self.parameters = tuple(parameters)
        self.coeffs = [parse(c, coordinates=coordinates, parameters=self.parameters) for c in coeffs]

    @classmethod
    def collinear(cls, k, dim: int, parameters: Sequence[str] = (), coordinates: int = 0) -> "VectorField":
        """``zeta = k xi`` in a frame whose last vector is ``xi``."""
        return cls([0] * (dim - 1) + [k], coordinates=coordinates, parameters=parameters)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def is_constant(self) -> bool:
        return all(c.is_parameter_only() for c in self.coeffs)

    def __add__(self, other: "VectorField") -> "VectorField":
        out = VectorField([], parameters=self.parameters)
        out.coeffs = [a + b for a, b in zip(self.coeffs, other.coeffs)]
        return out

    def scale(self, alpha) -> "VectorField":
        out = VectorField([], parameters=self.parameters)
        out.coeffs = [c * alpha for c in self.coeffs]
        return out

    def __repr__(self) -> str:
        return "VectorField([" + ", ".join(str(c) for c in self.coeffs) + "])"


def _frame_derivative(cf: ChartFrame | None, i: int, f: HypExpr) -> HypExpr:
    if f.is_parameter_only():
        return HypExpr()
    if cf is None:
        raise SolitonError(f"coefficient {f} depends on coordinates but no chart frame is given")
    return directional_derivative(cf, i, f)


def nabla_vector_field(conn: Connection, cf: ChartFrame | None, v: VectorField) -> np.ndarray:
    """``N[i, k]``: ``e_k`` component of ``D_{e_i} v``."""
    d = conn.dim
    if v.dim != d:
        raise SolitonError(f"vector field has {v.dim} components, frame has {d}")
    G = conn.Gamma
    N = _hzeros((d, d))
    for i in range(d):
        for k in range(d):
            s = _frame_derivative(cf, i, v.coeffs[k])
            for j in range(d):
                if G[i, j, k]:
                    s = s + v.coeffs[j] * G[i, j, k]
            N[i, k] = s
    return N


def lie_derivative_metric(conn: Connection, cf: ChartFrame | None, v: VectorField, g) -> np.ndarray:
    """``(L_v g)(e_i, e_j) = g(D_i v, e_j) + g(e_i, D_j v)``."""
    N = nabla_vector_field(conn, cf, v)
    d = conn.dim
    L = _hzeros((d, d))
    for i in range(d):
        for j in range(d):
            s = HypExpr()
            for k in range(d):
                if g[k][j]:
                    s = s + N[i, k] * g[k][j]
                if g[i][k]:
                    s = s + N[j, k] * g[i][k]
            L[i, j] = s
    return L


def lie_bracket_with_frame(conn: Connection, cf: ChartFrame | None, v: VectorField, i: int, N=None) -> list:
    """Components of ``[v, e_i] = D_v e_i - D_{e_i} v``."""
    if N is None:
        N = nabla_vector_field(conn, cf, v)
    d = conn.dim
    G = conn.Gamma
    out = []
    for k in range(d):
        s = -N[i, k]
        for j in range(d):
            if G[j, i, k]:
                s = s + v.coeffs[j] * G[j, i, k]
        out.append(s)
    return out


def lie_derivative_vector(conn: Connection, cf: ChartFrame | None, v: VectorField, w) -> list:
    """``L_v w = [v, w]`` for a constant-coefficient vector ``w``."""
    N = nabla_vector_field(conn, cf, v)
    d = conn.dim
    out = [HypExpr()] * d
    for i in range(d):
        if w[i]:
            br = lie_bracket_with_frame(conn, cf, v, i, N)
            out = [o + b * w[i] for o, b in zip(out, br)]
    return out


def lie_derivative_covariant(conn: Connection, cf: ChartFrame | None, v: VectorField, T) -> np.ndarray:
    """Lie derivative of a frame-constant covariant tensor ``T``.

    ``(L_v T)(e_a, ...) = -sum over slots of T(..., [v, e_slot], ...)``.
    """
    T = np.asarray(T, dtype=object)
    d = conn.dim
    N = nabla_vector_field(conn, cf, v)
    brackets = [lie_bracket_with_frame(conn, cf, v, i, N) for i in range(d)]
    out = _hzeros(T.shape)
    for idx in np.ndindex(T.shape):
        s = HypExpr()
        for pos in range(T.ndim):
            for m in range(d):
                t = T[idx[:pos] + (m,) + idx[pos + 1:]]
                if t:
                    s = s - brackets[idx[pos]][m] * t
        out[idx] = s
    return out


@dataclass
class SolitonFit:
    lambda_: HypExpr | None
    mu: HypExpr | None
    nu: HypExpr | None
    consistent: bool
    constant: bool
    residual: np.ndarray
    unknowns: tuple = ("lambda", "mu", "nu")

    @property
    def constants(self):
        return (self.lambda_, self.mu, self.nu)

    @property
    def ok(self) -> bool:
        return self.consistent and self.constant


def solve_soliton_constants(rho, Lvg, g, g_assoc, eta, unknowns=("lambda", "mu", "nu")) -> SolitonFit:
    """Solve ``rho + 1/2 L_v g + lambda g + mu g~ + nu eta (x) eta = 0``.

    ``unknowns`` selects which constants are free; the others are held at
    zero (``("lambda", "nu")`` gives the eta-Ricci soliton system,
    ``("lambda",)`` the Ricci soliton one). A consistent solution that
    depends on coordinates is reported with ``constant=False``.
    """
    rho = np.asarray(rho, dtype=object)
    d = rho.shape[0]
    ee = np.outer(eta, eta)
    basis = {"lambda": np.asarray(g, dtype=object), "mu": np.asarray(g_assoc, dtype=object), "nu": ee}
    unknowns = tuple(unknowns)
    if not unknowns or set(unknowns) - set(basis):
        raise SolitonError(f"unknowns must be a non-empty subset of {tuple(basis)}")
    half = Fraction(1, 2)
    rows, rhs = [], []
    for i in range(d):
        for j in range(d):
            rows.append([basis[u][i, j] for u in unknowns])
            rhs.append(-(const(rho[i, j]) + Lvg[i, j] * half))
    sol = solve_linear(rows, rhs, zero=HypExpr())
    values = dict.fromkeys(basis, HypExpr())
    values.update(zip(unknowns, sol.values))
    residual = _hzeros((d, d))
    for i in range(d):
        for j in range(d):
            residual[i, j] = (
                const(rho[i, j])
                + Lvg[i, j] * half
                + values["lambda"] * basis["lambda"][i, j]
                + values["mu"] * basis["mu"][i, j]
                + values["nu"] * basis["nu"][i, j]
            )
    consistent = all(r.is_zero() for r in residual.flat)
    constant = all(values[u].is_parameter_only() for u in unknowns)
    return SolitonFit(values["lambda"], values["mu"], values["nu"], consistent, constant, residual, unknowns)


def _hcheck(name: str, values) -> Check:
    bad = [(i, v) for i, v in enumerate(values) if not v.is_zero()]
    if not bad:
        return Check(name, PASS, ["identically zero"])
    return Check(name, FAIL, [f"component {i + 1}: {v}" for i, v in bad])


def verify_soliton_potential(fit: SolitonFit, ps: PiStructure, conn: Connection, cf: ChartFrame | None, v: VectorField) -> CheckReport:
    """``lambda + mu + nu = 2n``, ``D_xi v = phi v`` and ``L_v xi = 0``."""
    title = "soliton constants and potential"
    if not fit.ok:
        return skipped(title, "requires a consistent soliton fit with constant coefficients")
    n, d = ps.n, ps.dim
    total = fit.lambda_ + fit.mu + fit.nu - 2 * n
    N = nabla_vector_field(conn, cf, v)
    nabla_xi_v = [sum((N[i, k] * ps.xi[i] for i in range(d) if ps.xi[i]), HypExpr()) for k in range(d)]
    phi_v = [sum((v.coeffs[j] * ps.phi[k, j] for j in range(d) if ps.phi[k, j]), HypExpr()) for k in range(d)]
    Lxi = lie_derivative_vector(conn, cf, v, ps.xi)
    checks = [
        _hcheck("lambda + mu + nu - 2n = 0", [total]),
        _hcheck("D_xi v - phi v = 0", [a - b for a, b in zip(nabla_xi_v, phi_v)]),
        _hcheck("L_v xi = 0", Lxi),
    ]
    return CheckReport(title, checks)


def verify_ricci_lie_derivative(fit: SolitonFit, ps: PiStructure, conn: Connection, cf: ChartFrame | None, v: VectorField, cd: CurvatureData) -> CheckReport:
    """``(L_v rho)(x, xi) = 0`` on frame vectors and ``tau = -2n``."""
    title = "Lie derivative of the Ricci tensor"
    if not fit.ok:
        return skipped(title, "requires a consistent soliton fit with constant coefficients")
    d = ps.dim
    Lrho = lie_derivative_covariant(conn, cf, v, cd.rho)
    col = [sum((Lrho[i, j] * ps.xi[j] for j in range(d) if ps.xi[j]), HypExpr()) for i in range(d)]
    checks = [
        _hcheck("(L_v rho)(e_i, xi) = 0", col),
        equal("tau = -2n", cd.tau, -2 * ps.n),
    ]
    return CheckReport(title, checks)


def random_rational_vector(rng: random.Random, dim: int, bound: int = 3, den: int = 3) -> list:
    return [Fraction(rng.randint(-bound, bound), rng.randint(1, den)) for _ in range(dim)]


def verify_ricci_form_and_sections(
    ps: PiStructure,
    cd: CurvatureData,
    einstein: EinsteinLikeFit,
    fit: SolitonFit,
    sasaki_ok: bool,
    seed: int = 0,
    samples: int = 20,
) -> CheckReport:
    """``rho = -2n eta (x) eta``, ``tau = tau~ = -2n`` and, in dimension 3,
    sectional curvatures ``+1`` on phi-holomorphic and ``-1`` on xi-sections."""
    title = "Ricci form and special sections"
    if not sasaki_ok:
        return skipped(title, "requires a para-Sasaki-like structure")
    if einstein.kind == NONE:
        return skipped(title, "requires an Einstein-like fit")
    if not fit.ok:
        return skipped(title, "requires a consistent soliton fit with constant coefficients")
    n, d = ps.n, ps.dim
    checks = [
        entrywise("rho = -2n eta (x) eta", cd.rho, -2 * n * ps.eta_eta),
        equal("tau = -2n", cd.tau, -2 * n),
        equal("tau~ = -2n", cd.tau_assoc, -2 * n),
    ]
    if d != 3:
        checks.append(Check("sectional sweep", SKIPPED, ["only defined for dimension 3"]))
        return CheckReport(title, checks)
    rng = random.Random(seed)
    holo, xisec = _sweep(ps, cd, rng, samples)
    checks.extend([holo, xisec])
    return CheckReport(title, checks)


def _sweep(ps, cd, rng, samples):
    phi, g = ps.phi, ps.g
    results = {"holo": [], "xi": []}
    skipped_draws = {"holo": [], "xi": []}
    attempts = 0
    while min(len(results["holo"]), len(results["xi"])) < samples and attempts < 50 * samples:
        attempts += 1
        x = random_rational_vector(rng, ps.dim)
        fx = phi @ np.array(x, dtype=object)
        planes = {"holo": (fx, phi @ fx), "xi": (x, ps.xi)}
        for key, (a, b) in planes.items():
            if len(results[key]) >= samples:
                continue
            try:
                results[key].append((x, sectional(cd, g, a, b)))
            except CurvatureError:
                skipped_draws[key].append(x)
    checks = []
    for key, name, target in (("holo", "phi-holomorphic sections = 1", 1), ("xi", "xi-sections = -1", -1)):
        vals = results[key]
        bad = [(x, k) for x, k in vals if k != target]
        details = [f"{len(vals)} planes tested, {len(skipped_draws[key])} degenerate draws skipped"]
        details += [f"skipped x = ({', '.join(str(c) for c in x)})" for x in skipped_draws[key]]
        details += [f"x = ({', '.join(str(c) for c in x)}): k = {k}" for x, k in bad[:5]]
        status = FAIL if bad or len(vals) < samples else PASS
        checks.append(Check(name, status, details))
    return checks
