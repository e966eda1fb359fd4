"""Almost paracontact almost paracomplex Riemannian structures in a frame."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import congruence_signature, frac_array, is_positive_definite

__all__ = ["StructureError", "PiStructure", "AxiomReport", "verify_axioms", "associated_metric"]


class StructureError(ValueError):
    pass


@dataclass(eq=False)
class PiStructure:
    """Frame components of ``(phi, xi, eta, g)``.

    ``phi[i, j]`` is the ``e_i`` component of ``phi(e_j)``. When ``eta`` is
    omitted it defaults to ``g @ xi``; ``g`` defaults to the identity.
    """

    phi: np.ndarray
    xi: np.ndarray
    g: np.ndarray | None = None
    eta: np.ndarray | None = None

    def __post_init__(self):
        self.phi = frac_array(self.phi)
        d = self.phi.shape[0]
        if self.phi.shape != (d, d):
            raise StructureError(f"phi must be square, got shape {self.phi.shape}")
        if d % 2 != 1:
            raise StructureError(f"dimension must be odd (2n+1), got {d}")
        self.xi = frac_array(self.xi)
        if self.g is None:
            self.g = frac_array(np.eye(d, dtype=int))
        else:
            self.g = frac_array(self.g)
        if self.eta is None:
            self.eta = self.g @ self.xi
        else:
            self.eta = frac_array(self.eta)
        for name, arr, shape in (("xi", self.xi, (d,)), ("eta", self.eta, (d,)), ("g", self.g, (d, d))):
            if arr.shape != shape:
                raise StructureError(f"{name} has shape {arr.shape}, expected {shape}")

    @property
    def dim(self) -> int:
        return self.phi.shape[0]

    @property
    def n(self) -> int:
        return (self.dim - 1) // 2

    @property
    def g_assoc(self) -> np.ndarray:
        return self.g @ self.phi + np.outer(self.eta, self.eta)

    @property
    def eta_eta(self) -> np.ndarray:
        return np.outer(self.eta, self.eta)


@dataclass
class AxiomReport:
    results: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def failures(self) -> list:
        return [name for name, ok in self.results.items() if not ok]


def verify_axioms(ps: PiStructure) -> AxiomReport:
    phi, xi, eta, g = ps.phi, ps.xi, ps.eta, ps.g
    eye = frac_array(np.eye(ps.dim, dtype=int))
    zero = Fraction(0)
    r = {}
    r["phi xi = 0"] = all(v == zero for v in phi @ xi)
    r["phi^2 = I - xi (x) eta"] = np.array_equal(phi @ phi, eye - np.outer(xi, eta))
    r["eta o phi = 0"] = all(v == zero for v in eta @ phi)
    r["eta(xi) = 1"] = eta @ xi == 1
    r["tr phi = 0"] = np.trace(phi) == 0
    r["g(phi x, phi y) = g(x, y) - eta(x) eta(y)"] = np.array_equal(phi.T @ g @ phi, g - np.outer(eta, eta))
    r["g symmetric positive definite"] = is_positive_definite(g)
    gphi = g @ phi
    r["g(phi x, y) = g(x, phi y)"] = np.array_equal(gphi, gphi.T)
    r["g(x, xi) = eta(x)"] = np.array_equal(g @ xi, eta)
    r["g(xi, xi) = 1"] = xi @ g @ xi == 1
    return AxiomReport(r)


def associated_metric(ps: PiStructure) -> tuple[np.ndarray, tuple[int, int]]:
    """``g~(x, y) = g(x, phi y) + eta(x) eta(y)`` and its signature ``(p, q)``."""
    ga = ps.g_assoc
    pos, neg, null = congruence_signature(ga)
    if (pos, neg, null) != (ps.n + 1, ps.n, 0) or not np.array_equal(ga, ga.T):
        raise StructureError(
            f"associated metric has signature ({pos}, {neg}, {null} null), expected ({ps.n + 1}, {ps.n})"
        )
    return ga, (pos, neg)
