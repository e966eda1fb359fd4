"""Lie algebra data in a fixed frame and chart realizations of frames."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exact import det, frac, solve_linear, zeros
from .ring import HypExpr, RingError, parse, partial_derivative

__all__ = [
    "LieFrameError",
    "StructureConstants",
    "LieReport",
    "validate_lie_algebra",
    "ChartFrame",
    "frame_commutators",
    "directional_derivative",
]


class LieFrameError(ValueError):
    pass


@dataclass(eq=False)
class StructureConstants:
    """``c[i, j, k]`` with ``[e_i, e_j] = sum_k c[i, j, k] e_k`` (0-based)."""

    c: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.c, dtype=object)
        if c.ndim != 3 or len(set(c.shape)) != 1:
            raise LieFrameError(f"structure constants must be dim x dim x dim, got {c.shape}")
        out = zeros(c.shape)
        for idx in np.ndindex(c.shape):
            out[idx] = frac(c[idx])
        self.c = out

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    @classmethod
    def zero(cls, dim: int) -> "StructureConstants":
        return cls(zeros((dim, dim, dim)))

    @classmethod
    def from_brackets(cls, dim: int, brackets: Iterable[Sequence], antisymmetrize: bool = True):
        """Build from 1-based ``(i, j, k, value)`` entries meaning ``c_ij^k = value``.

        With ``antisymmetrize`` the partner ``c_ji^k = -value`` is filled in
        unless it is itself listed.
        """
        c = zeros((dim, dim, dim))
        given = set()
        entries = []
        for entry in brackets:
            if len(entry) != 4:
                raise LieFrameError(f"bracket entry must be [i, j, k, value], got {entry!r}")
            i, j, k = (int(v) - 1 for v in entry[:3])
            if not all(0 <= v < dim for v in (i, j, k)):
                raise LieFrameError(f"bracket index out of range in {entry!r}")
            given.add((i, j, k))
            entries.append((i, j, k, frac(entry[3])))
        for i, j, k, value in entries:
            c[i, j, k] = value
            if antisymmetrize and (j, i, k) not in given:
                c[j, i, k] = -value
        return cls(c)

    def bracket(self, x, y) -> np.ndarray:
        """Bracket of two constant-coefficient vectors."""
        d = self.dim
        out = zeros(d)
        for i in range(d):
            if not x[i]:
                continue
            for j in range(d):
                if y[j]:
                    for k in range(d):
                        out[k] = out[k] + x[i] * y[j] * self.c[i, j, k]
        return out

    def to_triples(self) -> list:
        d = self.dim
        return [
            [i + 1, j + 1, k + 1, str(self.c[i, j, k])]
            for i in range(d)
            for j in range(d)
            for k in range(d)
            if self.c[i, j, k] != 0
        ]

    def __eq__(self, other):
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.c.shape == other.c.shape and bool(np.all(self.c == other.c))


@dataclass
class LieReport:
    passed: bool
    antisymmetry_violations: list = field(default_factory=list)
    jacobi_violations: list = field(default_factory=list)


def validate_lie_algebra(sc: StructureConstants) -> LieReport:
    """Exact antisymmetry and Jacobi check; violations are 1-based index tuples."""
    c = sc.c
    d = sc.dim
    anti = [
        (i + 1, j + 1, k + 1)
        for i in range(d)
        for j in range(i, d)
        for k in range(d)
        if c[i, j, k] != -c[j, i, k]
    ]
    jac = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    s = sum(
                        c[i, j, m] * c[m, k, l] + c[j, k, m] * c[m, i, l] + c[k, i, m] * c[m, j, l]
                        for m in range(d)
                    )
                    if s != 0:
                        jac.append((i + 1, j + 1, k + 1, l + 1))
    return LieReport(not anti and not jac, anti, jac)


class ChartFrame:
    """Frame ``e_i = sum_a E[i, a] d/dx^a`` on a coordinate chart ``x1..xm``.

    Rows of ``E`` are frame vectors. Entries may be ``HypExpr`` or strings in
    the expression grammar.
    """

    def __init__(self, E, parameters: Iterable[str] = ()):
        self.parameters = tuple(parameters)
        rows = [list(r) for r in E]
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise LieFrameError("chart frame must be a square matrix")
        self.E = np.empty((m, m), dtype=object)
        for i in range(m):
            for a in range(m):
                self.E[i, a] = parse(rows[i][a], coordinates=m, parameters=self.parameters)
        self.det = det(self.E)
        if self.det.is_zero():
            raise LieFrameError("chart frame is not invertible (determinant is zero)")

    @property
    def dim(self) -> int:
        return self.E.shape[0]

    @classmethod
    def identity(cls, m: int) -> "ChartFrame":
        return cls([[int(i == a) for a in range(m)] for i in range(m)])


def directional_derivative(cf: ChartFrame, i: int, f) -> HypExpr:
    """``e_i(f)`` with ``i`` a 0-based frame index."""
    if not 0 <= i < cf.dim:
        raise LieFrameError(f"frame index {i} out of range for dimension {cf.dim}")
    f = parse(f, coordinates=cf.dim, parameters=cf.parameters)
    for sym in f.symbols():
        if sym.kind != "p" and sym.name > cf.dim:
            raise RingError(f"symbol {sym} is not a chart coordinate")
    out = HypExpr()
    for a in range(cf.dim):
        if cf.E[i, a]:
            out = out + cf.E[i, a] * partial_derivative(f, a + 1)
    return out


def _coordinate_bracket(cf: ChartFrame, i: int, j: int) -> list:
    return [
        directional_derivative(cf, i, cf.E[j, a]) - directional_derivative(cf, j, cf.E[i, a])
        for a in range(cf.dim)
    ]


def _express_in_frame(cf: ChartFrame, w: Sequence[HypExpr]):
    """Rational ``k`` with ``w = sum_k k[k] e_k``, or ``None`` when none exists.

    Matches monomial coefficients coordinate by coordinate; the frame is
    independent over the fraction field, so a solution is unique.
    """
    m = cf.dim
    rows, rhs = [], []
    for a in range(m):
        monos = set(w[a].terms)
        for k in range(m):
            monos |= set(cf.E[k, a].terms)
        for mono in monos:
            rows.append([cf.E[k, a].terms.get(mono, Fraction(0)) for k in range(m)])
            rhs.append(w[a].terms.get(mono, Fraction(0)))
    if not rows:
        return [Fraction(0)] * m
    sol = solve_linear(rows, rhs)
    return sol.values if sol.consistent else None


def frame_commutators(cf: ChartFrame) -> StructureConstants:
    """Structure constants of a chart frame.

    Raises ``LieFrameError`` if some bracket has non-constant frame
    coefficients, i.e. the frame does not span a Lie algebra.
    """
    m = cf.dim
    c = zeros((m, m, m))
    for i in range(m):
        for j in range(i + 1, m):
            w = _coordinate_bracket(cf, i, j)
            coeffs = _express_in_frame(cf, w)
            if coeffs is None:
                shown = ", ".join(str(x) for x in w)
                raise LieFrameError(
                    f"[e{i + 1}, e{j + 1}] = ({shown}) has non-constant frame coefficients"
                )
            for k in range(m):
                c[i, j, k] = coeffs[k]
                c[j, i, k] = -coeffs[k]
    return StructureConstants(c)
