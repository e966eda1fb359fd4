"""Exact linear algebra over the rationals.

Coefficient matrices are always rational. Right-hand sides may live in any
additive group that is a vector space over Q (``Fraction`` or ``HypExpr``),
which is what the soliton solver needs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

__all__ = [
    "frac",
    "frac_array",
    "zeros",
    "LinearSolution",
    "solve_linear",
    "det",
    "inverse",
    "is_positive_definite",
    "congruence_signature",
]


def frac(value) -> Fraction:
    """Exact rational from an int, Fraction, or ``"p/q"`` string."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        raise TypeError(f"float {value!r} is not exact; pass 'p/q' or an int")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "constant_value"):
        return value.constant_value()
    return Fraction(str(value).strip())


def frac_array(data, shape=None) -> np.ndarray:
    arr = np.array(data, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = frac(arr[idx])
    if shape is not None and out.shape != tuple(shape):
        raise ValueError(f"expected shape {tuple(shape)}, got {out.shape}")
    return out


def zeros(shape, fill=Fraction(0)) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(fill)
    return out


@dataclass
class LinearSolution:
    """Outcome of ``solve_linear``.

    ``values`` holds one particular solution (free unknowns set to zero);
    ``residual`` is ``b - A @ values`` row by row, identically zero exactly
    when ``consistent``.
    """

    values: list
    consistent: bool
    rank: int
    pivots: tuple
    residual: list


def solve_linear(A: Sequence[Sequence[Any]], b: Sequence[Any], zero=Fraction(0)) -> LinearSolution:
    """Gauss-Jordan elimination for ``A x = b`` with rational ``A``."""
    rows = [[frac(a) for a in row] for row in A]
    rhs = list(b)
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        rhs[r], rhs[pivot] = rhs[pivot], rhs[r]
        p = rows[r][col]
        rows[r] = [a / p for a in rows[r]]
        rhs[r] = rhs[r] * (1 / p)
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * c for a, c in zip(rows[i], rows[r])]
                rhs[i] = rhs[i] - rhs[r] * f
        pivots.append(col)
        r += 1
        if r == m:
            break
    values = [zero] * ncols
    for i, col in enumerate(pivots):
        values[col] = rhs[i]
    residual = []
    for row, bi in zip(A, b):
        acc = bi
        for a, x in zip(row, values):
            a = frac(a)
            if a:
                acc = acc - x * a
        residual.append(acc)
    consistent = all(not res for res in residual)
    return LinearSolution(values, consistent, len(pivots), tuple(pivots), residual)


def det(M) -> Any:
    """Determinant by permutation expansion; works over any commutative ring."""
    M = np.asarray(M, dtype=object)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term = term * M[i, perm[i]]
            if not term:
                break
        total = total + term
    return total


def inverse(M) -> np.ndarray:
    """Inverse of a rational matrix; raises ``ZeroDivisionError`` if singular."""
    M = frac_array(M)
    n = M.shape[0]
    aug = [list(M[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [a / p for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * c for a, c in zip(aug[i], aug[col])]
    return frac_array([row[n:] for row in aug])


def is_positive_definite(M) -> bool:
    """Sylvester's criterion on leading principal minors."""
    M = frac_array(M)
    if not np.array_equal(M, M.T):
        return False
    return all(det(M[:k, :k]) > 0 for k in range(1, M.shape[0] + 1))


def congruence_signature(M) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of a symmetric rational matrix.

    Uses symmetric elimination ``M -> P M P^T`` with rational ``P``.
    """
    A = [list(row) for row in frac_array(M)]
    n = len(A)
    diag = []
    k = 0
    while k < n:
        size = n - k
        if all(A[i][j] == 0 for i in range(size) for j in range(size)):
            diag.extend([Fraction(0)] * size)
            break
        if A[0][0] == 0:
            i = next((i for i in range(size) if A[i][i] != 0), None)
            if i is not None:
                A[0], A[i] = A[i], A[0]
                for row in A:
                    row[0], row[i] = row[i], row[0]
            else:
                # zero diagonal: add a row/column with A[0][j] != 0 to make A[0][0] = 2 A[0][j]
                j = next((j for j in range(size) if A[0][j] != 0), None)
                if j is None:
                    diag.append(Fraction(0))
                    A = [row[1:] for row in A[1:]]
                    k += 1
                    continue
                A[0] = [a + c for a, c in zip(A[0], A[j])]
                for row in A:
                    row[0] = row[0] + row[j]
        p = A[0][0]
        diag.append(p)
        rest = []
        for i in range(1, size):
            f = A[i][0] / p
            rest.append([A[i][j] - f * A[0][j] for j in range(1, size)])
        A = rest
        k += 1
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg
