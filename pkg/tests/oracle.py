"""Coordinate-chart oracle built on sympy.

Everything here works with the coordinate metric of an orthonormal frame
and textbook Christoffel-symbol formulas, so it shares no code with the
left-invariant (structure-constant) engine.

The chart coordinate x3 enters only through u = exp(x3 / Q), so every
quantity is a rational function in (x1, x2, u) and d/dx3 = (u / Q) d/du.
Points with u rational are exact evaluation points off the origin.
"""

import itertools

import sympy as sp

x1, x2, u = sp.symbols("x1 x2 u", positive=True)
Q = 2  # t must be a multiple of 1/Q


def d(expr, a):
    if a == 0:
        return sp.diff(expr, x1)
    if a == 1:
        return sp.diff(expr, x2)
    return u * sp.diff(expr, u) / Q


def cosh_t(t):
    k = int(sp.Rational(t) * Q)
    return (u**k + u**-k) / 2


def sinh_t(t):
    k = int(sp.Rational(t) * Q)
    return (u**k - u**-k) / 2


def hyperbolic_frame(t=1):
    """e1 = cosh(t x3) d1 - sinh(t x3) d2, e2 = -sinh d1 + cosh d2, e3 = d3."""
    ch, sh = cosh_t(t), sinh_t(t)
    return sp.Matrix([[ch, -sh, 0], [-sh, ch, 0], [0, 0, 1]])


def _cancel(M):
    return M.applyfunc(sp.cancel)


def coordinate_metric(E):
    """Metric in which the rows of E are orthonormal."""
    Einv = _cancel(E.inv())
    return _cancel(Einv * Einv.T)


def christoffel(G):
    """Gam[a][b][c] = Gamma^a_bc."""
    Ginv = _cancel(G.inv())
    n = G.shape[0]
    return [
        [
            [
                sp.cancel(sum(Ginv[a, e] * (d(G[e, b], c) + d(G[e, c], b) - d(G[b, c], e)) for e in range(n)) / 2)
                for c in range(n)
            ]
            for b in range(n)
        ]
        for a in range(n)
    ]


def riemann_coordinates(G):
    """Rm[a][b][c][e] = dx^a(R(d_c, d_e) d_b) with R(X,Y) = [D_X, D_Y] - D_[X,Y]."""
    Gam = christoffel(G)
    n = G.shape[0]
    Rm = {}
    for a, b, c, e in itertools.product(range(n), repeat=4):
        val = d(Gam[a][e][b], c) - d(Gam[a][c][b], e)
        val += sum(Gam[a][c][f] * Gam[f][e][b] - Gam[a][e][f] * Gam[f][c][b] for f in range(n))
        Rm[a, b, c, e] = sp.cancel(val)
    return Rm


def at(expr, point):
    return sp.nsimplify(sp.cancel(sp.sympify(expr).subs({x1: point[0], x2: point[1], u: point[2]})))


def frame_riemann(E, point=(0, 0, 1)):
    """R(e_i, e_j, e_k, e_l) = g(R(e_i, e_j) e_k, e_l) at (x1, x2, u) = ``point``."""
    G = coordinate_metric(E)
    Rm = riemann_coordinates(G)
    n = E.shape[0]
    Gp = G.applyfunc(lambda v: at(v, point))
    Ep = E.applyfunc(lambda v: at(v, point))
    low = {}
    for b, c, e, f in itertools.product(range(n), repeat=4):
        low[b, c, e, f] = sum(Gp[f, a] * at(Rm[a, b, c, e], point) for a in range(n))
    out = {}
    for i, j, k, l in itertools.product(range(n), repeat=4):
        out[i, j, k, l] = sp.nsimplify(
            sum(Ep[i, c] * Ep[j, e] * Ep[k, b] * Ep[l, f] * low[b, c, e, f] for b, c, e, f in itertools.product(range(n), repeat=4))
        )
    return out


def frame_lie_derivative_metric(E, v, point=(0, 0, 1)):
    """(L_v g)(e_i, e_j) at ``point`` for v = sum v[i] e_i, from the coordinate formula."""
    G = coordinate_metric(E)
    n = E.shape[0]
    vc = [sum(v[i] * E[i, a] for i in range(n)) for a in range(n)]
    L = sp.zeros(n, n)
    for a, b in itertools.product(range(n), repeat=2):
        L[a, b] = sum(vc[c] * d(G[a, b], c) + G[c, b] * d(vc[c], a) + G[a, c] * d(vc[c], b) for c in range(n))
    F = E * L * E.T
    return F.applyfunc(lambda expr: sp.expand(at(expr, point)))


def frame_brackets(E):
    """out[i, j] = frame components of [e_i, e_j] (constants for a Lie frame)."""
    n = E.shape[0]
    Einv = _cancel(E.inv())
    out = {}
    for i, j in itertools.product(range(n), repeat=2):
        w = [sum(E[i, b] * d(E[j, a], b) - E[j, b] * d(E[i, a], b) for b in range(n)) for a in range(n)]
        out[i, j] = [sp.cancel(x) for x in sp.Matrix([w]) * Einv]
    return out
