"""Soliton constants for a handful of potentials on the reference instance.

    python demos/soliton_potentials.py
"""

from pisoliton import golden_manifest
from pisoliton.analysis import build_instance
from pisoliton.curvature import curvature
from pisoliton.soliton import VectorField, lie_derivative_metric, solve_soliton_constants

inst = build_instance(golden_manifest())
ps = inst.ps
conn, cd = curvature(inst.sc, ps.g, ps.g_assoc, ps.phi)

potentials = {
    "zero": ["0", "0", "0"],
    "xi": ["0", "0", "1"],
    "c1 xi": ["0", "0", "c1"],
    "e1": ["1", "0", "0"],
    "x1 xi": ["0", "0", "x1"],
}

for label, coeffs in potentials.items():
    v = VectorField(coeffs, coordinates=3, parameters=inst.parameters)
    L = lie_derivative_metric(conn, inst.cf, v, ps.g)
    for unknowns in (("lambda", "mu", "nu"), ("lambda", "nu"), ("lambda",)):
        fit = solve_soliton_constants(cd.rho, L, ps.g, ps.g_assoc, ps.eta, unknowns)
        if fit.ok:
            shown = ", ".join(f"{u}={c}" for u, c in zip(("lambda", "mu", "nu"), fit.constants))
        elif fit.consistent:
            shown = "solution depends on coordinates"
        else:
            shown = "no solution"
        print(f"{label:>6}  free {'/'.join(unknowns):<16} {shown}")
