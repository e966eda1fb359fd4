"""Walk through the built-in three-dimensional instance step by step.

    python demos/reference_instance.py
"""

import numpy as np

from pisoliton import golden_manifest
from pisoliton.analysis import build_instance
from pisoliton.classification import fit_einstein_like, is_para_sasaki_like
from pisoliton.curvature import curvature, sectional
from pisoliton.lie import frame_commutators
from pisoliton.soliton import VectorField, lie_derivative_metric, nabla_vector_field, solve_soliton_constants

manifest = golden_manifest()
inst = build_instance(manifest)
ps = inst.ps

# %% frame and brackets
# the frame is given on a chart; brackets come out as constants
print("frame rows (e_i in coordinate fields):")
for row in inst.cf.E:
    print("   ", [str(x) for x in row])
sc = frame_commutators(inst.cf)
for i, j, k, val in sc.to_triples():
    if i < j:
        print(f"[e{i}, e{j}] = {val} e{k}")

# %% connection and curvature
conn, cd = curvature(sc, ps.g, ps.g_assoc, ps.phi)
for i, j, k in np.ndindex(conn.Gamma.shape):
    if conn.Gamma[i, j, k]:
        print(f"D_e{i + 1} e{j + 1} = {conn.Gamma[i, j, k]} e{k + 1}")
print("R_1221 =", cd.R[0, 1, 1, 0], " R_1331 =", cd.R[0, 2, 2, 0], " R_2332 =", cd.R[1, 2, 2, 1])
print("rho =", [[str(x) for x in row] for row in cd.rho])
print("tau =", cd.tau, " tau~ =", cd.tau_assoc)

e = np.eye(3, dtype=int)
print("k12, k13, k23 =", [str(sectional(cd, ps.g, e[a], e[b])) for a, b in ((0, 1), (0, 2), (1, 2))])

# %% classification
print("para-Sasaki-like:", is_para_sasaki_like(ps, conn, cd).passed)
fit = fit_einstein_like(cd.rho, ps.g, ps.g_assoc, ps.eta)
print("Einstein-like constants:", [str(c) for c in fit.constants], fit.kind)

# %% soliton with a three-parameter potential
v = VectorField(manifest.potential, coordinates=3, parameters=inst.parameters)
N = nabla_vector_field(conn, inst.cf, v)
print("D_e3 v =", [str(x) for x in N[2]])
L = lie_derivative_metric(conn, inst.cf, v, ps.g)
print("L_v g =", [[str(x) for x in row] for row in L])
sol = solve_soliton_constants(cd.rho, L, ps.g, ps.g_assoc, ps.eta)
print("lambda, mu, nu =", [str(x) for x in sol.constants])
print("lambda + mu + nu =", sol.lambda_ + sol.mu + sol.nu)
