"""Brackets [e3,e1] = -t e2, [e3,e2] = -t e1 with the same Pi-structure.

Scaling the brackets scales the curvature by t^2, so only t = 1 keeps
the para-Sasaki-like condition, and the two candidate traces for tau~
move together along the whole family. A different algebra separates them.

    python demos/scaled_family.py
"""

from fractions import Fraction

from pisoliton import PiStructure, StructureConstants
from pisoliton.classification import is_para_sasaki_like
from pisoliton.curvature import curvature

ps = PiStructure(phi=[[0, 1, 0], [1, 0, 0], [0, 0, 0]], xi=[0, 0, 1])

print(f"{'t':>5} {'R_1221':>7} {'tau':>6} {'tau~':>6} {'full':>6}  para-Sasaki-like")
for t in (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)):
    sc = StructureConstants.from_brackets(3, [[3, 1, 2, -t], [3, 2, 1, -t]])
    conn, cd = curvature(sc, ps.g, ps.g_assoc, ps.phi)
    ok = is_para_sasaki_like(ps, conn, cd).passed
    print(f"{str(t):>5} {str(cd.R[0, 1, 1, 0]):>7} {str(cd.tau):>6} {str(cd.tau_assoc):>6} {str(cd.tau_assoc_full):>6}  {ok}")

# Heisenberg brackets, same structure tensors
sc = StructureConstants.from_brackets(3, [[1, 2, 3, 1]])
_, cd = curvature(sc, ps.g, ps.g_assoc, ps.phi)
print("\nHeisenberg: tau~ =", cd.tau_assoc, " full contraction =", cd.tau_assoc_full)

# five-dimensional analogue: ad(xi) = -phi on the contact distribution
ps5 = PiStructure(
    phi=[[0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, 1, 0, 0], [0, 0, 0, 0, 0]],
    xi=[0, 0, 0, 0, 1],
)
sc5 = StructureConstants.from_brackets(5, [[5, 1, 2, -1], [5, 2, 1, -1], [5, 3, 4, -1], [5, 4, 3, -1]])
conn5, cd5 = curvature(sc5, ps5.g, ps5.g_assoc, ps5.phi)
print("dim 5: para-Sasaki-like", is_para_sasaki_like(ps5, conn5, cd5).passed,
      " tau~ =", cd5.tau_assoc, " full contraction =", cd5.tau_assoc_full)
