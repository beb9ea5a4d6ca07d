"""
Odd k: midpoints and a hyperplane
=================================

For k = 5 the lines are centred on midpoints of pairs from the doubled shell.
Only midpoints in the most crowded hyperplane x_1 = x0 are kept, and the
outermost sphere gives up its points in that hyperplane.
"""

from collinear.construct import ConstructionParams, construct_odd
from collinear.geometry import census

cs = construct_odd(ConstructionParams(d=3, k=5, r0=4))
w = cs.witness
print(f"base shell r^2={w.m_r}, l^2={w.m_ell}, x0={w.x0}")
print(f"midpoint sphere {w.radii[0]}, outer spheres {w.radii[1:]}")

line = cs.line_points(w.witness_pairs[0])
print("witness line:", line)
print("first coordinates:", [x[0] for x in line])

c = census(cs.points)
print(f"n={len(cs.points)} t_5={c.t(5)} T_6={c.T(6)}")
