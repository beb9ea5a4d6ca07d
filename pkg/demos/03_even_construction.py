"""
Many 4-point lines, no 5 on a line
==================================

Take the richest sphere inside B_3(4), the most common distance between its
points, and the two spheres that the extended pairs land on.
"""

from collinear.construct import ConstructionParams, construct_even
from collinear.geometry import census
from collinear.verify import verify_construction

cs = construct_even(ConstructionParams(d=3, k=4, r0=4))
w = cs.witness
print(f"shell r^2={w.m_r}, distance l^2={w.m_ell}, sphere radii^2={w.radii}")
print(f"{len(cs.points)} points, {len(w.witness_pairs)} witness lines")

p, q = w.witness_pairs[0]
print("one witness line:", cs.line_points((p, q)))

print(census(cs.points).exact_counts)
print(verify_construction(cs).to_text())
