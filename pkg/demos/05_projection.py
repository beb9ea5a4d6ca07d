"""
Projecting to the plane
=======================

A random integer 2 x d matrix is generic for a finite set with high
probability.  ``project_generic`` keeps drawing until the planar census
equals the original one.
"""

from collinear.construct import ConstructionParams, construct
from collinear.geometry import census
from collinear.project import project_generic
from collinear.verify import bound_report

cs = construct(ConstructionParams(d=2, k=6, r0=8))
image, pmap = project_generic(cs.points, seed=0)
print("matrix:", pmap.matrix, "accepted at attempt", pmap.attempts)
print("census in R^d :", census(cs.points).exact_counts)
print("census in R^2 :", census(image).exact_counts)
print(bound_report(cs, image))
