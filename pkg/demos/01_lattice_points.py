"""
Counting lattice points on spheres and balls
============================================

Shells are identified by their squared radius, so everything below is exact
integer arithmetic.  Volumes are the only floating point quantities.
"""

import math

from collinear.lattice import count_ball, count_shell, divisor_count, enumerate_shell, rep_two_squares, volume_ball

# The 12 lattice points on the circle of radius 5
print(enumerate_shell(2, 25))

# Shell sizes in dimension 4 for the first few squared radii
print([count_shell(4, m) for m in range(11)])

###############################################################################
# Ball counts sit between the volumes of the shrunk and inflated balls.
for d, m in [(2, 25), (3, 100), (6, 400)]:
    r = math.sqrt(m)
    lo = volume_ball(d, r - math.sqrt(d) / 2)
    hi = volume_ball(d, r + math.sqrt(d) / 2)
    print(f"d={d} r^2={m}: {lo:12.1f} <= {count_ball(d, m):10d} <= {hi:12.1f}")

###############################################################################
# Sums of two squares are controlled by the divisor function.
for n in [1, 5, 25, 65, 325, 1105]:
    print(n, rep_two_squares(n), 4 * divisor_count(n))
