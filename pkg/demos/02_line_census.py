"""
Line census of a point set
==========================

``census`` groups point pairs by a canonical key of the line they span;
``census_bruteforce`` counts points on each line directly.  Both give the
histogram k -> (number of lines through exactly k points).
"""

from collinear.geometry import census, census_bruteforce, line_key

grid = [(x, y) for x in range(5) for y in range(5)]
c = census(grid)
print("5x5 grid:", c.exact_counts)
print("lines with >= 4 points:", c.T(4))
assert c == census_bruteforce(grid)

# Different pairs on one line share a key
print(line_key((0, 0), (2, 2)), line_key((3, 3), (-1, -1)))
