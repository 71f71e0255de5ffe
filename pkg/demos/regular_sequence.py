"""The regular-polygon ratio sequence and its continuous extension.

For the regular n-gon the approximation ratio has the closed form
x_n = n * tan(pi/n) * (1 - 2/n)**(n/2).  It equals 1 at n = 3 and 4, then
climbs, and converges to pi/e from below, so the relative overshoot of the
approximation never reaches pi/e - 1, about 15.6 percent.
"""

import math

from cyclicgon import heron_limit, ratio_curve, regular_ratio, sequence_table

limit = heron_limit()
print(f"limit pi/e = {limit:.12f}, worst-case relative error pi/e - 1 = {limit - 1:.6f}")
print()

print("  n        x_n            gap to pi/e")
for point in sequence_table(3, 12):
    print(f"{point.n:3d}   {point.ratio:.12f}   {point.gap_to_limit:.3e}")
print("...")
for n in (100, 1000, 10_000, 1_000_000):
    point = regular_ratio(n)
    print(f"{n:7d}   {point.ratio:.12f}   {point.gap_to_limit:.3e}")
print()

# The gap closes like (pi/e)/n: multiplying it by n approaches pi/e.
print("n * gap for growing n (approaches pi/e):")
for n in (100, 10_000, 1_000_000):
    print(f"  n={n:<9d} n*gap = {n * regular_ratio(n).gap_to_limit:.6f}")
print()

# The same expression makes sense for real x > 2.  Toward x = 2 it rises to
# 4/pi (a flattened two-sided "polygon" limit), dips to 1 between 3 and 4,
# and then climbs toward pi/e; regular polygons live on the integer grid.
print("continuous curve f(x):")
for x in (2.000001, 2.5, 3.0, 3.5, 4.0, 6.0, 12.0, 100.0):
    print(f"  f({x:10.6f}) = {ratio_curve(x):.12f}")
print(f"  4/pi = {4 / math.pi:.12f} (limit at x -> 2+)")
