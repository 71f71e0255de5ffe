"""Search for the polygon that maximizes the approximation ratio.

The ratio is optimized over all admissible central angle vectors through an
unconstrained softmax reparameterization and derivative-free simplex search.
For every n the search lands on the uniform angle vector: the regular n-gon
is where the extended Heron formula overshoots the most.
"""

import math

from cyclicgon import maximize_ratio, regular_ratio

TWO_PI = 2.0 * math.pi

print("  n   best ratio found     closed form x_n      max |angle - 2pi/n|")
for n in range(5, 9):
    result = maximize_ratio(n)
    closed = regular_ratio(n).ratio
    deviation = max(abs(a - TWO_PI / n) for a in result.best_angles.values)
    tag = "" if result.converged else "  (not converged)"
    print(f"{n:3d}   {result.best_ratio:.14f}   {closed:.14f}   {deviation:.2e}{tag}")
print()

# n = 4 is the flat case: Brahmagupta's formula is exact for every cyclic
# quadrilateral, so the objective is constant and any angle vector is optimal.
flat = maximize_ratio(4)
print(f"n=4: best ratio {flat.best_ratio:.15f} (constant objective, exactness)")
print()

best = maximize_ratio(8)
print("n=8 optimal angles (radians):")
print("  " + ", ".join(f"{a:.9f}" for a in best.best_angles.values))
print(f"  uniform would be 2*pi/8 = {TWO_PI / 8:.9f}")
