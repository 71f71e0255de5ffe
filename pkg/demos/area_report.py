"""Walk through the core pipeline: sides -> circumcircle -> areas.

Every cyclic polygon is fixed by its side lengths.  The package recovers the
circumradius, classifies where the center sits, and compares the exact area
with the extended Heron approximation sqrt(P**(4-n) * prod(P - x_i)).
"""

import math

from cyclicgon import (
    central_angles,
    generalized_heron,
    ratio,
    sides_from_angles,
    solve_circumradius,
    validate_sides,
)


def describe(label, raw_sides):
    sides = validate_sides(raw_sides)
    config = solve_circumradius(sides)
    angles = central_angles(sides, config)
    report = ratio(sides)
    print(f"{label}: sides {[round(v, 6) for v in sides.values]}")
    print(f"  circumradius {config.radius:.12g} ({config.center_position.value} center)")
    print(f"  central angles {[round(a, 6) for a in angles.values]}")
    print(f"  exact area  {report.exact:.12g}")
    print(f"  approx area {report.approx:.12g}")
    print(f"  ratio       {report.ratio:.12g}  (relative error {report.rel_error:+.3e})")
    print()


# The 3-4-5 right triangle: its hypotenuse is a diameter, so the center sits
# exactly on a side, and Heron's formula is exact.
describe("right triangle", [3, 4, 5])

# A cyclic quadrilateral: Brahmagupta's formula is exact as well.
describe("kite-like quadrilateral", [2, 1, 1, 1])

# From the pentagon on, the approximation overshoots slightly.
describe("unit pentagon", [1, 1, 1, 1, 1])
describe("unit hexagon", [1, 1, 1, 1, 1, 1])

# A center-outside polygon: build one from angles with a reflex entry (the
# long chord subtends three quarters of the circle), then feed only the side
# lengths back in.  The solver re-discovers the reflex configuration.
reflex_sides = sides_from_angles((1.5 * math.pi, math.pi / 6, math.pi / 6, math.pi / 6), 1.0)
describe("center-outside quadrilateral", list(reflex_sides.values))

# Zero sides are dropped during validation, and the approximation is built
# so that the dropped side changes nothing at all.
with_zero = generalized_heron([0.0, 1, 1, 1, 1, 1])
without = generalized_heron([1, 1, 1, 1, 1])
print("degeneration check: S([0,1,1,1,1,1]) == S([1,1,1,1,1]) ->", with_zero == without)
