"""
Lattice points in scaled polygons
=================================

Wrap-class areas come from counting integer points in dilated polygons.
The counter here is exact: rational vertices, one horizontal scanline per
integer row, boundary points found from edge intersections.
"""

from fractions import Fraction

import numpy as np

from monoap import Polygon, lattice_points
from monoap.lattice import pick_holds, random_simple_polygon, scaling_error

square = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
for t in (1, 2, 5):
    print(f"unit square x{t}: (interior, boundary) =", lattice_points(square, t))

triangle = Polygon(((0, 0), (1, 0), (0, 1)))
print("triangle x2:", lattice_points(triangle, 2))

rng = np.random.default_rng(3)
poly = random_simple_polygon(rng)
print("random polygon:", [(int(x), int(y)) for x, y in poly.vertices], "area", poly.area)
print("Pick identity holds:", pick_holds(poly))

# The interior count tracks area * t^2 with error at most 3Lt + 5m.
for t in (5, 20, 80):
    err, bound = scaling_error(poly, t, (Fraction(1, 3), Fraction(2, 7)))
    print(f"t={t}: error {float(err):.1f} <= bound {bound:.1f}")
