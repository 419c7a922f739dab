"""
Densities of periodic colorings
===============================

Repeating a block B of length b and padding with r extra elements gives
colorings of Z_n for every n = bt + r. Progressions fall into wrap classes
according to which steps cross the end of Z_n; inside a class they behave
like shifted progressions of B. Weighting the per-class counts c_i by the
class areas gives the limiting density exactly.
"""

from monoap import builtin_coloring, density_upper_bound, region_area_table
from monoap.core import format_ratio
from monoap.periodic import class_counts

b20 = builtin_coloring("B20")

# Class areas for 4-APs: eight regions of the unit square.
areas = region_area_table(4)
print("areas:", {i: str(a) for i, a in areas.items()})

# For odd r the counts do not depend on r.
for r in (1, 7, 19):
    print(f"r={r:2d}  c_i =", list(class_counts(b20, 4, r).values()))

print("limit density, odd r:", format_ratio(density_upper_bound(b20, 4, 1)))
print("limit density, r = 0:", format_ratio(density_upper_bound(b20, 4, 0)))

# The same machinery for 5-APs uses 14 feasible classes.
b74 = builtin_coloring("B74")
for r in (1, 2, 37):
    print(f"B74, r={r:2d}:", format_ratio(density_upper_bound(b74, 5, r)))
