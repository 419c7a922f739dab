"""
Counting monochromatic progressions
===================================

A 2-coloring of Z_n is a 0/1 string. Every pair (a, d) in Z_n^2 gives a
k-term progression a, a+d, ..., a+(k-1)d, degenerate ones included, so
there are exactly n^2 of them.
"""

from monoap import APFilter, builtin_coloring, count_mono_cyclic, count_mono_interval
from monoap import Coloring, GroupKind, total_increasing_aps

# The 22-element block behind the best known 4-AP density.
b22 = builtin_coloring("B22")
print("B22 =", b22)
print("monochromatic 4-APs:", count_mono_cyclic(b22, 4))

# Splitting by difference shows where they live: d = 0 (constant
# progressions) and d = 11 (progressions that bounce between two points).
print("by difference:", count_mono_cyclic(b22, 4, APFilter.BY_DIFFERENCE))
print("non-degenerate only:", count_mono_cyclic(b22, 4, APFilter.NONDEGENERATE))

# The 74-element block does the same job for 5-APs.
b74 = builtin_coloring("B74")
print("B74 5-APs:", count_mono_cyclic(b74, 5), count_mono_cyclic(b74, 5, APFilter.BY_DIFFERENCE))

# On the interval [n] only increasing progressions count.
red = Coloring.constant(74, 0, GroupKind.INTERVAL)
print("increasing 5-APs in [74]:", total_increasing_aps(74, 5), "=", count_mono_interval(red, 5))
