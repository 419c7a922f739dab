"""
Exhaustive minimisation with symmetry pruning
=============================================

Colorings related by translation, multiplication by a unit, or swapping
colours have the same count. The search grows prefixes, keeps only those
that can still be the lexicographically least member of their orbit, and
drops any prefix whose partial count already exceeds the best total.
"""

import time

from monoap import AFFINE, MULTIPLICATIVE, builtin_coloring, canonical_form
from monoap import exhaustive_min_cyclic, zero_mono_colorings

for n in (12, 16, 20, 22):
    start = time.perf_counter()
    rep = exhaustive_min_cyclic(n, 4)
    print(f"Z_{n}: min {rep.minimum_count} over {len(rep.witnesses)} orbit(s), "
          f"{rep.nodes_explored} nodes, {time.perf_counter() - start:.2f}s")

print("B20 among the minimisers:", canonical_form(builtin_coloring("B20")) in exhaustive_min_cyclic(20, 4).witnesses)

# Colorings of Z_11 with no non-degenerate monochromatic 4-AP: one orbit
# under the full group, more under smaller groups.
print("full group:", [str(c) for c in zero_mono_colorings(11, 4)])
print("no colour swap:", len(zero_mono_colorings(11, 4, AFFINE)))
print("units only:", len(zero_mono_colorings(11, 4, MULTIPLICATIVE)))
