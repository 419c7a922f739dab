"""
Substituting colorings into a template
======================================

A template is a block with one star. ``T ⋉ C`` lays down one copy of T per
element of C and fills each star with the matching colour of C. When both
fills of T avoid non-degenerate monochromatic k-APs, the count obeys
count(T ⋉ C) = (b - 1) t^2 + count(C).
"""

import numpy as np

from monoap import (
    Coloring, TowerSpec, builtin_template, check_template_star_property, count_mono_cyclic,
    ltimes, tower_coloring, tower_predicted_count,
)

b11 = builtin_template("B11")
print("template:", b11, "star at", b11.star_positions)
print("star property for 4-APs:", check_template_star_property(b11, 4))

rng = np.random.default_rng(0)
for _ in range(3):
    inner = Coloring(tuple(int(x) for x in rng.integers(0, 2, 9)))
    direct = count_mono_cyclic(ltimes(b11, inner), 4)
    print(f"inner {inner}: direct {direct}, formula {10 * 81 + count_mono_cyclic(inner, 4)}")

# Iterating gives towers over Z_{11^j}.
spec = TowerSpec(b11, 2, Coloring((1,)))
print("Z_121 tower:", count_mono_cyclic(tower_coloring(spec), 4), tower_predicted_count(spec, 4))
