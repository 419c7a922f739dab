"""
Counting identities behind the lower bounds
===========================================

The lower bounds rest on exact identities between the numbers u_i of
4-APs with i red terms and pairwise intersection counts of the sets
A_j = {(a, d): a + (j-1)d is red}. Each identity is checked here on
random colorings; the bounds themselves are quoted as exact fractions.
"""

import numpy as np

from monoap import Coloring, count_mono_cyclic, lower_bound_for, m3_closed_form, u_vector
from monoap.bounds import verify_frame_identities, verify_lemma1_formula, verify_mix_identity

rng = np.random.default_rng(1)
c = Coloring(tuple(int(x) for x in rng.integers(0, 2, 30)))
print("coloring:", c)
print("u vector:", u_vector(c, 4))
rep = verify_mix_identity(c)
print("mix identity:", rep.left, "=", rep.right)
print("pair intersections by formula:", verify_lemma1_formula(c).holds)
for r in verify_frame_identities(c):
    print(f"  {r.name}: {r.left} vs {r.right}")

# 3-APs in Z_p depend only on the number of reds.
p = 13
reds = 5
c = Coloring(tuple(0 if v < reds else 1 for v in range(p)))
print(f"Z_{p}, {reds} reds: closed form {m3_closed_form(p, reds)}, direct {count_mono_cyclic(c, 3)}")

for n, k in ((21, 4), (24, 4), (101, 3)):
    lb = lower_bound_for(n, k)
    print(f"n={n}, k={k}: density >= {lb.value}  ({lb.note})")
