"""
Pattern avoidance on [n]
========================

Eight colour patterns of 5-term progressions drive the 4-AP lower bound.
A depth-first search over prefixes finds the longest interval that avoids
all of them, and a branch-and-bound search finds the fewest matches.
"""

from monoap import FRAME_PATTERNS, count_frame_patterns, pattern_free_max_interval
from monoap.search import pattern_count_minima

print("patterns:", sorted("".join(map(str, p)) for p in FRAME_PATTERNS.patterns))

out = pattern_free_max_interval(FRAME_PATTERNS, 46)
longest = max(n for n, r in out.items() if r.free_coloring_found)
print("longest pattern-free interval:", longest, out[longest].witness)
print("[46]:", out[46].outcome)

# Minimum number of matches for each length, each search seeded with the
# minima for shorter lengths.
reports = pattern_count_minima(52)
for rep in reports[44:]:
    print(f"[{rep.n}] min {rep.min_count}  e.g. {rep.witness}  check {count_frame_patterns(rep.witness)}")
