"""Exact enumeration of k-term arithmetic progressions and their colour patterns.

Cyclic progressions are parametrised by ``(a, d)`` ranging over all of
``Z_n x Z_n``, degenerate ones included. Interval progressions in ``[n]``
are the *increasing* ones (``d >= 1``), each counted once.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import BLUE, RED, Coloring, GroupKind

_CHUNK = 1 << 20


class APFilter(enum.Enum):
    ALL = "all"
    NONDEGENERATE = "nondeg"
    BY_DIFFERENCE = "by-d"


class CountMode(enum.Enum):
    BRUTE_FORCE = "brute"
    FORMULA = "formula"


def _as_filter(filter) -> APFilter:
    return filter if isinstance(filter, APFilter) else APFilter(filter)


def _as_color(color) -> int:
    if isinstance(color, str):
        return {"red": RED, "blue": BLUE}[color.lower()]
    if color not in (RED, BLUE):
        raise ValueError(f"unknown colour {color!r}")
    return int(color)


def kap_terms(a: int, d: int, k: int, n: int,
              kind: GroupKind = GroupKind.CYCLIC) -> tuple[int, ...]:
    """Terms ``a, a+d, ..., a+(k-1)d`` (reduced mod n for Z_n).

    Interval terms are 1-based and must satisfy ``1 <= a`` and
    ``a + (k-1)d <= n`` with ``d >= 1``.
    """
    if kind is GroupKind.CYCLIC:
        return tuple((a + j * d) % n for j in range(k))
    if d < 1 or a < 1 or a + (k - 1) * d > n:
        raise ValueError(f"({a}, {d}) is not an increasing {k}-AP of [{n}]")
    return tuple(a + j * d for j in range(k))


def is_degenerate_difference(d: int, n: int, k: int) -> bool:
    """True if some ``j d`` with ``1 <= j <= k-1`` vanishes mod n."""
    return any((j * d) % n == 0 for j in range(1, k))


def degenerate_mask(n: int, k: int) -> np.ndarray:
    d = np.arange(n)
    out = np.zeros(n, dtype=bool)
    for j in range(1, k):
        out |= (j * d) % n == 0
    return out


def _mono_by_difference(c: Coloring, k: int) -> np.ndarray:
    """Reference enumeration: number of monochromatic (a, d) for every d."""
    n = c.n
    col = c.array
    a = np.arange(n)
    out = np.zeros(n, dtype=np.int64)
    step = max(1, _CHUNK // (n * k))
    for lo in range(0, n, step):
        d = np.arange(lo, min(n, lo + step))
        terms = (a[None, :, None] + np.arange(k)[:, None, None] * d[None, None, :]) % n
        colours = col[terms]
        mono = (colours == colours[0]).all(axis=0)
        out[lo:lo + len(d)] = mono.sum(axis=0)
    return out


def _rotate(x: int, s: int, n: int, full: int) -> int:
    """Bitmask whose bit ``a`` is bit ``(a + s) mod n`` of ``x``."""
    s %= n
    if s == 0:
        return x
    return ((x >> s) | (x << (n - s))) & full


def _mono_by_difference_bitset(c: Coloring, k: int) -> np.ndarray:
    """Bit-parallel path: all starting points a handled at once per d."""
    n = c.n
    full = (1 << n) - 1
    blue = c.to_int()
    red = full & ~blue
    out = np.zeros(n, dtype=np.int64)
    for d in range(n):
        r, b = red, blue
        for j in range(1, k):
            r &= _rotate(red, j * d, n, full)
            b &= _rotate(blue, j * d, n, full)
        out[d] = r.bit_count() + b.bit_count()
    return out


def count_mono_cyclic(c: Coloring, k: int, filter=APFilter.ALL,
                      method: str = "bitset"):
    """Number of monochromatic k-APs ``(a, d) in Z_n^2`` of a cyclic coloring.

    ``filter`` selects all parameters, only non-degenerate ones, or a
    ``{d: count}`` map of the nonzero per-difference counts.
    ``method`` is ``"bitset"`` (shifted word operations) or
    ``"reference"`` (direct enumeration); both give identical results.
    """
    if not c.is_cyclic:
        raise ValueError("count_mono_cyclic needs a coloring of Z_n")
    if k < 1:
        raise ValueError("k must be positive")
    filter = _as_filter(filter)
    if method == "bitset":
        per_d = _mono_by_difference_bitset(c, k)
    elif method == "reference":
        per_d = _mono_by_difference(c, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    if filter is APFilter.BY_DIFFERENCE:
        return {int(d): int(v) for d, v in enumerate(per_d) if v}
    if filter is APFilter.NONDEGENERATE:
        per_d = per_d[~degenerate_mask(c.n, k)]
    return int(per_d.sum())


def total_increasing_aps(n: int, k: int) -> int:
    """``sum_{d >= 1} max(0, n - (k-1) d)``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return sum(n - (k - 1) * d for d in range(1, n) if n - (k - 1) * d > 0)


def count_mono_interval(c: Coloring, k: int, by_difference: bool = False,
                        method: str = "bitset") -> int | dict[int, int]:
    """Monochromatic increasing k-APs of an interval coloring (or ``{d: count}``, nonzero only).

    ``method="bitset"`` ANDs shifted copies of each colour class held in a
    Python int; ``"reference"`` compares numpy slices.
    """
    n = c.n
    max_d = (n - 1) // (k - 1) if k > 1 else 0
    per_d = {}
    if method == "bitset":
        blue = c.to_int()
        red = blue ^ ((1 << n) - 1)
        for d in range(1, max_d + 1):
            hits = 0
            for x in (red, blue):
                acc = x
                for j in range(1, k):
                    acc &= x >> (j * d)
                hits += acc.bit_count()
            if hits:
                per_d[d] = hits
    elif method == "reference":
        col = c.array
        for d in range(1, max_d + 1):
            span = (k - 1) * d
            first = col[: n - span]
            same = np.ones(n - span, dtype=bool)
            for j in range(1, k):
                same &= col[j * d: j * d + n - span] == first
            hits = int(np.count_nonzero(same))
            if hits:
                per_d[d] = hits
    else:
        raise ValueError(f"unknown method {method!r}")
    return per_d if by_difference else sum(per_d.values())


def u_vector(c: Coloring, k: int) -> tuple[int, ...]:
    """``(u_0, ..., u_k)``: number of k-APs in Z_n^2 with exactly i red terms."""
    n = c.n
    red = (c.array == RED).astype(np.int64)
    a = np.arange(n)
    out = np.zeros(k + 1, dtype=np.int64)
    step = max(1, _CHUNK // (n * k))
    for lo in range(0, n, step):
        d = np.arange(lo, min(n, lo + step))
        terms = (a[None, :, None] + np.arange(k)[:, None, None] * d[None, None, :]) % n
        out += np.bincount(red[terms].sum(axis=0).ravel(), minlength=k + 1)
    return tuple(int(x) for x in out)


@dataclass(frozen=True)
class RedProfile:
    """Colour-class sizes split by residue mod ``modulus``."""

    modulus: int
    residue_counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.residue_counts)


def red_profile(c: Coloring, modulus: int, color=RED) -> RedProfile:
    color = _as_color(color)
    counts = [0] * modulus
    for v, b in enumerate(c.bits):
        if b == color:
            counts[v % modulus] += 1
    return RedProfile(modulus, tuple(counts))


def pair_intersection(c: Coloring, k: int, i: int, j: int, color=RED,
                      mode=CountMode.BRUTE_FORCE) -> int:
    """Number of ``(a, d)`` whose i-th and j-th terms (1-based) both have ``color``.

    ``FORMULA`` uses ``g * sum(rho_l ** 2)`` with ``g = gcd(j - i, n)`` and
    ``rho`` the colour counts by residue mod ``g``.
    """
    if not 1 <= i < j <= k:
        raise ValueError("need 1 <= i < j <= k")
    color = _as_color(color)
    mode = mode if isinstance(mode, CountMode) else CountMode(mode)
    n = c.n
    if mode is CountMode.FORMULA:
        g = math.gcd(j - i, n)
        prof = red_profile(c, g, color)
        return g * sum(x * x for x in prof.residue_counts)
    hit = c.array == color
    a = np.arange(n)[:, None]
    d = np.arange(n)[None, :]
    both = hit[(a + (i - 1) * d) % n] & hit[(a + (j - 1) * d) % n]
    return int(np.count_nonzero(both))


@dataclass(frozen=True)
class PatternSet:
    """A set of length-k colour tuples read in progression order."""

    k: int
    patterns: frozenset

    def __post_init__(self):
        pats = frozenset(tuple(int(b) for b in p) for p in self.patterns)
        if any(len(p) != self.k for p in pats):
            raise ValueError(f"every pattern must have length {self.k}")
        object.__setattr__(self, "patterns", pats)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.patterns

    def __len__(self) -> int:
        return len(self.patterns)

    def lookup_table(self) -> np.ndarray:
        """Boolean table indexed by ``sum(bit_j << j)`` over the k positions."""
        table = np.zeros(1 << self.k, dtype=bool)
        for p in self.patterns:
            table[sum(b << j for j, b in enumerate(p))] = True
        return table


def frame_pattern_set() -> PatternSet:
    """Colour patterns of ``(a-d, a, a+d, a+2d, a+3d)`` for which both 4-APs
    extending the middle 3-AP have an even number of red terms."""
    pats = set()
    for bits in np.ndindex(*(2,) * 5):
        x, s1, s2, s3, y = bits
        reds_left = 4 - (x + s1 + s2 + s3)
        if x == y and reds_left % 2 == 0:
            pats.add(bits)
    return PatternSet(5, frozenset(pats))


FRAME_PATTERNS = frame_pattern_set()

# the same eight patterns, written out
FRAME_PATTERNS_LISTED = (
    (1, 1, 1, 1, 1), (1, 0, 0, 1, 1), (1, 0, 1, 0, 1), (1, 1, 0, 0, 1),
    (0, 0, 0, 0, 0), (0, 1, 1, 0, 0), (0, 1, 0, 1, 0), (0, 0, 1, 1, 0),
)


def count_frame_patterns(c: Coloring, patterns: PatternSet = FRAME_PATTERNS) -> int:
    """Increasing ``patterns.k``-APs of an interval coloring whose colours lie in the set."""
    k = patterns.k
    n = c.n
    col = c.array.astype(np.int64)
    table = patterns.lookup_table()
    total = 0
    for d in range(1, (n - 1) // (k - 1) + 1 if k > 1 else 1):
        m = n - (k - 1) * d
        code = np.zeros(m, dtype=np.int64)
        for j in range(k):
            code |= col[j * d: j * d + m] << j
        total += int(np.count_nonzero(table[code]))
    return total


def count_patterns_cyclic(c: Coloring, patterns: PatternSet) -> int:
    """Parameters ``(a, d) in Z_n^2`` whose k-AP colour tuple lies in ``patterns``."""
    n, k = c.n, patterns.k
    col = c.array.astype(np.int64)
    table = patterns.lookup_table()
    a = np.arange(n)[:, None]
    d = np.arange(n)[None, :]
    code = np.zeros((n, n), dtype=np.int64)
    for j in range(k):
        code |= col[(a + j * d) % n] << j
    return int(np.count_nonzero(table[code]))


def random_coloring(rng: np.random.Generator, n: int,
                    kind: GroupKind = GroupKind.CYCLIC) -> Coloring:
    return Coloring(tuple(int(b) for b in rng.integers(0, 2, n)), kind)


def random_colorings(rng: np.random.Generator, ns: Iterable[int],
                     kind: GroupKind = GroupKind.CYCLIC):
    for n in ns:
        yield random_coloring(rng, n, kind)
