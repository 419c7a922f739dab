"""Periodic constructions ``BB...BR`` and their asymptotic monochromatic density.

For ``n = bt + r`` the parameter square ``[0, n)^2`` of cyclic k-APs splits
into *wrap classes*: bit ``x_j`` records whether the j-th step
``a+(j-1)d -> a+jd`` crosses a multiple of ``n``. Inside class ``i`` a k-AP
of the periodic coloring is monochromatic exactly when the
``(x_1 r, ..., x_{k-1} r)``-generalized k-AP at ``(a mod b, d mod b)`` is
monochromatic in ``B``. Weighting those generalized counts by the class
areas gives the limiting density.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .apcount import count_mono_cyclic
from .core import Coloring, GroupKind


@dataclass(frozen=True)
class WrapClass:
    bits: tuple[int, ...]

    @property
    def index(self) -> int:
        out = 0
        for b in self.bits:
            out = (out << 1) | b
        return out

    @classmethod
    def from_index(cls, index: int, k: int) -> "WrapClass":
        width = k - 1
        return cls(tuple((index >> (width - 1 - j)) & 1 for j in range(width)))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def wrap_class(a: int, d: int, n: int, k: int) -> WrapClass:
    """Class of ``(a, d)``: ``x_j = 1`` iff ``floor((a+jd)/n) > floor((a+(j-1)d)/n)``."""
    if not (0 <= a < n and 0 <= d < n):
        raise ValueError("need 0 <= a, d < n")
    return WrapClass(tuple(int((a + j * d) // n > (a + (j - 1) * d) // n)
                           for j in range(1, k)))


def wrap_class_grid(n: int, k: int) -> np.ndarray:
    """Class index of every ``(a, d)`` as an ``n x n`` array indexed ``[a, d]``."""
    a = np.arange(n, dtype=np.int64)[:, None]
    d = np.arange(n, dtype=np.int64)[None, :]
    index = np.zeros((n, n), dtype=np.int64)
    for j in range(1, k):
        crossed = (a + j * d) // n > (a + (j - 1) * d) // n
        index = (index << 1) | crossed
    return index


_AREAS = {
    4: {0: (1, 6), 1: (1, 12), 2: (1, 6), 3: (1, 12),
        4: (1, 12), 5: (1, 6), 6: (1, 12), 7: (1, 6)},
    5: {0: (1, 8), 1: (1, 24), 2: (1, 12), 4: (1, 12), 5: (1, 12),
        6: (1, 24), 7: (1, 24), 8: (1, 24), 9: (1, 24), 10: (1, 12),
        11: (1, 12), 13: (1, 12), 14: (1, 24), 15: (1, 8)},
}


def region_area_table(k: int) -> dict[int, Fraction]:
    """Normalised area of each feasible wrap class (areas sum to 1)."""
    if k not in _AREAS:
        raise ValueError(f"area table available for k in {sorted(_AREAS)}, not {k}")
    return {i: Fraction(p, q) for i, (p, q) in _AREAS[k].items()}


def feasible_classes(k: int) -> list[int]:
    return sorted(region_area_table(k))


def _offsets(pattern: WrapClass | int, k: int, r: int) -> np.ndarray:
    """Cumulative offsets ``sum_{l <= j} x_l r`` for ``j = 0..k-1``."""
    if isinstance(pattern, int):
        pattern = WrapClass.from_index(pattern, k)
    if len(pattern.bits) != k - 1:
        raise ValueError(f"pattern needs {k - 1} bits")
    return np.concatenate([[0], np.cumsum(pattern.bits)]) * r


def generalized_mono_count(block: Coloring, k: int, pattern: WrapClass | int,
                           r: int) -> int:
    """Number of ``(a, d) in Z_b^2`` whose generalized terms
    ``a + jd - sum_{l<=j} x_l r (mod b)`` share one colour."""
    b = block.n
    col = block.array
    shift = _offsets(pattern, k, r)
    a = np.arange(b)[:, None]
    d = np.arange(b)[None, :]
    first = np.broadcast_to(col[a], (b, b))
    mono = np.ones((b, b), dtype=bool)
    for j in range(1, k):
        mono &= col[(a + j * d - shift[j]) % b] == first
    return int(np.count_nonzero(mono))


def class_counts(block: Coloring, k: int, r: int) -> dict[int, int]:
    """``{i: c_i}`` for every feasible class ``i``."""
    return {i: generalized_mono_count(block, k, i, r) for i in feasible_classes(k)}


def density_upper_bound(block: Coloring, k: int, r: int) -> Fraction:
    """Limiting monochromatic k-AP density of ``BB...BR`` over ``Z_n``, ``n = bt + r``.

    ``r = 0`` gives the block density itself.
    """
    b = block.n
    if not 0 <= r < b:
        raise ValueError("need 0 <= r < b")
    if r == 0:
        return Fraction(count_mono_cyclic(block, k), b * b)
    areas = region_area_table(k)
    counts = class_counts(block, k, r)
    return sum((areas[i] * counts[i] for i in areas), Fraction(0)) / (b * b)


def assemble_periodic(block: Coloring, n: int, tail: Sequence[int] = (),
                      kind: GroupKind = GroupKind.CYCLIC) -> Coloring:
    """``floor(n/b)`` copies of ``block`` followed by ``tail`` (length ``n mod b``)."""
    b = block.n
    t, r = divmod(n, b)
    tail = tuple(int(x) for x in tail)
    if len(tail) != r:
        raise ValueError(f"tail must have length {r}, got {len(tail)}")
    return Coloring(block.bits * t + tail, kind)


def periodic_equivalence_failures(block: Coloring, t: int, r: int, k: int,
                                  tail: Sequence[int] | None = None) -> int:
    """Check the class-wise transfer on every AP lying inside the periodic part.

    Returns the number of ``(a, d) in Z_n^2`` (with all terms ``< bt``) where
    monochromaticity in ``BB...BR`` disagrees with the generalized AP in
    ``B``; zero means the transfer holds exactly.
    """
    b = block.n
    n = b * t + r
    if tail is None:
        tail = tuple(j % 2 for j in range(r))
    c = assemble_periodic(block, n, tail).array
    B = block.array
    a = np.arange(n, dtype=np.int64)[:, None]
    d = np.arange(n, dtype=np.int64)[None, :]
    terms = [(a + j * d) % n for j in range(k)]
    inside = np.ones((n, n), dtype=bool)
    for term in terms:
        inside &= term < b * t
    mono = np.ones((n, n), dtype=bool)
    for term in terms[1:]:
        mono &= c[term] == c[terms[0]]

    cls = wrap_class_grid(n, k)
    a0, d0 = a % b, d % b
    offset = np.zeros((n, n), dtype=np.int64)
    gen = [B[np.broadcast_to(a0, (n, n))]]
    for j in range(1, k):
        offset = offset + ((cls >> (k - 1 - j)) & 1) * r
        gen.append(B[(a0 + j * d0 - offset) % b])
    gmono = np.ones((n, n), dtype=bool)
    for g in gen[1:]:
        gmono &= g == gen[0]
    return int(np.count_nonzero(inside & (mono != gmono)))


from .lattice import Polygon, lattice_points as lattice_points_in_polygon  # noqa: E402,F401
