"""Colorings of Z_n and [n], their symmetries, and exact ratios.

A coloring is a 0/1 sequence; colour 0 is *red* and colour 1 is *blue*.
Interval colorings of ``[n] = {1, ..., n}`` are stored 0-based.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

RED = 0
BLUE = 1

_SEPARATORS = str.maketrans("", "", "(),[] \t\r\n")


class GroupKind(enum.Enum):
    CYCLIC = "zn"
    INTERVAL = "interval"


@dataclass(frozen=True)
class Coloring:
    """An immutable 2-coloring of ``Z_n`` or ``[n]``."""

    bits: tuple[int, ...]
    kind: GroupKind = GroupKind.CYCLIC

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise ValueError("a coloring needs at least one element")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("coloring bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def is_cyclic(self) -> bool:
        return self.kind is GroupKind.CYCLIC

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.bits, dtype=np.uint8)
        arr.setflags(write=False)
        return arr

    @property
    def red_count(self) -> int:
        return self.n - sum(self.bits)

    def __getitem__(self, v: int) -> int:
        if self.is_cyclic:
            return self.bits[v % self.n]
        return self.bits[v]

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self) -> str:
        return format_coloring(self)

    def as_kind(self, kind: GroupKind) -> "Coloring":
        return Coloring(self.bits, kind)

    @classmethod
    def constant(cls, n: int, bit: int = RED, kind: GroupKind = GroupKind.CYCLIC):
        return cls((bit,) * n, kind)

    @classmethod
    def from_int(cls, value: int, n: int, kind: GroupKind = GroupKind.CYCLIC):
        """Bit ``v`` of ``value`` becomes the colour of element ``v``."""
        return cls(tuple((value >> v) & 1 for v in range(n)), kind)

    def to_int(self) -> int:
        return sum(b << v for v, b in enumerate(self.bits))


def parse_coloring(text: str, n: int | None = None,
                   kind: GroupKind = GroupKind.CYCLIC) -> Coloring:
    """Parse ``"1110110..."``; parentheses, brackets, commas and spaces are ignored."""
    body = text.translate(_SEPARATORS)
    for ch in body:
        if ch not in "01":
            raise ValueError(f"illegal character {ch!r} in coloring")
    if n is not None and len(body) != n:
        raise ValueError(f"expected {n} bits, got {len(body)}")
    if not body:
        raise ValueError("empty coloring")
    return Coloring(tuple(int(ch) for ch in body), kind)


def format_coloring(c: Coloring | Sequence[int]) -> str:
    return "".join(str(b) for b in c)


def _require_cyclic(c: Coloring) -> None:
    if not c.is_cyclic:
        raise ValueError("operation is defined for colorings of Z_n only")


def apply_unit_map(c: Coloring, m: int) -> Coloring:
    """Return ``v -> c(m v mod n)``; ``m`` must be a unit mod ``n``."""
    _require_cyclic(c)
    n = c.n
    if math.gcd(m, n) != 1:
        raise ValueError(f"gcd({m}, {n}) != 1")
    return Coloring(tuple(c.bits[(m * v) % n] for v in range(n)), c.kind)


def translate(c: Coloring, s: int) -> Coloring:
    _require_cyclic(c)
    n = c.n
    return Coloring(tuple(c.bits[(v + s) % n] for v in range(n)), c.kind)


def conjugate(c: Coloring) -> Coloring:
    return Coloring(tuple(1 - b for b in c.bits), c.kind)


def units(n: int) -> list[int]:
    return [m for m in range(1, max(n, 2)) if math.gcd(m, n) == 1]


@dataclass(frozen=True)
class SymmetryGroup:
    """Which generator families act on colorings of ``Z_n``.

    Every enabled map permutes the k-APs of ``Z_n`` (or swaps colours), so
    monochromatic counts are invariant under the generated group.
    """

    use_translations: bool = True
    use_unit_multiplications: bool = True
    use_conjugation: bool = True

    def __post_init__(self):
        if not (self.use_translations or self.use_unit_multiplications
                or self.use_conjugation):
            raise ValueError("at least one generator family must be enabled")

    @property
    def label(self) -> str:
        parts = []
        if self.use_translations:
            parts.append("translations")
        if self.use_unit_multiplications:
            parts.append("units")
        if self.use_conjugation:
            parts.append("conjugation")
        return "+".join(parts)

    def permutations(self, n: int) -> np.ndarray:
        """Index maps ``pi`` with image coloring ``v -> c(pi[v])``, one row per element.

        Row 0 is the identity. Conjugation is not included here; see
        :meth:`elements`.
        """
        mults = units(n) if self.use_unit_multiplications else [1]
        shifts = range(n) if self.use_translations else [0]
        v = np.arange(n, dtype=np.int64)
        rows = [(m * v + s) % n for m in mults for s in shifts]
        perms = np.unique(np.array(rows, dtype=np.int64), axis=0)
        # put the identity first
        ident = np.flatnonzero((perms == v).all(axis=1))
        order = np.concatenate([ident, np.setdiff1d(np.arange(len(perms)), ident)])
        return perms[order]

    def elements(self, n: int) -> Iterator[tuple[np.ndarray, bool]]:
        flips = (False, True) if self.use_conjugation else (False,)
        for perm in self.permutations(n):
            for flip in flips:
                yield perm, flip

    def order(self, n: int) -> int:
        return len(self.permutations(n)) * (2 if self.use_conjugation else 1)


AFFINE_CONJUGATION = SymmetryGroup(True, True, True)
AFFINE = SymmetryGroup(True, True, False)
MULTIPLICATIVE = SymmetryGroup(False, True, False)


def orbit_images(c: Coloring, sym: SymmetryGroup) -> np.ndarray:
    """All images of ``c`` under ``sym`` as rows of a uint8 array (may repeat)."""
    _require_cyclic(c)
    perms = sym.permutations(c.n)
    images = c.array[perms]
    if sym.use_conjugation:
        images = np.concatenate([images, 1 - images])
    return images


def orbit(c: Coloring, sym: SymmetryGroup) -> set[Coloring]:
    return {Coloring(tuple(row), c.kind) for row in np.unique(orbit_images(c, sym), axis=0)}


def canonical_form(c: Coloring, sym: SymmetryGroup | None = AFFINE_CONJUGATION) -> Coloring:
    """Lexicographically least coloring in the orbit of ``c``; ``sym=None`` returns ``c``."""
    if sym is None:
        return c
    images = orbit_images(c, sym)
    # lexsort keys are read last-to-first
    best = images[np.lexsort(images.T[::-1])[0]]
    return Coloring(tuple(int(b) for b in best), c.kind)


def count_orbits(colorings: Iterable[Coloring], sym: SymmetryGroup) -> int:
    return len({canonical_form(c, sym) for c in colorings})


# -- exact ratios -----------------------------------------------------------

def ratio(num: int, den: int = 1) -> Fraction:
    if den <= 0:
        raise ValueError("denominator must be positive")
    return Fraction(num, den)


def format_ratio(q: Fraction) -> str:
    """Serialize as ``num/den`` (always with a denominator)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_ratio(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    if not sep:
        raise ValueError(f"expected num/den, got {text!r}")
    return ratio(int(num), int(den))
