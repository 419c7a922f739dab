"""Counting identities behind the lower bounds, checked exactly on concrete colorings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .apcount import (
    FRAME_PATTERNS, CountMode, count_mono_cyclic, count_patterns_cyclic,
    pair_intersection, red_profile, u_vector,
)
from .core import BLUE, RED, Coloring


@dataclass(frozen=True)
class IdentityReport:
    name: str
    left: object
    right: object

    @property
    def holds(self) -> bool:
        return self.left == self.right

    def __bool__(self) -> bool:
        return self.holds


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p ** 0.5) + 1))


def verify_mix_identity(c: Coloring) -> IdentityReport:
    """``4u_0 + u_1 + u_3 + 4u_4 = -2n^2 + sum_{i<j} (|A_i ∩ A_j| + |B_i ∩ B_j|)`` for 4-APs."""
    n = c.n
    u = u_vector(c, 4)
    left = 4 * u[0] + u[1] + u[3] + 4 * u[4]
    right = -2 * n * n + sum(
        pair_intersection(c, 4, i, j, RED) + pair_intersection(c, 4, i, j, BLUE)
        for i, j in combinations(range(1, 5), 2))
    return IdentityReport("mix", left, right)


def verify_case2_formula(c: Coloring) -> IdentityReport:
    """For ``n = 2 mod 4``: ``|A_1∩A_3| = |A_2∩A_4| = 2(ρ_0+ρ_2)^2 + 2(ρ_1+ρ_3)^2``, both colours.

    ``ρ`` counts the colour class by residue mod 4. Left side lists the
    four brute-force intersections per colour, right side the formula.
    """
    n = c.n
    if n % 4 != 2:
        raise ValueError("n must be 2 mod 4")
    left, right = [], []
    for color in (RED, BLUE):
        rho = red_profile(c, 4, color).residue_counts
        formula = 2 * (rho[0] + rho[2]) ** 2 + 2 * (rho[1] + rho[3]) ** 2
        for i, j in ((1, 3), (2, 4)):
            left.append(pair_intersection(c, 4, i, j, color))
            right.append(formula)
    return IdentityReport("case2", tuple(left), tuple(right))


def frame_sums(c: Coloring) -> dict[str, int]:
    """Sums over all 3-AP parameters ``S = (a, a+d, a+2d)`` of the frame statistics.

    ``p_S``/``q_S`` count the even/odd-coloured 4-APs ``(a-d, S)`` and
    ``(S, a+3d)``.
    """
    n = c.n
    red = (c.array == RED).astype(np.int64)
    a = np.arange(n)[:, None]
    d = np.arange(n)[None, :]
    s_reds = red[a] + red[(a + d) % n] + red[(a + 2 * d) % n]
    left = (s_reds + red[(a - d) % n]) % 2 == 0
    right = (s_reds + red[(a + 3 * d) % n]) % 2 == 0
    p = left.astype(np.int64) + right
    q = 2 - p
    return {"p": int(p.sum()), "q": int(q.sum()), "abs": int(np.abs(p - q).sum()),
            "excess": int(((p - q) * (p > q)).sum())}


def verify_frame_identities(c: Coloring) -> list[IdentityReport]:
    """Frame-pair bookkeeping used in the 4-AP lower bound.

    * ``sum p_S = 2|E|`` and ``sum q_S = 2|O|``;
    * ``4|E| = 2n^2 - sum|p_S - q_S| + 2 sum (p_S - q_S)[p_S > q_S]``;
    * ``sum (p_S - q_S)[p_S > q_S] = 2 #{5-APs with pattern in F}``;
    * ``sum |p_S - q_S|`` equals twice the monochromatic pairs (odd n) or the
      residue formula ``4 sum (class counts by parity)^2`` (``n = 2 mod 4``).
    """
    n = c.n
    u = u_vector(c, 4)
    even, odd = u[0] + u[2] + u[4], u[1] + u[3]
    fs = frame_sums(c)
    out = [
        IdentityReport("sum p_S = 2|E|", fs["p"], 2 * even),
        IdentityReport("sum q_S = 2|O|", fs["q"], 2 * odd),
        IdentityReport("|E| solve", 4 * even, 2 * n * n - fs["abs"] + 2 * fs["excess"]),
        IdentityReport("excess = 2 F-count", fs["excess"],
                       2 * count_patterns_cyclic(c, FRAME_PATTERNS)),
    ]
    reds = c.red_count
    if n % 2 == 1:
        out.append(IdentityReport("odd n frame pairs", fs["abs"],
                                  2 * reds ** 2 + 2 * (n - reds) ** 2))
    elif n % 4 == 2:
        r, b = red_profile(c, 4, RED).residue_counts, red_profile(c, 4, BLUE).residue_counts
        out.append(IdentityReport("n = 2 mod 4 frame pairs", fs["abs"],
                                  4 * (r[0] + r[2]) ** 2 + 4 * (r[1] + r[3]) ** 2
                                  + 4 * (b[0] + b[2]) ** 2 + 4 * (b[1] + b[3]) ** 2))
    return out


def verify_lemma1_formula(c: Coloring, k: int = 4) -> IdentityReport:
    """Brute-force pair intersections against ``gcd(j-i, n) * sum ρ_l^2`` for every ``i < j``, both colours."""
    left, right = [], []
    for color in (RED, BLUE):
        for i, j in combinations(range(1, k + 1), 2):
            left.append(pair_intersection(c, k, i, j, color, CountMode.BRUTE_FORCE))
            right.append(pair_intersection(c, k, i, j, color, CountMode.FORMULA))
    return IdentityReport("pair intersections", tuple(left), tuple(right))


def m3_closed_form(p: int, red_count: int) -> int:
    """Monochromatic 3-APs of any coloring of ``Z_p`` (p prime) with ``red_count`` reds."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 0 <= red_count <= p:
        raise ValueError("red_count out of range")
    return p * p - 3 * red_count * p + 3 * red_count * red_count


def verify_m3_closed_form(c: Coloring) -> IdentityReport:
    return IdentityReport("m3 closed form", count_mono_cyclic(c, 3),
                          m3_closed_form(c.n, c.red_count))


def verify_case3_inequality(c: Coloring) -> IdentityReport:
    """``3(u_0 + u_4) - u_2 >= 3(n - 2·reds)^2``; reported as (holds, True).

    Follows from the mix identity and the pair-intersection lower bounds;
    it implies ``u_0 + u_4 >= u_2 / 3``.
    """
    u = u_vector(c, 4)
    slack = 3 * (u[0] + u[4]) - u[2] - 3 * (c.n - 2 * c.red_count) ** 2
    return IdentityReport("case3", slack >= 0, True)


@dataclass(frozen=True)
class LowerBound:
    value: Fraction
    note: str


def lower_bound_for(n: int, k: int) -> LowerBound:
    """Asymptotic lower bound on the minimum monochromatic k-AP density of ``Z_n``."""
    if k == 3:
        return LowerBound(Fraction(1, 4), "3-APs: inclusion-exclusion with pair counts, minimised at half red")
    if k == 4:
        if n % 4 == 0:
            return LowerBound(Fraction(2, 33),
                              "4 | n: u_0+u_4 >= u_2/3 combined with u_0+u_2+u_4 >= 8n^2/33")
        case = "n odd: frame pairs are unique" if n % 2 else "n = 2 mod 4: frame pairs by parity"
        return LowerBound(Fraction(7, 96), f"{case}; minimised at half red")
    raise ValueError("lower bounds are available for k in {3, 4}")


def claim_constant(min_pattern_count: int = 27, total_aps: int = 648) -> Fraction:
    """``2 * min / total``: the frame-excess density implied by a pattern minimum on ``[74]``."""
    return 2 * Fraction(min_pattern_count, total_aps)
