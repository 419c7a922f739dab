"""Acceptance criteria, one test per criterion (criterion 2 is split by table).

A summary line per criterion is printed at the end of the pytest run.
"""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from monoap.apcount import (
    FRAME_PATTERNS, APFilter, count_frame_patterns, count_mono_cyclic, count_mono_interval,
    total_increasing_aps,
)
from monoap.bounds import (
    verify_case2_formula, verify_lemma1_formula, verify_m3_closed_form, verify_mix_identity,
)
from monoap.constructions import (
    TowerSpec, builtin_coloring, builtin_template, ltimes, tower_coloring, tower_predicted_count,
)
from monoap.core import AFFINE_CONJUGATION, MULTIPLICATIVE, Coloring, GroupKind, canonical_form
from monoap.lattice import pick_holds, random_simple_polygon, scaling_error
from monoap.periodic import (
    assemble_periodic, class_counts, density_upper_bound, feasible_classes,
    periodic_equivalence_failures, region_area_table, wrap_class_grid,
)
from monoap.search import (
    exhaustive_min_cyclic, min_pattern_count_interval, pattern_count_minima,
    pattern_free_max_interval, zero_mono_colorings,
)

B20, B22, B74 = (builtin_coloring(x) for x in ("B20", "B22", "B74"))
B11 = builtin_template("B11")
SEED = 2024


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def row(block, k, r):
    counts = class_counts(block, k, r)
    return tuple(counts[i] for i in feasible_classes(k))


def random_coloring(rng, n):
    return Coloring(tuple(int(b) for b in rng.integers(0, 2, n)))


@pytest.mark.criterion("1", "witness counts for B20, B22, B74 (exact, < 1 s)")
def test_c1_witness_counts():
    with Timer() as t:
        assert count_mono_cyclic(B20, 4) == 36
        assert count_mono_cyclic(B22, 4) == 42
        assert count_mono_cyclic(B22, 4, APFilter.BY_DIFFERENCE) == {0: 22, 11: 20}
        assert count_mono_cyclic(B74, 5) == 146
        assert count_mono_cyclic(B74, 5, APFilter.BY_DIFFERENCE) == {0: 74, 37: 72}
    assert t.seconds < 1


@pytest.mark.criterion("2a", "c_i table for B20, odd r (exact)")
def test_c2a_table_b20():
    for r in range(1, 20, 2):
        assert row(B20, 4, r) == (36, 50, 50, 50, 50, 50, 50, 36)


@pytest.mark.criterion("2b", "c_i table for B22, even r (exact)")
def test_c2b_table_b22():
    for r in range(2, 21, 2):
        assert row(B22, 4, r) == (42, 63, 70, 63, 63, 70, 63, 42)


@pytest.mark.criterion("2c", "c_i table for B74, three rows (exact)")
def test_c2c_table_b74():
    even = (146, 293, 377, 377, 378, 359, 293, 293, 359, 378, 377, 377, 293, 146)
    odd = (146, 293, 375, 375, 374, 357, 293, 293, 357, 374, 375, 375, 293, 146)
    mid = (146,) + (144,) * 12 + (146,)
    for r in range(1, 74):
        want = mid if r == 37 else (even if r % 2 == 0 else odd)
        assert row(B74, 5, r) == want, r


@pytest.mark.criterion("2d", "c_i table for B11xB20, even r not divisible by 22 (exact)")
def test_c2d_table_b11_b20():
    block = ltimes(B11, B20)
    assert block.n == 220
    with Timer() as t:
        for r in range(2, 220, 2):
            if r % 22:
                assert row(block, 4, r) == (4882, 7563, 8230, 7563, 7563, 8230, 7563, 4882), r
    assert t.seconds < 30


@pytest.mark.criterion("3", "density bounds as exact fractions (< 1 s)")
def test_c3_densities():
    b11_b20 = ltimes(B11, B20)
    cases = [
        (B20, 4, 1, Fraction(17, 150)), (B22, 4, 2, Fraction(175, 1452)),
        (b11_b20, 4, 2, Fraction(8543, 72600)), (B74, 5, 1, Fraction(3629, 65712)),
        (B74, 5, 2, Fraction(3647, 65712)), (B74, 5, 37, Fraction(289, 10952)),
        (B22, 4, 0, Fraction(21, 242)), (B20, 4, 0, Fraction(9, 100)),
        (B74, 5, 0, Fraction(73, 2738)),
    ]
    with Timer() as t:
        for block, k, r, want in cases:
            assert density_upper_bound(block, k, r) == want
    assert t.seconds < 1


@pytest.mark.criterion("4", "exhaustive minima on Z_20, Z_22, unique zero orbit on Z_11, naive = pruned for n <= 12")
def test_c4_exhaustive_minima():
    with Timer() as t:
        r20 = exhaustive_min_cyclic(20, 4)
        r22 = exhaustive_min_cyclic(22, 4)
        assert r20.exhaustive and r22.exhaustive
        assert r20.minimum_count == 36 and canonical_form(B20) in r20.witnesses
        assert r22.minimum_count == 42 and canonical_form(B22) in r22.witnesses
        assert len(zero_mono_colorings(11, 4, AFFINE_CONJUGATION)) == 1
        print(f"orbits of zero-count colorings of Z_11 under unit multiplications only: "
              f"{len(zero_mono_colorings(11, 4, MULTIPLICATIVE))}")
        for n in range(1, 13):
            for k in (3, 4):
                naive = exhaustive_min_cyclic(n, k, mode="naive")
                pruned = exhaustive_min_cyclic(n, k)
                assert (naive.minimum_count, naive.witnesses) == (pruned.minimum_count, pruned.witnesses)
    assert t.seconds < 30 * 60


@pytest.mark.criterion("5", "recursion identity for B11 and B37, depth-2 tower (< 10 s)")
def test_c5_recursion():
    rng = np.random.default_rng(SEED)
    b37 = builtin_template("B37")
    with Timer() as t:
        for _ in range(200):
            inner = random_coloring(rng, int(rng.integers(1, 31)))
            tt = inner.n
            assert count_mono_cyclic(ltimes(B11, inner), 4) == 10 * tt * tt + count_mono_cyclic(inner, 4)
        for _ in range(50):
            inner = random_coloring(rng, int(rng.integers(1, 31)))
            tt = inner.n
            assert count_mono_cyclic(ltimes(b37, inner), 5) == 36 * tt * tt + count_mono_cyclic(inner, 5)
        spec = TowerSpec(B11, 2, Coloring((1,)))
        assert tower_predicted_count(spec, 4) == 1221
        assert count_mono_cyclic(tower_coloring(spec), 4) == 1221
    assert t.seconds < 10


@pytest.mark.criterion("6", "periodic equivalence for b in {20, 22}, t in {3, 4}; r = 0 multiplicativity (< 1 min)")
def test_c6_periodic():
    rng = np.random.default_rng(SEED)
    with Timer() as t:
        for block in (B20, B22):
            for tt in (3, 4):
                for r in range(block.n):
                    assert periodic_equivalence_failures(block, tt, r, 4) == 0, (block.n, tt, r)
        for b in range(1, 23):
            blocks = [random_coloring(rng, b) for _ in range(3)]
            blocks += [B20] if b == 20 else [B22] if b == 22 else []
            for block in blocks:
                for k in (3, 4, 5):
                    base = count_mono_cyclic(block, k)
                    for tt in range(1, 6):
                        assert count_mono_cyclic(assemble_periodic(block, b * tt), k) == tt * tt * base
    assert t.seconds < 60


@pytest.mark.criterion("7", "identity suites on 1000 random colorings each (< 30 s)")
def test_c7_identities():
    rng = np.random.default_rng(SEED)
    primes = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]
    with Timer() as t:
        for _ in range(1000):
            assert verify_mix_identity(random_coloring(rng, int(rng.integers(4, 41))))
            assert verify_case2_formula(random_coloring(rng, 4 * int(rng.integers(1, 11)) + 2))
            assert verify_lemma1_formula(random_coloring(rng, int(rng.integers(3, 41))), 4)
            assert verify_m3_closed_form(random_coloring(rng, int(rng.choice(primes))))
    assert t.seconds < 30


@pytest.mark.criterion("8", "no F-free coloring of [46]; largest F-free n reported with witness (<= 1 h)")
def test_c8_pattern_free():
    with Timer() as t:
        out = pattern_free_max_interval(FRAME_PATTERNS, 46)
    assert out[46].outcome == "NoneExists"
    best = max(n for n, r in out.items() if r.free_coloring_found)
    w = out[best].witness
    print(f"largest F-free n = {best}, witness {w}")
    assert best == 45
    assert w.n == 45 and count_frame_patterns(w) == 0
    assert t.seconds < 3600


@pytest.mark.criterion("9a", "exact minima of F-pattern counts for n <= 40, nondecreasing")
def test_c9a_intermediate_minima():
    reports = pattern_count_minima(40)
    values = [r.min_count for r in reports]
    assert all(v is not None for v in values)
    assert all(a <= b for a, b in zip(values, values[1:]))


@pytest.mark.slow
@pytest.mark.criterion("9b", "min_pattern_count_interval(74, F) = 27 (optional, long-running)")
def test_c9b_min_pattern_74():
    rep = min_pattern_count_interval(74, FRAME_PATTERNS)
    assert rep.min_count == 27


@pytest.mark.criterion("10", "Pick identity on 500 polygons; scaling bound on all samples (< 10 s)")
def test_c10_pick():
    rng = np.random.default_rng(SEED)
    with Timer() as t:
        for _ in range(500):
            assert pick_holds(random_simple_polygon(rng))
        for _ in range(200):
            poly = random_simple_polygon(rng, grid=12, denominator=int(rng.integers(1, 5)))
            tt = int(rng.integers(1, 20))
            v = (Fraction(int(rng.integers(0, 60)), 59), Fraction(int(rng.integers(0, 60)), 53))
            err, bound = scaling_error(poly, tt, v)
            assert err <= bound
    assert t.seconds < 10


@pytest.mark.criterion("11", "B20-periodic interval density near 9/100 at n = 100001; class counts at n = 720 (< 1 min)")
def test_c11_asymptotics():
    with Timer() as t:
        n = 20 * 5000 + 1
        c = assemble_periodic(B20, n, (0,), GroupKind.INTERVAL)
        ratio = Fraction(count_mono_interval(c, 4), total_increasing_aps(n, 4))
        assert abs(ratio - Fraction(9, 100)) < Fraction(1, 100)
        n = 720
        for k in (4, 5):
            freq = np.bincount(wrap_class_grid(n, k).ravel(), minlength=1 << (k - 1))
            areas = region_area_table(k)
            for i, f in enumerate(freq):
                assert abs(Fraction(int(f)) - areas.get(i, 0) * n * n) <= 4 * n
    assert t.seconds < 60


@pytest.mark.criterion("12", "k = 3 minima for n <= 14 between ceil(n^2/4) and n^2/4 + 3n (<= 10 min)")
def test_c12_three_term_minima():
    with Timer() as t:
        for n in range(1, 15):
            m = exhaustive_min_cyclic(n, 3).minimum_count
            assert m >= math.ceil(n * n / 4)
            assert m <= Fraction(n * n, 4) + 3 * n
        nondeg = [exhaustive_min_cyclic(n, 3, filter="nondeg").minimum_count for n in range(1, 15)]
        print("k = 3 minima without degenerate progressions, n = 1..14:", nondeg)
    assert t.seconds < 600
