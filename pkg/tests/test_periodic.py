from fractions import Fraction

import numpy as np
import pytest

from monoap.apcount import count_mono_cyclic
from monoap.constructions import builtin_coloring
from monoap.core import Coloring, GroupKind
from monoap.periodic import (
    WrapClass, assemble_periodic, class_counts, density_upper_bound, feasible_classes,
    generalized_mono_count, periodic_equivalence_failures, region_area_table, wrap_class,
    wrap_class_grid,
)


def test_wrap_class_examples():
    assert wrap_class(0, 0, 10, 4).index == 0
    assert wrap_class(9, 1, 10, 4) == WrapClass((1, 0, 0))
    assert wrap_class(5, 7, 10, 4).index == 5
    assert str(WrapClass.from_index(5, 4)) == "101"


def test_wrap_class_rejects_out_of_range():
    with pytest.raises(ValueError):
        wrap_class(10, 0, 10, 4)


def test_wrap_grid_matches_scalar():
    grid = wrap_class_grid(13, 5)
    assert all(grid[a, d] == wrap_class(a, d, 13, 5).index for a in range(13) for d in range(13))


def test_area_tables():
    a4 = region_area_table(4)
    assert a4[0] == Fraction(1, 6)
    assert sum(a4.values()) == 1
    a5 = region_area_table(5)
    assert 3 not in a5 and 12 not in a5
    assert len(a5) == 14
    assert sum(a5.values()) == 1
    with pytest.raises(ValueError):
        region_area_table(3)


@pytest.mark.parametrize("k", [4, 5])
def test_area_table_matches_grid_frequencies(k):
    n = 600
    grid = wrap_class_grid(n, k)
    freq = np.bincount(grid.ravel(), minlength=1 << (k - 1))
    areas = region_area_table(k)
    for i, f in enumerate(freq):
        assert abs(f - float(areas.get(i, 0)) * n * n) <= 4 * n


def test_generalized_counts_examples():
    b20 = builtin_coloring("B20")
    for r in (1, 3, 7):
        assert generalized_mono_count(b20, 4, 0, r) == 36
        assert generalized_mono_count(b20, 4, WrapClass((0, 0, 1)), r) == 50
    ones = Coloring((1,) * 9)
    assert all(generalized_mono_count(ones, 4, i, r) == 81 for i in range(8) for r in range(9))
    b22 = builtin_coloring("B22")
    assert all(generalized_mono_count(b22, 4, 0b010, r) == 70 for r in range(2, 21, 2))


def test_generalized_count_r0_is_ordinary_count(rng):
    for _ in range(10):
        c = Coloring(tuple(int(b) for b in rng.integers(0, 2, int(rng.integers(3, 25)))))
        assert all(generalized_mono_count(c, 4, i, 0) == count_mono_cyclic(c, 4) for i in range(8))


def test_densities():
    b20, b22, b74 = (builtin_coloring(x) for x in ("B20", "B22", "B74"))
    assert density_upper_bound(b20, 4, 1) == Fraction(17, 150)
    assert density_upper_bound(b22, 4, 2) == Fraction(175, 1452)
    assert density_upper_bound(b74, 5, 37) == Fraction(289, 10952)
    assert density_upper_bound(b74, 5, 1) == Fraction(3629, 65712)
    assert density_upper_bound(b74, 5, 2) == Fraction(3647, 65712)
    assert density_upper_bound(b22, 4, 0) == Fraction(21, 242)


def test_density_rejects_bad_r():
    with pytest.raises(ValueError):
        density_upper_bound(builtin_coloring("B20"), 4, 20)


def test_assemble_periodic():
    b20 = builtin_coloring("B20")
    c = assemble_periodic(b20, 41, (0,))
    assert c.n == 41 and c.bits[:20] == b20.bits and c.bits[40] == 0
    assert assemble_periodic(b20, 60) == Coloring(b20.bits * 3)
    with pytest.raises(ValueError):
        assemble_periodic(b20, 41)
    assert assemble_periodic(b20, 40, kind=GroupKind.INTERVAL).kind is GroupKind.INTERVAL


def test_r0_exact_multiplicativity(rng):
    for b in (5, 11, 20, 22):
        block = Coloring(tuple(int(x) for x in rng.integers(0, 2, b)))
        for t in (2, 3, 5):
            c = assemble_periodic(block, b * t)
            assert count_mono_cyclic(c, 4) == t * t * count_mono_cyclic(block, 4)


@pytest.mark.parametrize("name,r", [("B20", 7), ("B22", 4), ("B20", 2)])
def test_periodic_equivalence_spot(name, r):
    assert periodic_equivalence_failures(builtin_coloring(name), 3, r, 4) == 0


def test_class_counts_keys():
    assert sorted(class_counts(builtin_coloring("B20"), 4, 1)) == feasible_classes(4)


def _row(block, k, r):
    counts = class_counts(block, k, r)
    return tuple(counts[i] for i in feasible_classes(k))


def test_b11_b20_row_and_density():
    from monoap.constructions import builtin_template, ltimes

    block = ltimes(builtin_template("B11"), builtin_coloring("B20"))
    # c_0 is the plain count: 10 * 20^2 + 36
    for r in range(2, 220, 2):
        if r % 22:
            assert _row(block, 4, r) == (4036, 6250, 6800, 6250, 6250, 6800, 6250, 4036)
    assert density_upper_bound(block, 4, 2) == Fraction(8543, 72600)


def test_row_4882_belongs_to_b11_b22():
    from monoap.constructions import builtin_template, ltimes

    block = ltimes(builtin_template("B11"), builtin_coloring("B22"))
    assert block.n == 242
    assert _row(block, 4, 2) == (4882, 7563, 8230, 7563, 7563, 8230, 7563, 4882)
    assert 4882 == 10 * 22 ** 2 + 42
    assert density_upper_bound(block, 4, 2) != Fraction(8543, 72600)
