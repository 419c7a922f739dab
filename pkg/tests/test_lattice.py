from fractions import Fraction

import pytest

from monoap.lattice import Polygon, lattice_points, pick_holds, random_simple_polygon, scaling_error
from monoap.periodic import lattice_points_in_polygon

SQUARE = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
TRIANGLE = Polygon(((0, 0), (1, 0), (0, 1)))


@pytest.mark.parametrize("t", [1, 2, 5, 13])
def test_unit_square(t):
    assert lattice_points(SQUARE, t) == ((t - 1) ** 2, 4 * t)
    assert pick_holds(SQUARE.scaled(t))


def test_triangle_doubled():
    # hand count: six lattice points on the boundary of conv{(0,0),(2,0),(0,2)}, none inside
    interior, boundary = lattice_points(TRIANGLE, 2)
    assert (interior, boundary) == (0, 6)
    assert TRIANGLE.scaled(2).area == interior + Fraction(boundary, 2) - 1


def test_translated_triangle():
    interior, boundary = lattice_points(TRIANGLE, 3, (Fraction(1, 2), Fraction(1, 3)))
    assert boundary == 0
    # inside: (1,1), (2,1), (1,2)
    assert interior == 3


def test_alias():
    assert lattice_points_in_polygon is lattice_points


def test_rejects_non_simple():
    with pytest.raises(ValueError):
        Polygon(((0, 0), (2, 2), (2, 0), (0, 2)))
    with pytest.raises(ValueError):
        Polygon(((0, 0), (1, 1), (2, 2)))
    with pytest.raises(ValueError):
        Polygon(((0, 0), (1, 0)))


def test_concave_polygon():
    # an L shape of area 3
    ell = Polygon(((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)))
    assert ell.area == 3
    assert lattice_points(ell) == (0, 8)
    assert lattice_points(ell, 2) == (5, 16)
    assert pick_holds(ell.scaled(3))


def test_pick_needs_integer_vertices():
    with pytest.raises(ValueError):
        pick_holds(TRIANGLE.scaled(Fraction(1, 2)))


def test_random_polygons_pick(rng):
    for _ in range(100):
        assert pick_holds(random_simple_polygon(rng))


def test_scaling_bound_random(rng):
    for _ in range(60):
        p = random_simple_polygon(rng, denominator=3)
        t = int(rng.integers(1, 30))
        v = (Fraction(int(rng.integers(0, 50)), 47), Fraction(int(rng.integers(0, 50)), 43))
        err, bound = scaling_error(p, t, v)
        assert err <= bound


def test_perimeter():
    assert SQUARE.perimeter == pytest.approx(4.0)
