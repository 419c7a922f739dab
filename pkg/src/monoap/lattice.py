"""Exact integer-point counting in scaled and translated rational polygons."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Point = tuple[Fraction, Fraction]


def _point(p) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p: Point, q: Point, r: Point) -> bool:
    return (min(p[0], r[0]) <= q[0] <= max(p[0], r[0])
            and min(p[1], r[1]) <= q[1] <= max(p[1], r[1]))


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _segments_intersect(p1, p2, p3, p4) -> bool:
    d1 = _sign(_cross(p3, p4, p1))
    d2 = _sign(_cross(p3, p4, p2))
    d3 = _sign(_cross(p1, p2, p3))
    d4 = _sign(_cross(p1, p2, p4))
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return ((d1 == 0 and _on_segment(p3, p1, p4)) or (d2 == 0 and _on_segment(p3, p2, p4))
            or (d3 == 0 and _on_segment(p1, p3, p2)) or (d4 == 0 and _on_segment(p1, p4, p2)))


@dataclass(frozen=True)
class Polygon:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(_point(p) for p in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 3:
            raise ValueError("a polygon needs at least three vertices")
        if not self.is_simple():
            raise ValueError("polygon is not simple")

    @property
    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def is_simple(self) -> bool:
        v = self.vertices
        m = len(v)
        if len(set(v)) != m:
            return False
        edges = self.edges
        for i in range(m):
            for j in range(i + 1, m):
                if j == i + 1 or (i == 0 and j == m - 1):
                    # adjacent edges share one vertex; they must not overlap
                    shared = edges[i][1] if j == i + 1 else edges[i][0]
                    a = edges[i][0] if j == i + 1 else edges[i][1]
                    b = edges[j][1] if j == i + 1 else edges[j][0]
                    if _cross(shared, a, b) == 0 and (
                            (a[0] - shared[0]) * (b[0] - shared[0])
                            + (a[1] - shared[1]) * (b[1] - shared[1])) > 0:
                        return False
                    continue
                if _segments_intersect(*edges[i], *edges[j]):
                    return False
        return _signed_area(v) != 0

    @property
    def area(self) -> Fraction:
        return abs(_signed_area(self.vertices))

    @property
    def perimeter(self) -> float:
        return sum(math.hypot(q[0] - p[0], q[1] - p[1]) for p, q in self.edges)

    def scaled(self, t, v=(0, 0)) -> "Polygon":
        t = Fraction(t)
        vx, vy = _point(v)
        return Polygon(tuple((vx + t * x, vy + t * y) for x, y in self.vertices))


def _signed_area(v: Sequence[Point]) -> Fraction:
    m = len(v)
    return sum((v[i][0] * v[(i + 1) % m][1] - v[(i + 1) % m][0] * v[i][1]
                for i in range(m)), Fraction(0)) / 2


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _boundary_points(edges) -> set[tuple[int, int]]:
    pts = set()
    for (x0, y0), (x1, y1) in edges:
        if y0 == y1:
            if y0.denominator == 1:
                pts.update((x, int(y0)) for x in range(_ceil(min(x0, x1)), _floor(max(x0, x1)) + 1))
            continue
        for y in range(_ceil(min(y0, y1)), _floor(max(y0, y1)) + 1):
            x = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
            if x.denominator == 1:
                pts.add((int(x), y))
    return pts


def lattice_points(polygon: Polygon, t=1, v=(0, 0)) -> tuple[int, int]:
    """``(interior, boundary)`` integer-point counts of ``v + t * polygon``.

    Each horizontal line ``y = Y`` is cut exactly against the edges using the
    half-open crossing rule; points on the boundary are found separately.
    """
    q = polygon.scaled(t, v) if (t != 1 or tuple(v) != (0, 0)) else polygon
    edges = q.edges
    boundary = _boundary_points(edges)
    by_row: dict[int, list[int]] = {}
    for x, y in boundary:
        by_row.setdefault(y, []).append(x)

    ys = [p[1] for p in q.vertices]
    interior = 0
    for y in range(_ceil(min(ys)), _floor(max(ys)) + 1):
        xs = []
        for (x0, y0), (x1, y1) in edges:
            if (y0 <= y < y1) or (y1 <= y < y0):
                xs.append(x0 + (y - y0) * (x1 - x0) / (y1 - y0))
        xs.sort()
        row_boundary = by_row.get(y, ())
        for lo, hi in zip(xs[::2], xs[1::2]):
            first, last = _floor(lo) + 1, _ceil(hi) - 1
            if last < first:
                continue
            interior += last - first + 1
            interior -= sum(1 for x in row_boundary if first <= x <= last)
    return interior, len(boundary)


def pick_holds(polygon: Polygon) -> bool:
    """Pick's identity ``A = I + B/2 - 1`` for a polygon with integer vertices."""
    if any(c.denominator != 1 for p in polygon.vertices for c in p):
        raise ValueError("Pick's identity needs integer vertices")
    interior, boundary = lattice_points(polygon)
    return polygon.area == interior + Fraction(boundary, 2) - 1


def scaling_error(polygon: Polygon, t, v=(0, 0)) -> tuple[Fraction, float]:
    """``(|I(v + tP) - A(P) t^2|, 3 L t + 5 m)``: observed error and its bound."""
    interior, _ = lattice_points(polygon, t, v)
    err = abs(interior - polygon.area * Fraction(t) ** 2)
    bound = 3 * polygon.perimeter * float(t) + 5 * len(polygon.vertices)
    return err, bound


def random_simple_polygon(rng, grid: int = 10, max_vertices: int = 8,
                          denominator: int = 1) -> Polygon:
    """Star-shaped polygon through random points of a ``grid x grid`` lattice.

    Coordinates are ``i / denominator`` for integers ``0 <= i < grid``.
    """
    while True:
        m = int(rng.integers(3, max_vertices + 1))
        raw = {(int(rng.integers(0, grid)), int(rng.integers(0, grid))) for _ in range(m)}
        if len(raw) < 3:
            continue
        cx = sum(p[0] for p in raw) / len(raw)
        cy = sum(p[1] for p in raw) / len(raw)
        ordered = sorted(raw, key=lambda p: (math.atan2(p[1] - cy, p[0] - cx),
                                             (p[0] - cx) ** 2 + (p[1] - cy) ** 2))
        pts = [(Fraction(x, denominator), Fraction(y, denominator)) for x, y in ordered]
        try:
            return Polygon(tuple(pts))
        except ValueError:
            continue


def polygons(rng, count: int, **kwargs) -> Iterable[Polygon]:
    for _ in range(count):
        yield random_simple_polygon(rng, **kwargs)
