"""Named verification suites: each returns a list of :class:`Check` results."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .apcount import count_mono_cyclic, random_coloring
from .bounds import (
    verify_case2_formula, verify_lemma1_formula, verify_m3_closed_form, verify_mix_identity,
)
from .constructions import (
    TowerSpec, builtin_coloring, builtin_template, ltimes, resolve_block, tower_coloring,
    tower_predicted_count,
)
from .core import Coloring
from .lattice import pick_holds, random_simple_polygon, scaling_error
from .periodic import class_counts, density_upper_bound, feasible_classes

DEFAULT_SEED = 20240601

# published c_i rows, classes in increasing index order
TABLE_B20_ODD = (36, 50, 50, 50, 50, 50, 50, 36)
TABLE_B22_EVEN = (42, 63, 70, 63, 63, 70, 63, 42)
TABLE_B74 = {
    "even r": (146, 293, 377, 377, 378, 359, 293, 293, 359, 378, 377, 377, 293, 146),
    "odd r != 37": (146, 293, 375, 375, 374, 357, 293, 293, 357, 374, 375, 375, 293, 146),
    "r = 37": (146,) + (144,) * 12 + (146,),
}
TABLE_B11_B20_EVEN = (4882, 7563, 8230, 7563, 7563, 8230, 7563, 4882)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _row(block: Coloring, k: int, r: int) -> tuple[int, ...]:
    counts = class_counts(block, k, r)
    return tuple(counts[i] for i in feasible_classes(k))


def _table_check(name: str, block: Coloring, k: int, rs, expected) -> Check:
    bad = [r for r in rs if _row(block, k, r) != tuple(expected)]
    if not bad:
        return Check(name, True, f"{len(rs)} values of r")
    return Check(name, False, f"r={bad[0]} gives {_row(block, k, bad[0])}, expected {tuple(expected)}")


def tables_suite() -> list[Check]:
    b20, b22, b74 = (builtin_coloring(x) for x in ("B20", "B22", "B74"))
    b11_b20 = ltimes(builtin_template("B11"), b20)
    return [
        _table_check("B20 c_i, odd r", b20, 4, range(1, 20, 2), TABLE_B20_ODD),
        _table_check("B22 c_i, even r", b22, 4, range(2, 21, 2), TABLE_B22_EVEN),
        _table_check("B74 c_i, even r", b74, 5, range(2, 74, 2), TABLE_B74["even r"]),
        _table_check("B74 c_i, odd r != 37", b74, 5, [r for r in range(1, 74, 2) if r != 37],
                     TABLE_B74["odd r != 37"]),
        _table_check("B74 c_i, r = 37", b74, 5, [37], TABLE_B74["r = 37"]),
        _table_check("B11xB20 c_i, even r not divisible by 22", b11_b20, 4,
                     [r for r in range(2, 220, 2) if r % 22], TABLE_B11_B20_EVEN),
        # the row above is what the 242-element block B11xB22 produces
        _table_check("B11xB22 c_i, even r not divisible by 22", ltimes(builtin_template("B11"), b22),
                     4, [r for r in range(2, 242, 2) if r % 22], TABLE_B11_B20_EVEN),
    ]


DENSITIES = {
    ("B20", 4, 1): Fraction(17, 150),
    ("B22", 4, 2): Fraction(175, 1452),
    ("B11xB20", 4, 2): Fraction(8543, 72600),
    ("B74", 5, 1): Fraction(3629, 65712),
    ("B74", 5, 2): Fraction(3647, 65712),
    ("B74", 5, 37): Fraction(289, 10952),
    ("B22", 4, 0): Fraction(21, 242),
    ("B20", 4, 0): Fraction(9, 100),
    ("B74", 5, 0): Fraction(73, 2738),
}


def densities_suite() -> list[Check]:
    out = []
    for (name, k, r), expected in DENSITIES.items():
        got = density_upper_bound(resolve_block(name), k, r)
        out.append(Check(f"density {name} k={k} r={r} = {expected}", got == expected, f"got {got}"))
    return out


def identities_suite(seed: int = DEFAULT_SEED, count: int = 1000) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = {"mix identity": 0, "n = 2 mod 4 formula": 0, "pair-intersection formula": 0,
              "m3 closed form": 0}
    failures: dict[str, str] = {}

    def record(name, report, c):
        if report.holds:
            checks[name] += 1
        else:
            failures.setdefault(name, str(c))

    for _ in range(count):
        c = random_coloring(rng, int(rng.integers(4, 41)))
        record("mix identity", verify_mix_identity(c), c)
        record("pair-intersection formula", verify_lemma1_formula(c, int(rng.integers(3, 6))), c)
        n2 = 4 * int(rng.integers(1, 10)) + 2
        c2 = random_coloring(rng, n2)
        record("n = 2 mod 4 formula", verify_case2_formula(c2), c2)
        p = int(rng.choice([3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]))
        cp = random_coloring(rng, p)
        record("m3 closed form", verify_m3_closed_form(cp), cp)
    return [Check(name, name not in failures,
                  f"{ok}/{count} colorings" + (f"; first failure {failures[name]}" if name in failures else ""))
            for name, ok in checks.items()]


def recursion_suite(seed: int = DEFAULT_SEED, count4: int = 200, count5: int = 50) -> list[Check]:
    rng = np.random.default_rng(seed)
    out = []
    for name, k, count in (("B11", 4, count4), ("B37", 5, count5)):
        template = builtin_template(name)
        bad = None
        for _ in range(count):
            inner = random_coloring(rng, int(rng.integers(1, 31)))
            t = inner.n
            got = count_mono_cyclic(ltimes(template, inner), k)
            want = (template.b - 1) * t * t + count_mono_cyclic(inner, k)
            if got != want and bad is None:
                bad = f"inner {inner}: {got} != {want}"
        out.append(Check(f"{name} recursion, {count} random inner colorings", bad is None, bad or ""))
    spec = TowerSpec(builtin_template("B11"), 2, Coloring((1,)))
    direct = count_mono_cyclic(tower_coloring(spec), 4)
    predicted = tower_predicted_count(spec, 4)
    out.append(Check("depth-2 B11 tower over (1): Z_121 count 1221",
                     direct == predicted == 1221, f"direct {direct}, recursion {predicted}"))
    return out


def pick_suite(seed: int = DEFAULT_SEED, count: int = 500) -> list[Check]:
    rng = np.random.default_rng(seed)
    pick_bad = sum(not pick_holds(random_simple_polygon(rng)) for _ in range(count))
    worst = 0.0
    bound_bad = 0
    for _ in range(count):
        poly = random_simple_polygon(rng, grid=12, denominator=int(rng.integers(1, 6)))
        t = int(rng.integers(1, 25))
        v = (Fraction(int(rng.integers(0, 100)), 97), Fraction(int(rng.integers(0, 100)), 89))
        err, bound = scaling_error(poly, t, v)
        worst = max(worst, float(err) / bound)
        bound_bad += err > bound
    return [
        Check(f"Pick identity on {count} random lattice polygons", pick_bad == 0,
              f"{pick_bad} failures"),
        Check(f"scaling bound on {count} random rational polygons", bound_bad == 0,
              f"largest error/bound {worst:.3f}"),
    ]


SUITES = {
    "tables": tables_suite,
    "densities": densities_suite,
    "identities": identities_suite,
    "recursion": recursion_suite,
    "pick": pick_suite,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> list[Check]:
    if name == "all":
        return [c for key in SUITES for c in run_suite(key, seed)]
    fn = SUITES[name]
    return fn() if name in ("tables", "densities") else fn(seed)
