"""Exhaustive and branch-and-bound searches over 2-colorings.

All searches extend prefixes one element at a time. A frontier of prefixes
is held as numpy arrays (bit ``v`` of ``lsb`` is the colour of element
``v``; ``msb`` holds the same prefix with element 0 as its most significant
bit, so numeric order on ``msb`` is lexicographic order). Progressions are
charged to the level of their largest element, which makes the partial
count of a prefix a lower bound for all of its extensions.

Frontiers larger than ``max_frontier`` are split and processed
depth-first, which bounds memory; the pending stack is what a checkpoint
file stores.
"""

from __future__ import annotations

import json
import math
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .apcount import (
    FRAME_PATTERNS, APFilter, PatternSet, count_frame_patterns, degenerate_mask,
)
from .core import AFFINE_CONJUGATION, Coloring, GroupKind, SymmetryGroup, canonical_form

NAIVE_CAP = 16
PRUNED_CAP = 24
_WORD = 63
# interval searches keep elements [0, _LO_BITS) in ``lsb`` and the rest in ``hi``
_LO_BITS = 64
_INTERVAL_MAX = 128
_ONE = np.uint64(1)


class SearchCapExceeded(ValueError):
    pass


@dataclass
class Budget:
    max_nodes: int | None = None
    max_seconds: float | None = None

    def exceeded(self, nodes: int, started: float) -> bool:
        if self.max_nodes is not None and nodes > self.max_nodes:
            return True
        return self.max_seconds is not None and time.monotonic() - started > self.max_seconds


@dataclass
class SearchReport:
    n: int
    k: int
    minimum_count: int
    witnesses: list[Coloring]
    symmetry: SymmetryGroup | None
    nodes_explored: int
    exhaustive: bool
    filter: APFilter = APFilter.ALL

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "minimum_count": self.minimum_count,
            "witnesses": [str(w) for w in self.witnesses],
            "symmetry": None if self.symmetry is None else self.symmetry.label, "nodes_explored": self.nodes_explored,
            "exhaustive": self.exhaustive, "filter": self.filter.value,
        }


@dataclass
class PatternSearchReport:
    n: int
    pattern_set: PatternSet
    witness: Coloring | None = None
    min_count: int | None = None
    lower_bound_proved: int | None = None
    budget_exhausted: bool = False
    nodes_explored: int = 0

    @property
    def outcome(self) -> str:
        if self.min_count == 0:
            return "FreeColoringFound"
        if self.min_count is not None or (self.lower_bound_proved or 0) >= 1:
            return "NoneExists"
        return "Unknown"

    @property
    def free_coloring_found(self) -> bool:
        return self.outcome == "FreeColoringFound"

    def to_dict(self) -> dict:
        return {
            "n": self.n, "outcome": self.outcome,
            "witness": None if self.witness is None else str(self.witness),
            "min_count": self.min_count, "lower_bound_proved": self.lower_bound_proved,
            "budget_exhausted": self.budget_exhausted, "nodes_explored": self.nodes_explored,
        }


# -- frontier helpers ---------------------------------------------------------

@dataclass
class _Frontier:
    level: int
    lsb: np.ndarray
    msb: np.ndarray
    partial: np.ndarray
    hi: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.lsb)

    def take(self, idx) -> "_Frontier":
        hi = None if self.hi is None else self.hi[idx]
        return _Frontier(self.level, self.lsb[idx], self.msb[idx], self.partial[idx], hi)

    def value(self, i: int) -> int:
        """Prefix ``i`` as a Python int, bit ``v`` = colour of element ``v``."""
        x = int(self.lsb[i])
        return x if self.hi is None else x | (int(self.hi[i]) << _LO_BITS)

    def split(self, parts: int) -> list["_Frontier"]:
        bounds = np.linspace(0, len(self), parts + 1).astype(int)
        return [self.take(slice(lo, hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]


def _root() -> _Frontier:
    z = np.zeros(1, dtype=np.uint64)
    return _Frontier(0, z, z.copy(), np.zeros(1, dtype=np.int64))


def _children(f: _Frontier) -> _Frontier:
    v = f.level
    shifted = f.msb << _ONE
    msb = np.concatenate([shifted, shifted | _ONE])
    partial = np.concatenate([f.partial, f.partial])
    if v < _LO_BITS:
        bit = _ONE << np.uint64(v)
        lsb = np.concatenate([f.lsb, f.lsb | bit])
        hi = None if f.hi is None else np.concatenate([f.hi, f.hi])
    else:
        base = np.zeros(len(f), dtype=np.uint64) if f.hi is None else f.hi
        bit = _ONE << np.uint64(v - _LO_BITS)
        lsb = np.concatenate([f.lsb, f.lsb])
        hi = np.concatenate([base, base | bit])
    return _Frontier(v + 1, lsb, msb, partial, hi)


def _bits_of(lsb: int, n: int) -> tuple[int, ...]:
    return tuple((int(lsb) >> v) & 1 for v in range(n))


def _frontier_from_prefixes(level: int, prefixes: Sequence[str], partial) -> _Frontier:
    values = [sum(int(ch) << v for v, ch in enumerate(p)) for p in prefixes]
    mask = (1 << _LO_BITS) - 1
    lsb = np.array([x & mask for x in values], dtype=np.uint64)
    hi = None
    if level > _LO_BITS:
        hi = np.array([x >> _LO_BITS for x in values], dtype=np.uint64)
    msb = np.array([int(p[-_WORD:], 2) if p else 0 for p in prefixes], dtype=np.uint64)
    return _Frontier(level, lsb, msb, np.array(partial, dtype=np.int64), hi)


# -- checkpoint files -----------------------------------------------------------

def write_checkpoint(path: str, meta: dict, pending: list[_Frontier]) -> None:
    """Header line of JSON metadata, then one ``level prefix partial`` record per prefix."""
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(json.dumps(meta, sort_keys=True) + "\n")
        for f in pending:
            for i in range(len(f)):
                x = f.value(i)
                prefix = "".join(str((x >> v) & 1) for v in range(f.level))
                fh.write(f"{f.level} {prefix or '-'} {int(f.partial[i])}\n")
    os.replace(tmp, path)


def read_checkpoint(path: str) -> tuple[dict, list[_Frontier]]:
    with open(path) as fh:
        meta = json.loads(fh.readline())
        groups: dict[int, tuple[list, list]] = defaultdict(lambda: ([], []))
        order: list[int] = []
        for line in fh:
            if not line.strip():
                continue
            level, prefix, partial = line.split()
            level = int(level)
            if level not in groups:
                order.append(level)
            groups[level][0].append("" if prefix == "-" else prefix)
            groups[level][1].append(int(partial))
    pending = [_frontier_from_prefixes(lv, *groups[lv]) for lv in order]
    return meta, pending


# -- generic driver -----------------------------------------------------------------

class _Problem:
    n: int

    def step(self, f: _Frontier) -> _Frontier:
        raise NotImplementedError

    def collect(self, f: _Frontier) -> None:
        raise NotImplementedError

    def meta(self) -> dict:
        raise NotImplementedError


def _drive(problem: _Problem, pending: list[_Frontier], *, max_frontier: int,
           budget: Budget | None = None, checkpoint: str | None = None,
           checkpoint_every: int = 50, nodes: int = 0) -> tuple[int, list[_Frontier]]:
    """Run until the stack is empty or the budget runs out; returns (nodes, leftover)."""
    started = time.monotonic()
    stack = list(pending)
    steps = 0
    while stack:
        if budget is not None and budget.exceeded(nodes, started):
            break
        f = stack.pop()
        if len(f) == 0:
            continue
        if f.level == problem.n:
            problem.collect(f)
            continue
        if len(f) > max_frontier:
            parts = f.split(math.ceil(len(f) / max_frontier))
            stack.extend(reversed(parts))
            continue
        child = problem.step(f)
        nodes += len(child)
        stack.append(child)
        steps += 1
        if checkpoint and steps % checkpoint_every == 0:
            write_checkpoint(checkpoint, problem.meta() | {"nodes": nodes}, stack)
    if checkpoint:
        write_checkpoint(checkpoint, problem.meta() | {"nodes": nodes}, stack)
    return nodes, stack


# -- cyclic minimisation -----------------------------------------------------------

def _cyclic_level_masks(n: int, k: int, filter: APFilter):
    """For each level v, unique term masks of APs whose largest term is v, with multiplicities."""
    skip = degenerate_mask(n, k) if filter is APFilter.NONDEGENERATE else np.zeros(n, bool)
    table: list[dict[int, int]] = [defaultdict(int) for _ in range(n)]
    for d in range(n):
        if skip[d]:
            continue
        for a in range(n):
            terms = {(a + j * d) % n for j in range(k)}
            mask = 0
            for t in terms:
                mask |= 1 << t
            table[max(terms)][mask] += 1
    return [(np.array(list(t.keys()), dtype=np.uint64), np.array(list(t.values()), dtype=np.int64))
            for t in table]


def _all_masks(n: int, k: int, filter: APFilter):
    masks = _cyclic_level_masks(n, k, filter)
    return (np.concatenate([m for m, _ in masks]), np.concatenate([c for _, c in masks]))


def _mono_counts(x: np.ndarray, masks: np.ndarray, mults: np.ndarray) -> np.ndarray:
    out = np.zeros(len(x), dtype=np.int64)
    for mask, mult in zip(masks, mults):
        m = x & mask
        out += mult * ((m == 0) | (m == mask))
    return out


class _Symmetry:
    """Prefix tests that discard prefixes of non-canonical colorings."""

    def __init__(self, n: int, sym: SymmetryGroup | None):
        self.n = n
        self.sym = sym
        self.generic: list[tuple[np.ndarray, bool]] = []
        if sym is None:
            return
        for perm, flip in sym.elements(n):
            if n > 1 and (int(perm[1]) - int(perm[0])) % n == 1:
                continue  # translations and their conjugates use the fast path
            if not flip and np.array_equal(perm, np.arange(n)):
                continue
            self.generic.append((perm, flip))

    @staticmethod
    def _run_length(perm: np.ndarray, level: int) -> int:
        j = 0
        while j < level and perm[j] < level:
            j += 1
        return j

    def _image_less(self, f: _Frontier, perm: np.ndarray, flip: bool, run: int) -> np.ndarray:
        image = np.zeros(len(f), dtype=np.uint64)
        flipbit = np.uint64(1 if flip else 0)
        for u in range(run):
            image = (image << _ONE) | (((f.lsb >> np.uint64(perm[u])) & _ONE) ^ flipbit)
        own = f.msb >> np.uint64(f.level - run)
        return image < own

    def keep(self, f: _Frontier) -> np.ndarray:
        keep = np.ones(len(f), dtype=bool)
        if self.sym is None:
            return keep
        L = f.level
        if L == self.n:
            for perm, flip in list(self.sym.elements(self.n))[1:]:
                keep &= ~self._image_less(f, perm, flip, L)
            return keep
        if self.sym.use_conjugation:
            # first element must be red
            keep &= (f.msb >> np.uint64(L - 1)) == 0
        if self.sym.use_translations:
            for s in range(1, L):
                width = L - s
                low = (_ONE << np.uint64(width)) - _ONE
                tail = f.msb & low
                head = f.msb >> np.uint64(s)
                keep &= ~(tail < head)
                if self.sym.use_conjugation:
                    keep &= ~((tail ^ low) < head)
        for perm, flip in self.generic:
            run = self._run_length(perm, L)
            if run >= 2:
                keep &= ~self._image_less(f, perm, flip, run)
        return keep


class _CyclicMin(_Problem):
    def __init__(self, n, k, filter, sym, bound, masks=None):
        self.n, self.k, self.filter = n, k, filter
        self.symgroup = sym
        self.sym = _Symmetry(n, sym)
        self.bound = bound
        self.masks = masks if masks is not None else _cyclic_level_masks(n, k, filter)
        self.best = bound
        self.leaves: list[tuple[int, int]] = []

    def meta(self) -> dict:
        return {"kind": "cyclic-min", "n": self.n, "k": self.k, "filter": self.filter.value,
                "symmetry": None if self.symgroup is None else self.symgroup.label,
                "bound": int(self.best), "leaves": [[x, p] for x, p in self.leaves]}

    def step(self, f: _Frontier) -> _Frontier:
        c = _children(f)
        masks, mults = self.masks[f.level]
        for mask, mult in zip(masks, mults):
            m = c.lsb & mask
            c.partial += mult * ((m == 0) | (m == mask))
        c = c.take(c.partial <= self.best)
        return c.take(self.sym.keep(c))

    def collect(self, f: _Frontier) -> None:
        if len(f) == 0:
            return
        low = int(f.partial.min())
        if low < self.best:
            self.best = low
            self.leaves = [x for x in self.leaves if x[1] <= low]
        sel = f.partial == self.best
        self.leaves.extend(zip((int(x) for x in f.lsb[sel]), (int(p) for p in f.partial[sel])))


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise SearchCapExceeded(f"n = {n} exceeds the search cap {cap}")
    if n > _WORD:
        raise SearchCapExceeded("n must fit in a 63-bit word")


def local_search_upper_bound(n: int, k: int, filter=APFilter.ALL, restarts: int = 40,
                             seed: int = 0) -> tuple[int, int]:
    """Steepest-descent single-bit flips from random starts; returns (count, coloring int)."""
    filter = filter if isinstance(filter, APFilter) else APFilter(filter)
    masks, mults = _all_masks(n, k, filter)
    rng = np.random.default_rng(seed)
    flips = _ONE << np.arange(n, dtype=np.uint64)
    best = (None, 0)
    for _ in range(restarts):
        x = np.uint64(int(rng.integers(0, 1 << n)))
        cur = int(_mono_counts(np.array([x]), masks, mults)[0])
        while True:
            nb = x ^ flips
            counts = _mono_counts(nb, masks, mults)
            i = int(np.argmin(counts))
            if counts[i] >= cur:
                break
            x, cur = nb[i], int(counts[i])
        if best[0] is None or cur < best[0]:
            best = (cur, int(x))
    return best


def _finish_cyclic(n, k, filter, sym, best, lsb_values, nodes, exhaustive) -> SearchReport:
    witnesses = sorted({canonical_form(Coloring(_bits_of(x, n)), sym) for x in lsb_values},
                       key=lambda c: c.bits)
    return SearchReport(n, k, int(best), witnesses, sym, nodes, exhaustive, filter)


def _naive_min(n, k, filter, sym) -> SearchReport:
    masks, mults = _all_masks(n, k, filter)
    best, winners = None, []
    chunk = 1 << 16
    for lo in range(0, 1 << n, chunk):
        x = np.arange(lo, min(1 << n, lo + chunk), dtype=np.uint64)
        counts = _mono_counts(x, masks, mults)
        low = int(counts.min())
        if best is None or low < best:
            best, winners = low, []
        if low == best:
            winners.extend(int(v) for v in x[counts == best])
    return _finish_cyclic(n, k, filter, sym, best, winners, 1 << n, True)


def _subtree_worker(args):
    n, k, filter_value, sym, bound, frontier = args
    prob = _CyclicMin(n, k, APFilter(filter_value), sym, bound)
    nodes, _ = _drive(prob, [frontier], max_frontier=1 << 20)
    return prob.best, [x for x, p in prob.leaves if p == prob.best], nodes


def exhaustive_min_cyclic(n: int, k: int, sym: SymmetryGroup | None = AFFINE_CONJUGATION,
                          mode: str = "pruned", filter=APFilter.ALL, *,
                          cap: int | None = None, workers: int = 1,
                          max_frontier: int = 1 << 20, checkpoint: str | None = None,
                          resume: bool = False, upper_bound: int | None = None,
                          budget: Budget | None = None) -> SearchReport:
    """Exact minimum of the monochromatic k-AP count over all 2-colorings of ``Z_n``.

    ``mode="naive"`` scores every one of the ``2^n`` colorings; ``mode="pruned"``
    extends canonical prefixes only and discards prefixes whose partial
    count already exceeds the best known total. Witnesses are the canonical
    forms (under ``sym``) of all minimisers, sorted.

    With a ``budget`` (single worker only) the search may stop early; the
    report is then marked non-exhaustive and, given ``checkpoint``, can be
    continued with ``resume=True``.
    """
    filter = filter if isinstance(filter, APFilter) else APFilter(filter)
    if mode == "naive":
        _check_cap(n, NAIVE_CAP if cap is None else cap)
        return _naive_min(n, k, filter, sym)
    if mode != "pruned":
        raise ValueError(f"unknown mode {mode!r}")
    _check_cap(n, PRUNED_CAP if cap is None else cap)

    nodes = 0
    pending = [_root()]
    leaves: list[tuple[int, int]] = []
    if resume and checkpoint and os.path.exists(checkpoint):
        meta, pending = read_checkpoint(checkpoint)
        if (meta.get("kind"), meta.get("n"), meta.get("k")) != ("cyclic-min", n, k):
            raise ValueError("checkpoint belongs to a different search")
        upper_bound = meta["bound"]
        nodes = meta.get("nodes", 0)
        leaves = [(int(x), int(p)) for x, p in meta.get("leaves", [])]
    if upper_bound is None:
        upper_bound = local_search_upper_bound(n, k, filter)[0]

    if workers > 1:
        prob = _CyclicMin(n, k, filter, sym, upper_bound)
        # breadth-first until there is enough work to share
        while pending and len(pending) == 1 and pending[0].level < n and len(pending[0]) < 8 * workers:
            f = pending.pop()
            child = prob.step(f)
            nodes += len(child)
            pending.append(child)
        tasks = [p for f in pending for p in f.split(workers)]
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_subtree_worker,
                                    [(n, k, filter.value, sym, upper_bound, t) for t in tasks]))
        best = min(r[0] for r in results)
        leaves = [x for r in results if r[0] == best for x in r[1]]
        nodes += sum(r[2] for r in results)
        return _finish_cyclic(n, k, filter, sym, best, leaves, nodes, True)

    prob = _CyclicMin(n, k, filter, sym, upper_bound)
    prob.leaves = leaves
    nodes, left = _drive(prob, pending, max_frontier=max_frontier, budget=budget,
                         checkpoint=checkpoint, nodes=nodes)
    return _finish_cyclic(n, k, filter, sym, prob.best,
                          [x for x, p in prob.leaves if p == prob.best], nodes, not left)


def zero_mono_colorings(n: int, k: int, sym: SymmetryGroup | None = AFFINE_CONJUGATION,
                        cap: int = PRUNED_CAP) -> list[Coloring]:
    """Canonical representatives of every orbit with no non-degenerate monochromatic k-AP.

    ``sym=None`` lists every such coloring.
    """
    _check_cap(n, cap)
    prob = _CyclicMin(n, k, APFilter.NONDEGENERATE, sym, 0)
    _drive(prob, [_root()], max_frontier=1 << 20)
    if prob.best != 0:
        return []
    return sorted({canonical_form(Coloring(_bits_of(x, n)), sym) for x, _ in prob.leaves},
                  key=lambda c: c.bits)


# -- interval pattern searches -------------------------------------------------

def _closed_under_complement(patterns: PatternSet) -> bool:
    return all(tuple(1 - b for b in p) in patterns for p in patterns.patterns)


class _IntervalPatterns(_Problem):
    """Prefixes of ``[n]`` charged with pattern-matching APs that end at the newest element."""

    def __init__(self, n: int, patterns: PatternSet, bound: int, strict: bool,
                 tail_bounds: Sequence[int] | None = None):
        self.n = n
        # tail_bounds[m]: proved lower bound for any coloring of [m]
        self.tail = np.zeros(n + 1, dtype=np.int64) if tail_bounds is None \
            else np.asarray(tail_bounds[: n + 1], dtype=np.int64)
        self.patterns = patterns
        self.table = patterns.lookup_table()
        self.complement = _closed_under_complement(patterns)
        self.bound = bound
        self.strict = strict
        self.best_leaf: tuple[int, int] | None = None
        self.first_by_level: dict[int, int] = {}

    def meta(self) -> dict:
        return {"kind": "interval-patterns", "n": self.n, "k": self.patterns.k,
                "patterns": sorted("".join(map(str, p)) for p in self.patterns.patterns),
                "bound": int(self.bound), "strict": self.strict,
                "best_leaf": None if self.best_leaf is None else list(self.best_leaf),
                "first": {str(lv): x for lv, x in self.first_by_level.items()}}

    def step(self, f: _Frontier) -> _Frontier:
        c = _children(f)
        v = f.level
        k = self.patterns.k
        for d in range(1, v // (k - 1) + 1):
            code = np.zeros(len(c), dtype=np.uint64)
            for j in range(k):
                pos = v - (k - 1 - j) * d
                word, pos = (c.lsb, pos) if pos < _LO_BITS else (c.hi, pos - _LO_BITS)
                code |= ((word >> np.uint64(pos)) & _ONE) << np.uint64(j)
            c.partial += self.table[code.astype(np.int64)]
        projected = c.partial + self.tail[self.n - c.level]
        c = c.take(projected < self.bound if self.strict else projected <= self.bound)
        if self.complement and c.level == 1:
            c = c.take(c.lsb == 0)
        if len(c) and c.level <= _WORD:
            sel = c.partial == 0
            if sel.any():
                lex = int(c.msb[sel].min())
                prev = self.first_by_level.get(c.level)
                if prev is None or lex < prev:
                    self.first_by_level[c.level] = lex
        return c

    def collect(self, f: _Frontier) -> None:
        i = int(np.argmin(f.partial))
        p = int(f.partial[i])
        if self.best_leaf is None or p < self.best_leaf[1]:
            self.best_leaf = (f.value(i), p)
            if self.strict:
                self.bound = p


def _msb_to_coloring(msb: int, n: int) -> Coloring:
    return Coloring(tuple((msb >> (n - 1 - v)) & 1 for v in range(n)), GroupKind.INTERVAL)


def pattern_free_max_interval(patterns: PatternSet = FRAME_PATTERNS, n_limit: int = 46, *,
                              max_frontier: int = 1 << 20, budget: Budget | None = None,
                              checkpoint: str | None = None,
                              resume: bool = False) -> dict[int, PatternSearchReport]:
    """For every ``n <= n_limit``, decide whether some coloring of ``[n]`` avoids ``patterns``.

    A prefix is dropped as soon as its newest element completes an AP whose
    colours lie in ``patterns``; the surviving prefixes of length ``n`` are
    exactly the pattern-free colorings of ``[n]`` (one per complement pair when
    the set is closed under complement). Witnesses are lexicographically least.
    """
    if n_limit > _WORD:
        raise SearchCapExceeded(f"n_limit must be at most {_WORD}")
    prob = _IntervalPatterns(n_limit, patterns, 0, strict=False)
    pending, nodes = [_root()], 0
    if resume and checkpoint and os.path.exists(checkpoint):
        meta, pending = read_checkpoint(checkpoint)
        if meta.get("kind") != "interval-patterns" or meta.get("n") != n_limit:
            raise ValueError("checkpoint belongs to a different search")
        nodes = meta.get("nodes", 0)
        prob.first_by_level.update({int(k): v for k, v in meta.get("first", {}).items()})
    nodes, left = _drive(prob, pending, max_frontier=max_frontier, budget=budget,
                         checkpoint=checkpoint, nodes=nodes)
    exhausted = bool(left)
    out = {}
    for n in range(1, n_limit + 1):
        if n in prob.first_by_level:
            w = _msb_to_coloring(prob.first_by_level[n], n)
            out[n] = PatternSearchReport(n, patterns, witness=w, min_count=0,
                                         lower_bound_proved=0, nodes_explored=nodes)
        else:
            out[n] = PatternSearchReport(n, patterns,
                                         lower_bound_proved=None if exhausted else 1,
                                         budget_exhausted=exhausted, nodes_explored=nodes)
    return out


def min_pattern_count_interval(n: int, patterns: PatternSet = FRAME_PATTERNS,
                               budget: Budget | None = None, *, max_frontier: int = 1 << 18,
                               tail_bounds: Sequence[int] | None = None,
                               upper_bound: tuple[int, int] | None = None,
                               checkpoint: str | None = None,
                               resume: bool = False) -> PatternSearchReport:
    """Branch-and-bound minimum number of pattern-matching increasing APs in ``[n]``.

    A prefix of length ``L`` is cut once its count plus the proved minimum
    for ``[n - L]`` (the untouched suffix holds at least that many matches)
    reaches the incumbent. ``tail_bounds`` supplies those minima; when omitted
    they are computed for every smaller length first, see
    :func:`pattern_count_minima`.

    When the budget runs out the report carries the best proved lower bound
    and ``budget_exhausted=True``.
    """
    if n > _INTERVAL_MAX:
        raise SearchCapExceeded(f"n must be at most {_INTERVAL_MAX}")
    if tail_bounds is None:
        reports = pattern_count_minima(n - 1, patterns, budget) if n > 1 else []
        tail_bounds = [0] + [r.lower_bound_proved or 0 for r in reports]
        if reports and reports[-1].witness is not None and upper_bound is None:
            upper_bound = _extend_upper_bound(reports[-1].witness, patterns)
    tail_bounds = list(tail_bounds) + [0] * max(0, n + 1 - len(tail_bounds))
    if upper_bound is None:
        upper_bound = _pattern_upper_bound(n, patterns)
    # strict pruning: only strictly better completions survive
    prob = _IntervalPatterns(n, patterns, upper_bound[0] + 1, strict=True,
                             tail_bounds=tail_bounds)
    pending, nodes = [_root()], 0
    if resume and checkpoint and os.path.exists(checkpoint):
        meta, pending = read_checkpoint(checkpoint)
        if meta.get("kind") != "interval-patterns" or meta.get("n") != n:
            raise ValueError("checkpoint belongs to a different search")
        prob.bound = meta["bound"]
        nodes = meta.get("nodes", 0)
        if meta.get("best_leaf"):
            prob.best_leaf = tuple(meta["best_leaf"])
    nodes, left = _drive(prob, pending, max_frontier=max_frontier, budget=budget,
                         checkpoint=checkpoint, nodes=nodes)
    if prob.best_leaf is not None:
        witness = Coloring(_bits_of(prob.best_leaf[0], n), GroupKind.INTERVAL)
        best = prob.best_leaf[1]
    else:
        witness = Coloring(_bits_of(upper_bound[1], n), GroupKind.INTERVAL)
        best = upper_bound[0]
    if left:
        pending_low = min(int((f.partial + prob.tail[n - f.level]).min()) for f in left if len(f))
        lower = max(min(best, pending_low), tail_bounds[n - 1] if n > 1 else 0)
        return PatternSearchReport(n, patterns, witness=witness, min_count=None,
                                   lower_bound_proved=lower, budget_exhausted=True,
                                   nodes_explored=nodes)
    return PatternSearchReport(n, patterns, witness=witness, min_count=best,
                               lower_bound_proved=best, nodes_explored=nodes)


def pattern_count_minima(n_max: int, patterns: PatternSet = FRAME_PATTERNS,
                         budget: Budget | None = None) -> list[PatternSearchReport]:
    """Minimum pattern count for ``[1], [2], ..., [n_max]``, each search seeded with the earlier minima.

    ``budget`` applies to each length separately. After the first length
    whose search is cut short, later reports only carry lower bounds.
    """
    reports: list[PatternSearchReport] = []
    tail = [0]
    for m in range(1, n_max + 1):
        ub = _extend_upper_bound(reports[-1].witness, patterns) if reports else None
        rep = min_pattern_count_interval(m, patterns, budget, tail_bounds=tail,
                                         upper_bound=ub)
        reports.append(rep)
        # a coloring of [m] contains one of [m - 1]
        tail.append(max(rep.lower_bound_proved or 0, tail[-1]))
    return reports


def _extend_upper_bound(witness: Coloring, patterns: PatternSet) -> tuple[int, int]:
    best = None
    for bit in (0, 1):
        c = Coloring(witness.bits + (bit,), GroupKind.INTERVAL)
        val = count_frame_patterns(c, patterns)
        if best is None or val < best[0]:
            best = (val, c.to_int())
    return best


def _pattern_upper_bound(n: int, patterns: PatternSet, restarts: int = 20,
                         seed: int = 0) -> tuple[int, int]:
    """Single-flip descent from random colorings of ``[n]``; returns (count, coloring int)."""
    rng = np.random.default_rng(seed)
    best = None
    for _ in range(restarts):
        bits = list(int(b) for b in rng.integers(0, 2, n))
        cur = count_frame_patterns(Coloring(tuple(bits), GroupKind.INTERVAL), patterns)
        improved = True
        while improved:
            improved = False
            for v in range(n):
                bits[v] ^= 1
                val = count_frame_patterns(Coloring(tuple(bits), GroupKind.INTERVAL), patterns)
                if val < cur:
                    cur, improved = val, True
                else:
                    bits[v] ^= 1
        x = sum(b << v for v, b in enumerate(bits))
        if best is None or cur < best[0]:
            best = (cur, x)
    return best
