"""Exhaustive minimization of the Mahler measure over integral generators.

Two-phase method: a heuristic scan over the non-negative window
0 <= x_i <= A + D (cyclic) resp. 0 <= x_i <= l + m + n (biquadratic) yields
an upper bound L, and the coefficient box |x_1| <= 4L, |x_2| <= 4L/sqrt(D),
|x_3| <= 4L/rho, |x_4| <= 4L/sigma (with the analogous radical denominators
for biquadratic fields) is then exhausted.  The box is sound: every integral
generator with M <= L lies inside, because every conjugate of such a
generator has modulus at most L and each coordinate is recovered from signed
sums of conjugates.

The scans run on numpy float64 grids restricted to the exact integral
sublattice (residues mod 4 from the congruence cases); near-minimal
candidates are re-evaluated exactly at escalating precision before the
winner is chosen.  All pruning used by the engine is derived from sound
inequalities (M >= |alpha_1|, M >= |alpha_1|^2 for CM fields), so pruned and
unpruned scans return the same minimum; `brute_force_min` is the unpruned
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import floor, inf, sqrt

import numpy as np

from .exactfield import (
    FieldElement,
    basis_for,
    canonical_quarters,
    is_integral,
    is_primitive,
)
from .fields import IMAGINARY, REAL, BiquadraticField, CyclicQuarticField
from .measure import DEFAULT_CONTEXT, PrecisionContext, mahler_measure

Field = BiquadraticField | CyclicQuarticField

_TIE_REL = 1e-6      # float-scan net: keep everything this close to the minimum
_EXACT_REL = 1e-11   # refined measures closer than this count as a tie
_MAX_TIES = 512
_CHUNK = 1 << 21


@dataclass(frozen=True)
class SearchBox:
    """Per-coordinate absolute bounds for all integral generators with M <= limit."""

    limit: float
    bounds: tuple[int, int, int, int]


@dataclass(frozen=True)
class MinimizationResult:
    field: Field
    quarters: tuple[int, int, int, int]
    m_value: float
    scanned: int
    phase1_bound: float

    @property
    def element(self) -> FieldElement:
        return FieldElement.from_quarters(basis_for(self.field), self.quarters)


class _ScanData:
    """Float basis data and integral residue classes for one field."""

    def __init__(self, field: Field) -> None:
        self.field = field
        self.basis = basis_for(field)
        emb = self.basis.embeddings(64)
        mags = tuple(abs(complex(v)) for v in emb)
        self.mags = mags
        if field.kind == "cyclic":
            self.mode = "real4" if field.signature == REAL else "cm_cyc"
            self.w1 = mags[1]                      # sqrt(D)
            self.u2, self.u3 = mags[2], mags[3]    # |rho|, |sigma|
        elif field.signature == REAL:
            self.mode = "real4"
            self.w1 = mags[1]
            self.u2, self.u3 = mags[2], mags[3]
        else:
            self.mode = "cm_biq"
            self.w1, self.w2, self.w3 = mags[1], mags[2], mags[3]
        self.residues: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for r2, r3 in product(range(4), range(4)):
            allowed = []
            for r0, r1 in product(range(4), range(4)):
                u = FieldElement.from_quarters(self.basis, (r0, r1, r2, r3))
                if is_integral(u):
                    allowed.append((r0, r1))
            if allowed:
                self.residues[(r2, r3)] = allowed

    # scalar pair terms entering the conjugate formulas
    def pair_terms(self, y2: int, y3: int) -> tuple[float, float]:
        if self.mode == "real4":
            if self.field.kind == "cyclic":
                return y2 * self.u2 + y3 * self.u3, y2 * self.u3 - y3 * self.u2
            return y2 * self.u2 + y3 * self.u3, y2 * self.u2 - y3 * self.u3
        if self.mode == "cm_cyc":
            return y2 * self.u2 + y3 * self.u3, y2 * self.u3 - y3 * self.u2
        return y3 * self.w3, y2 * self.w2  # cm_biq: (real shift, imaginary shift)

    def pair_feasible(self, y2: int, y3: int, bound: float) -> bool:
        """False only when every point with this (y2, y3) has M > bound."""
        t1, t2 = self.pair_terms(y2, y3)
        cap = 4.0 * bound + 1e-9
        if self.mode == "real4":
            return abs(t1) <= cap and abs(t2) <= cap
        cap2 = 16.0 * bound + 1e-9
        if self.mode == "cm_cyc":
            return t1 * t1 <= cap2 and t2 * t2 <= cap2
        return t1 * t1 + t2 * t2 <= cap2

    def measure_grid(self, x0: np.ndarray, x1: np.ndarray, y2: int, y3: int) -> np.ndarray:
        """M on the (x0, x1) plane with pair coordinates (y2, y3) fixed."""
        t1, t2 = self.pair_terms(y2, y3)
        col = x0[:, None].astype(np.float64)
        row = x1[None, :].astype(np.float64)
        if self.mode == "real4":
            u = col + self.w1 * row
            v = col - self.w1 * row
            m = np.maximum(np.abs(u + t1), 4.0)
            m *= np.maximum(np.abs(u - t1), 4.0)
            m *= np.maximum(np.abs(v + t2), 4.0)
            m *= np.maximum(np.abs(v - t2), 4.0)
            return m / 256.0
        if self.mode == "cm_cyc":
            u = col + self.w1 * row
            v = col - self.w1 * row
            m1 = (u * u + t1 * t1) / 16.0
            m2 = (v * v + t2 * t2) / 16.0
            return np.maximum(m1, 1.0) * np.maximum(m2, 1.0)
        a = col + t1
        b = self.w1 * row + t2
        m1 = (a * a + b * b) / 16.0
        a = col - t1
        b = self.w1 * row - t2
        m2 = (a * a + b * b) / 16.0
        return np.maximum(m1, 1.0) * np.maximum(m2, 1.0)

    def primitivity(self, y2: int, y3: int) -> str:
        """'skip' | 'all' | 'y1_nonzero' for the plane at this pair."""
        if self.field.kind == "cyclic":
            return "skip" if y2 == 0 and y3 == 0 else "all"
        if y2 != 0 and y3 != 0:
            return "all"
        if y2 == 0 and y3 == 0:
            return "skip"
        return "y1_nonzero"


def search_box(field: Field, limit: float) -> SearchBox:
    """Sound coefficient box containing every integral generator with M <= limit."""
    if limit < 1.0:
        raise ValueError("the box limit must be at least 1")
    sd = _ScanData(field)
    cap = 4.0 * limit * (1.0 + 1e-12) + 1e-9
    m1, m2, m3 = sd.mags[1], sd.mags[2], sd.mags[3]
    if field.kind == "cyclic" and field.signature == IMAGINARY:
        # the C4 conjugation rotates (x3, x4); use the rotation-safe bound
        w = cap * (m2 + m3) / (m2 * m2 + m3 * m3)
        bounds = (cap, cap / m1, w, w)
    else:
        bounds = (cap, cap / m1, cap / m2, cap / m3)
    return SearchBox(limit=float(limit), bounds=tuple(int(floor(b)) for b in bounds))


def _aligned(lo: int, hi: int, residue: int) -> np.ndarray:
    start = lo + ((residue - lo) % 4)
    if start > hi:
        return np.empty(0, dtype=np.int64)
    return np.arange(start, hi + 1, 4, dtype=np.int64)


class _Collector:
    """Tracks the running minimum and all candidates within the tie margin."""

    def __init__(self) -> None:
        self.best = inf
        self.ties: list[tuple[float, tuple[int, int, int, int]]] = []
        self.scanned = 0

    def offer_grid(self, m: np.ndarray, x0: np.ndarray, x1: np.ndarray,
                   y2: int, y3: int) -> None:
        self.scanned += m.size
        if m.size == 0:
            return
        gmin = float(m.min())
        if gmin < self.best:
            self.best = gmin
        lim = self.best * (1.0 + _TIE_REL)
        if gmin > lim:
            return
        idx = np.nonzero(m <= lim)
        for i, j in zip(*idx):
            self.ties.append((float(m[i, j]), (int(x0[i]), int(x1[j]), y2, y3)))
        if len(self.ties) > _MAX_TIES:
            self._shrink()

    def _shrink(self) -> None:
        lim = self.best * (1.0 + _TIE_REL)
        self.ties = [t for t in self.ties if t[0] <= lim]
        if len(self.ties) > _MAX_TIES:
            self.ties.sort()
            self.ties = self.ties[:_MAX_TIES]

    def final_ties(self) -> list[tuple[int, int, int, int]]:
        lim = self.best * (1.0 + _TIE_REL)
        return [c for v, c in self.ties if v <= lim]


def _scan_plane(sd: _ScanData, coll: _Collector, y2: int, y3: int,
                x0_lo: int, x0_hi: int, x1_lo: int, x1_hi: int,
                prune_bound: float | None) -> None:
    prim = sd.primitivity(y2, y3)
    if prim == "skip":
        return
    residues = sd.residues.get((y2 % 4, y3 % 4))
    if not residues:
        return
    if prune_bound is not None:
        b = min(prune_bound, coll.best)
        if not sd.pair_feasible(y2, y3, b):
            return
        t1, t2 = sd.pair_terms(y2, y3)
        if sd.mode == "real4":
            lim = 4.0 * b + 1e-9
            x0_lo, x0_hi = max(x0_lo, -int(lim) - 1), min(x0_hi, int(lim) + 1)
            w_lim = int(lim / sd.w1) + 1
            x1_lo, x1_hi = max(x1_lo, -w_lim), min(x1_hi, w_lim)
        elif sd.mode == "cm_cyc":
            lim = sqrt(max(16.0 * b - min(t1 * t1, t2 * t2), 0.0)) + 1e-9
            x0_lo, x0_hi = max(x0_lo, -int(lim) - 1), min(x0_hi, int(lim) + 1)
            w_lim = int(lim / sd.w1) + 1
            x1_lo, x1_hi = max(x1_lo, -w_lim), min(x1_hi, w_lim)
        else:
            s = sqrt(max(16.0 * b, 0.0))
            lim0 = s - abs(t1) + 1e-9
            lim1 = (s - abs(t2)) / sd.w1 + 1e-9
            x0_lo, x0_hi = max(x0_lo, -int(lim0) - 1), min(x0_hi, int(lim0) + 1)
            x1_lo, x1_hi = max(x1_lo, -int(lim1) - 1), min(x1_hi, int(lim1) + 1)
    if x0_lo > x0_hi or x1_lo > x1_hi:
        return
    for r0, r1 in residues:
        x0 = _aligned(x0_lo, x0_hi, r0)
        x1 = _aligned(x1_lo, x1_hi, r1)
        if x0.size == 0 or x1.size == 0:
            continue
        if prim == "y1_nonzero":
            x1 = x1[x1 != 0]
            if x1.size == 0:
                continue
        step = max(1, _CHUNK // max(x1.size, 1))
        for i in range(0, x0.size, step):
            block = x0[i:i + step]
            m = sd.measure_grid(block, x1, y2, y3)
            coll.offer_grid(m, block, x1, y2, y3)


def _refine(field: Field, candidates, ctx: PrecisionContext):
    """Exact measures for candidate quarters; returns (winner, value, by_coords)."""
    basis = basis_for(field)
    seen = set()
    refined = []
    for q in candidates:
        canon = canonical_quarters(field.kind, q)
        if canon in seen:
            continue
        seen.add(canon)
        u = FieldElement.from_quarters(basis, canon)
        if not (is_integral(u) and is_primitive(u)):
            raise AssertionError(f"scan produced a non-generator candidate {q}")
        refined.append((mahler_measure(u, ctx), canon))
    if not refined:
        return None
    best = min(v for v, _ in refined)
    group = [(v, c) for v, c in refined if v <= best * (1.0 + _EXACT_REL)]
    value, winner = min(group, key=lambda t: t[1])
    return winner, value


def _phase1_window(field: Field) -> int:
    if field.kind == "cyclic":
        return abs(field.A) + field.D
    return field.l + field.m + field.n


def _scan_nonneg_window(sd: _ScanData, hi: int, prune: bool) -> _Collector:
    coll = _Collector()
    # small seed pass so the pruned sweep starts with a finite incumbent
    if prune and hi > 8:
        seed = _Collector()
        for y2 in range(0, 9):
            for y3 in range(0, 9):
                _scan_plane(sd, seed, y2, y3, 0, 8, 0, 8, None)
        coll.best = seed.best
        coll.ties = seed.ties
        coll.scanned = seed.scanned
    for y2 in range(0, hi + 1):
        for y3 in range(0, hi + 1):
            _scan_plane(sd, coll, y2, y3, 0, hi, 0, hi,
                        coll.best if (prune and coll.best < inf) else None)
    return coll


def min_mahler(field: Field, ctx: PrecisionContext = DEFAULT_CONTEXT) -> MinimizationResult:
    """M(O_K) with minimizing generator, by heuristic window plus sound box."""
    sd = _ScanData(field)
    hi = _phase1_window(field)
    coll1 = _scan_nonneg_window(sd, hi, prune=True)
    guard = 0
    while not coll1.ties:
        # heuristic window too small to contain any generator; widen it
        hi += 4
        guard += 1
        if guard > 8:
            raise RuntimeError(f"no integral generator found near the window for {field}")
        coll1 = _scan_nonneg_window(sd, hi, prune=True)
    phase1 = _refine(field, coll1.final_ties(), ctx)
    assert phase1 is not None
    limit = max(phase1[1], 1.0)

    box = search_box(field, limit)
    b0, b1, b2, b3 = box.bounds
    coll = _Collector()
    coll.best = limit * (1.0 + 1e-9)
    if field.kind == "cyclic":
        hi23 = max(b2, b3)
        for y2 in range(1, hi23 + 1):
            for y3 in range(0, hi23 + 1):
                _scan_plane(sd, coll, y2, y3, 1, b0, -b1, b1, coll.best)
                _scan_plane(sd, coll, y2, y3, 0, 0, 0, b1, coll.best)
    else:
        for y2 in range(0, b2 + 1):
            for y3 in range(0, b3 + 1):
                _scan_plane(sd, coll, y2, y3, -b0, b0, 0, b1, coll.best)
    pool = coll.final_ties() + [phase1[0]]
    winner, value = _refine(field, pool, ctx)
    return MinimizationResult(
        field=field,
        quarters=winner,
        m_value=value,
        scanned=coll1.scanned + coll.scanned,
        phase1_bound=limit,
    )


def brute_force_min(field: Field, box: SearchBox,
                    ctx: PrecisionContext = DEFAULT_CONTEXT) -> MinimizationResult:
    """Oracle: plain scan of the whole box, no pruning, no symmetry reduction."""
    sd = _ScanData(field)
    b0, b1, b2, b3 = box.bounds
    coll = _Collector()
    for y2 in range(-b2, b2 + 1):
        for y3 in range(-b3, b3 + 1):
            _scan_plane(sd, coll, y2, y3, -b0, b0, -b1, b1, None)
    refined = _refine(field, coll.final_ties(), ctx)
    if refined is None:
        raise ValueError("the box contains no integral generator")
    winner, value = refined
    return MinimizationResult(
        field=field,
        quarters=winner,
        m_value=value,
        scanned=coll.scanned,
        phase1_bound=box.limit,
    )


def minimize_over_fields(fields, ctx: PrecisionContext = DEFAULT_CONTEXT,
                         processes: int = 1) -> list[MinimizationResult]:
    """min_mahler over many fields, optionally with a worker pool, sorted output."""
    if processes > 1:
        import multiprocessing as mp

        with mp.Pool(processes) as pool:
            results = pool.starmap(min_mahler, [(f, ctx) for f in fields], chunksize=1)
    else:
        results = [min_mahler(f, ctx) for f in fields]
    return sorted(results, key=lambda r: (r.field.disc, r.field.key))
