"""Enumeration of minimal (best-approximation) integer points.

A sequence (x_i) in an approximation set S is minimal for a target xi when

    (a) |x_0| < |x_1| < ...            (Euclidean norms strictly increase)
    (b) L(x_0) > L(x_1) > ...          (errors strictly decrease)
    (c) no nonzero z in S with |z| < |x_{i+1}| has L(z) < L(x_i),

together with the start convention: the sequence begins at the canonical
point of smallest norm achieving the minimal L among nonzero members of S of
that norm, ties in norm broken lexicographically.

The fast enumerator scans x_0 = 1, 2, ...: once the running record satisfies
L < |xi_0| / 2, any further record-beater must have each x_k within 1/2 of
(xi_k/xi_0) x_0, so only the floor/ceil (nearest-allowed) values per
coordinate can compete.  The stretch before that bound, and all explicit
sublattice sets, use bounded brute force.  Two independent cross-checks are
kept: a literal scan of every canonical point (small X only) and a windowed
scan whose per-coordinate windows are sized by the first record, which
provably contain every point able to beat any later record.

All record comparisons are certified: branch values are tracked symbolically
(so exact ties between branches are recognized, not fought numerically) and
numerically as scaled-integer enclosures with doubling precision.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Iterable, Optional, Sequence, Union

from . import model, rigorous
from .errors import (BeyondCertifiedRange, DependentCoordinates, DomainError,
                     EmptySet, TieUnresolved)
from .model import ApproxSet, CongruenceSet, FullLattice, IntegerPoint, Sublattice, TargetPoint
from .rigorous import RigorousReal

DEFAULT_ENUM_CAP = 4096
_BASE_BITS = 64

INFINITE = math.inf  # envelope value when no point of the set is in range yet


# ---------------------------------------------------------------------------
# certified comparison of approximation errors

def _abs_iv(lo: int, hi: int) -> tuple[int, int]:
    if lo >= 0:
        return lo, hi
    if hi <= 0:
        return -hi, -lo
    return 0, max(-lo, hi)


def _scaled(m: int, lo: int, hi: int) -> tuple[int, int]:
    return (m * lo, m * hi) if m >= 0 else (m * hi, m * lo)


class _Comparator:
    """Certified three-way comparison of L values via symbolic branch keys.

    A branch |xi_0 x_k - xi_k x_0| is keyed so that equal keys mean exactly
    equal real values:

      ("q", f)            both coordinates exact rationals; value is f
      ("r", m)            x_0 = 0; value is m * |xi_0|
      ("i", k, x_k, x_0)  generic branch, sign-normalized to x_0 > 0

    Under Q-linear independence of the target coordinates, distinct keys give
    distinct values, so escalation terminates; an unresolved overlap at the
    cap signals an insufficient cap or dependent coordinates.
    """

    def __init__(self, target: TargetPoint, cap: int = DEFAULT_ENUM_CAP):
        self.target = target
        self.cap = cap
        self.n = target.n
        self.exact = target.exact_values()
        self.sat = target.saturation_flags()
        self._cache: dict[tuple, tuple[int, int, bool]] = {}

    def keys(self, coords: Sequence[int]) -> tuple:
        x0 = coords[0]
        ks = []
        for k in range(1, self.n + 1):
            if self.exact[0] is not None and self.exact[k] is not None:
                f = abs(self.exact[0] * coords[k] - self.exact[k] * x0)
                ks.append(("q", f))
            elif x0 == 0:
                ks.append(("r", abs(coords[k])))
            else:
                xk, x0n = coords[k], x0
                if x0n < 0:
                    xk, x0n = -xk, -x0n
                ks.append(("i", k, xk, x0n))
        ks = tuple(dict.fromkeys(ks))
        if all(key[0] == "q" and key[1] == 0 for key in ks):
            raise DependentCoordinates(
                f"L({tuple(coords)}) = 0 exactly: target coordinates are dependent"
            )
        return ks

    def _key_interval(self, key: tuple, bits: int) -> tuple[int, int, bool]:
        cached = self._cache.get((key, bits))
        if cached is not None:
            return cached
        snap = self.target.snapshot(bits)
        if key[0] == "q":
            f = key[1]
            lo = (f.numerator << bits) // f.denominator
            hi = -((-f.numerator << bits) // f.denominator)
            out = (lo, hi, True)
        elif key[0] == "r":
            zlo, zhi = _abs_iv(*snap[0])
            out = (key[1] * zlo, key[1] * zhi, self.sat[0])
        else:
            _, k, xk, x0 = key
            alo, ahi = _scaled(xk, *snap[0])
            blo, bhi = _scaled(x0, *snap[k])
            lo, hi = _abs_iv(alo - bhi, ahi - blo)
            out = (lo, hi, self.sat[0] and self.sat[k])
        if len(self._cache) < 250_000:
            self._cache[(key, bits)] = out
        return out

    def l_interval(self, keys: tuple, bits: int) -> tuple[int, int, bool]:
        """Scaled-integer enclosure of max over branches, at scale 2^bits."""
        lo = hi = 0
        sat = True
        first = True
        for key in keys:
            klo, khi, ksat = self._key_interval(key, bits)
            if first:
                lo, hi, sat, first = klo, khi, ksat, False
            else:
                lo, hi, sat = max(lo, klo), max(hi, khi), sat and ksat
        return lo, hi, sat

    def _check_zero(self, keys: tuple, hi: int, lo: int, sat: bool, point) -> None:
        if hi == 0 or (sat and lo <= 0):
            raise DependentCoordinates(
                f"L enclosure of {point} cannot be separated from zero: "
                "target coordinates are dependent (or data precision is exhausted)"
            )

    def compare(self, a_keys: tuple, b_keys: tuple,
                a_point=None, b_point=None) -> int:
        """-1, 0, +1 for L(a) <, ==, > L(b); raises TieUnresolved at the cap."""
        if a_keys == b_keys:
            return 0
        bits = _BASE_BITS
        while True:
            a = [self._key_interval(k, bits) for k in a_keys]
            b = [self._key_interval(k, bits) for k in b_keys]
            alo = max(v[0] for v in a)
            ahi = max(v[1] for v in a)
            blo = max(v[0] for v in b)
            bhi = max(v[1] for v in b)
            asat = all(v[2] for v in a)
            bsat = all(v[2] for v in b)
            self._check_zero(a_keys, ahi, alo, asat, a_point)
            self._check_zero(b_keys, bhi, blo, bsat, b_point)
            if ahi < blo:
                return -1
            if bhi < alo:
                return 1
            amax = [k for k, v in zip(a_keys, a) if v[1] >= alo]
            bmax = [k for k, v in zip(b_keys, b) if v[1] >= blo]
            if len(amax) == 1 and len(bmax) == 1 and amax[0] == bmax[0]:
                return 0
            if bits >= self.cap or (asat and bsat):
                raise TieUnresolved(
                    f"L values of {a_point} and {b_point} remain indistinguishable "
                    f"at {bits} bits: raise the cap or check the coordinates for "
                    "rational dependence"
                )
            bits = min(bits * 2, self.cap)


# ---------------------------------------------------------------------------
# sequence containers

@dataclass(frozen=True)
class MinimalPointEntry:
    index: int
    point: IntegerPoint
    norm_sq: int
    x_value: RigorousReal
    l_value: RigorousReal
    branch_keys: tuple = field(repr=False)


@dataclass
class MinimalPointSequence:
    target: TargetPoint
    approx_set: ApproxSet
    x_max: Fraction
    cap: int
    entries: list[MinimalPointEntry]
    norm_sq_max: int

    def __len__(self) -> int:
        return len(self.entries)

    def points(self) -> list[tuple[int, ...]]:
        return [e.point.coords for e in self.entries]


# ---------------------------------------------------------------------------
# candidate generation

def _canonical_ball(ambient: int, norm_sq_max: int) -> Iterable[tuple[int, ...]]:
    """Every canonical nonzero integer tuple with squared norm <= norm_sq_max."""

    def rec(prefix: list[int], budget: int, started: bool):
        i = len(prefix)
        if i == ambient:
            if started:
                yield tuple(prefix)
            return
        r = isqrt(budget)
        lo = 0 if not started else -r
        for v in range(lo, r + 1):
            prefix.append(v)
            yield from rec(prefix, budget - v * v, started or v > 0)
            prefix.pop()

    yield from rec([], norm_sq_max, False)


def _sublattice_ball(lat: Sublattice, norm_sq_max: int) -> list[tuple[int, ...]]:
    """All canonical nonzero lattice members with squared norm <= norm_sq_max.

    Coefficients are boxed through the dual basis: c_i = u_i . x with
    u_i the rows of (B^T B)^{-1} B^T, so |c_i| <= ||u_i|| ||x||.
    """
    basis = lat.basis
    k, amb = len(basis), lat.ambient
    gram = [[sum(basis[i][t] * basis[j][t] for t in range(amb)) for j in range(k)]
            for i in range(k)]
    # invert the Gram matrix over Q
    aug = [[Fraction(gram[i][j]) for j in range(k)] +
           [Fraction(1 if j == i else 0) for j in range(k)] for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    ginv = [row[k:] for row in aug]
    seen = set()
    out = []
    ranges = []
    for i in range(k):
        u = [sum(ginv[i][j] * basis[j][t] for j in range(k)) for t in range(amb)]
        nsq = sum(v * v for v in u)
        bound = isqrt(int(nsq * norm_sq_max)) + 1
        ranges.append(range(-bound, bound + 1))
    for cs in product(*ranges):
        if all(c == 0 for c in cs):
            continue
        x = tuple(sum(cs[j] * basis[j][t] for j in range(k)) for t in range(amb))
        ns = sum(v * v for v in x)
        if ns == 0 or ns > norm_sq_max:
            continue
        pt = model.IntegerPoint.canonical(x).coords
        if pt not in seen:
            seen.add(pt)
            out.append(pt)
    return out


def _allowed_range(approx: ApproxSet, index: int, lo: int, hi: int) -> list[int]:
    """Allowed integer values in a window, widened to the nearest allowed
    neighbours outside it so that allowed-floor/allowed-ceil are always in."""
    if isinstance(approx, CongruenceSet) and index in approx.residues:
        m = approx.modulus
        a = lo
        while not approx.allowed(index, a):
            a -= 1
            if lo - a > m:
                return []
        b = hi
        while not approx.allowed(index, b):
            b += 1
            if b - hi > m:
                return []
        return [v for v in range(a, b + 1) if approx.allowed(index, v)]
    return list(range(lo, hi + 1))


def _x0_allowed(approx: ApproxSet, x0: int) -> bool:
    if isinstance(approx, CongruenceSet):
        return approx.allowed(0, x0)
    return True


def _scan_candidates(target: TargetPoint, approx: ApproxSet, norm_sq_max: int,
                     bits: int = _BASE_BITS, x0_lo: int = 1,
                     x0_hi: Optional[int] = None) -> Iterable[tuple[int, ...]]:
    """Pinned candidates for every x_0: per coordinate, the integers whose
    distance to (xi_k/xi_0) x_0 can be < 1/2 (floor/ceil, nearest allowed)."""
    n = target.n
    rsnap = target.ratio_snapshot(bits)
    x0_max = isqrt(norm_sq_max) if x0_hi is None else x0_hi
    for x0 in range(x0_lo, x0_max + 1):
        if not _x0_allowed(approx, x0):
            continue
        axes = []
        ok = True
        for k in range(1, n + 1):
            rlo, rhi = rsnap[k - 1]
            tlo = (rlo * x0) >> bits
            thi = (rhi * x0) >> bits
            vals = _allowed_range(approx, k, tlo, thi + 1)
            if not vals:
                ok = False
                break
            axes.append(vals)
        if not ok:
            continue
        budget = norm_sq_max - x0 * x0
        for rest in product(*axes):
            if sum(v * v for v in rest) <= budget:
                yield (x0,) + rest


# ---------------------------------------------------------------------------
# the record sweep

def _sweep(candidates: Iterable[tuple[int, ...]], comparator: _Comparator,
           target: TargetPoint, cap: int) -> list[MinimalPointEntry]:
    pts = sorted(set(candidates), key=lambda c: (sum(v * v for v in c), c))
    entries: list[MinimalPointEntry] = []
    rec_keys = None
    i = 0
    while i < len(pts):
        ns = sum(v * v for v in pts[i])
        j = i
        best = None  # (coords, keys)
        while j < len(pts) and sum(v * v for v in pts[j]) == ns:
            coords = pts[j]
            j += 1
            keys = comparator.keys(coords)
            if rec_keys is not None and comparator.compare(
                    keys, rec_keys, coords, "the current record") >= 0:
                continue
            if best is None or comparator.compare(keys, best[1], coords, best[0]) < 0:
                best = (coords, keys)
        if best is not None:
            coords, keys = best
            point = IntegerPoint.canonical(coords)
            entries.append(MinimalPointEntry(
                index=len(entries),
                point=point,
                norm_sq=ns,
                x_value=rigorous.sqrt(ns),
                l_value=model.l_value(target, point, cap),
                branch_keys=keys,
            ))
            rec_keys = keys
        i = j
    return entries


def _record_is_small(target: TargetPoint, entry: MinimalPointEntry, cap: int) -> bool:
    """Certified L(record) < |xi_0| / 2, the bound that pins later beaters."""
    half = abs(target.coords[0]) / 2
    return rigorous.compare(entry.l_value, half, cap) is rigorous.Comparison.LESS


_SCAN_SPAN = 1 << 16  # x_0 values scanned per streamed chunk


class _RecordFilter:
    """Certified integer pre-test against the current record.

    Both sides come from one dyadic ratio snapshot: a lower bound of
    max_k |x_k - (xi_k/xi_0) x_0| for the candidate, an upper bound of the
    same quantity for the record.  A candidate is dropped only when the
    bounds prove it strictly worse than the record, so the sweep result
    does not depend on the filter; it only keeps certain losers away from
    the comparator.
    """

    __slots__ = ("rsnap", "rec_hi")

    def __init__(self, target: TargetPoint):
        self.rsnap = target.ratio_snapshot(_BASE_BITS)
        self.rec_hi: Optional[int] = None

    def loses(self, coords: tuple[int, ...]) -> bool:
        rec_hi = self.rec_hi
        if rec_hi is None:
            return False
        x0 = coords[0]
        k = 1
        for rlo, rhi in self.rsnap:
            xkb = coords[k] << _BASE_BITS
            if xkb - rhi * x0 > rec_hi or rlo * x0 - xkb > rec_hi:
                return True
            k += 1
        return False

    def set_record(self, coords: tuple[int, ...]) -> None:
        x0 = coords[0]
        worst = 0
        k = 1
        for rlo, rhi in self.rsnap:
            xkb = coords[k] << _BASE_BITS
            hi_k = max(abs(xkb - rlo * x0), abs(xkb - rhi * x0))
            if hi_k > worst:
                worst = hi_k
            k += 1
        self.rec_hi = worst


def _stream_entries(target: TargetPoint, approx_set: ApproxSet,
                    norm_sq_max: int, comparator: _Comparator, cap: int,
                    base_set: set, bound_sq: int,
                    threads: int) -> list[MinimalPointEntry]:
    """Scan x_0 spans in order, filter against the running record, and sweep
    complete norm groups off a heap.

    Candidates from a span starting at a have norm >= a, so every heap group
    below a*a is complete before the span merges; memory stays at one span
    plus the few candidates the record cannot already reject.  Processing
    order (and hence the result) matches a single sweep of all candidates
    sorted by (norm, coordinates).
    """
    filt = _RecordFilter(target)
    entries: list[MinimalPointEntry] = []
    rec_keys = None
    heap = [(sum(v * v for v in c), c) for c in base_set]
    heapq.heapify(heap)

    def sweep_below(limit: int) -> None:
        nonlocal rec_keys
        while heap and heap[0][0] < limit:
            ns = heap[0][0]
            best = None
            while heap and heap[0][0] == ns:
                coords = heapq.heappop(heap)[1]
                if filt.loses(coords):
                    continue
                keys = comparator.keys(coords)
                if rec_keys is not None and comparator.compare(
                        keys, rec_keys, coords, "the current record") >= 0:
                    continue
                if best is None or comparator.compare(keys, best[1],
                                                      coords, best[0]) < 0:
                    best = (coords, keys)
            if best is not None:
                coords, keys = best
                point = IntegerPoint.canonical(coords)
                entries.append(MinimalPointEntry(
                    index=len(entries),
                    point=point,
                    norm_sq=ns,
                    x_value=rigorous.sqrt(ns),
                    l_value=model.l_value(target, point, cap),
                    branch_keys=keys,
                ))
                rec_keys = keys
                filt.set_record(point.coords)

    x0_max = isqrt(norm_sq_max)
    spans = [(lo, min(lo + _SCAN_SPAN - 1, x0_max))
             for lo in range(1, x0_max + 1, _SCAN_SPAN)]

    def scan(span: tuple[int, int]) -> list[tuple[int, ...]]:
        return list(_scan_candidates(target, approx_set, norm_sq_max,
                                     x0_lo=span[0], x0_hi=span[1]))

    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        pending: deque = deque()
        next_up = 0
        for span in spans:
            if pool is not None:
                while next_up < len(spans) and len(pending) < threads:
                    pending.append(pool.submit(scan, spans[next_up]))
                    next_up += 1
                got = pending.popleft().result()
            else:
                got = scan(span)
            sweep_below(span[0] * span[0])
            for coords in got:
                ns = sum(v * v for v in coords)
                if ns <= bound_sq and coords in base_set:
                    continue
                if filt.loses(coords):
                    continue
                heapq.heappush(heap, (ns, coords))
        sweep_below(norm_sq_max + 1)
    finally:
        if pool is not None:
            pool.shutdown()
    return entries


def _validate_x_max(x_max) -> tuple[Fraction, int]:
    x_max = Fraction(x_max)
    if x_max < 1:
        raise DomainError("x_max must be >= 1")
    norm_sq_max = (x_max.numerator ** 2) // (x_max.denominator ** 2)
    return x_max, norm_sq_max


def enumerate_minimal_points(target: TargetPoint, approx_set: ApproxSet,
                             x_max, cap: int = DEFAULT_ENUM_CAP,
                             threads: int = 1) -> MinimalPointSequence:
    """The minimal-point sequence of (target, S) for norms up to x_max.

    Deterministic in (target, S, x_max, cap).  threads > 1 scans x_0 spans
    ahead on a thread pool; spans merge in position order and the record
    filter only discards certified losers, so the result does not depend
    on thread count or completion order.  Raises EmptySet when S has no
    nonzero member in range, DependentCoordinates when an exactly-zero
    error is hit, TieUnresolved when a record comparison cannot be
    certified.
    """
    x_max, norm_sq_max = _validate_x_max(x_max)
    comparator = _Comparator(target, cap)

    if isinstance(approx_set, Sublattice):
        if approx_set.ambient != target.n + 1:
            raise DomainError("sublattice ambient dimension does not match target")
        cands = _sublattice_ball(approx_set, norm_sq_max)
        if not cands:
            raise EmptySet(f"no nonzero member of {approx_set!r} with norm <= {x_max}")
        entries = _sweep(cands, comparator, target, cap)
        return MinimalPointSequence(target, approx_set, x_max, cap, entries, norm_sq_max)

    # brute-force start region, grown until the record pins later candidates
    bound_sq = min(64, norm_sq_max)
    base: list[tuple[int, ...]] = []
    entries: list[MinimalPointEntry] = []
    while True:
        base = [c for c in _canonical_ball(target.n + 1, bound_sq)
                if approx_set.member(c)]
        entries = _sweep(base, comparator, target, cap)
        if entries and _record_is_small(target, entries[-1], cap):
            break
        if bound_sq >= norm_sq_max:
            if not entries:
                raise EmptySet(
                    f"no nonzero member of the approximation set with norm <= {x_max}"
                )
            return MinimalPointSequence(target, approx_set, x_max, cap,
                                        entries, norm_sq_max)
        bound_sq = min(bound_sq * 4, norm_sq_max)

    entries = _stream_entries(target, approx_set, norm_sq_max, comparator,
                              cap, set(base), bound_sq, threads)
    return MinimalPointSequence(target, approx_set, x_max, cap, entries, norm_sq_max)


# ---------------------------------------------------------------------------
# independent cross-checks

def brute_force_reference(target: TargetPoint, approx_set: ApproxSet,
                          x_max, cap: int = DEFAULT_ENUM_CAP) -> MinimalPointSequence:
    """Literal scan of every canonical point of norm <= x_max.  Small X only."""
    x_max, norm_sq_max = _validate_x_max(x_max)
    comparator = _Comparator(target, cap)
    cands = [c for c in _canonical_ball(target.n + 1, norm_sq_max)
             if approx_set.member(c)]
    if not cands:
        raise EmptySet(f"no nonzero member of the approximation set with norm <= {x_max}")
    entries = _sweep(cands, comparator, target, cap)
    return MinimalPointSequence(target, approx_set, x_max, cap, entries, norm_sq_max)


def _window_candidates(target: TargetPoint, approx_set: ApproxSet,
                       norm_sq_max: int, comparator: _Comparator) -> set[tuple[int, ...]]:
    """Candidate superset for the windowed scan.

    Any point that beats some record has L < L_start (the first record), hence
    every coordinate within |xi_0 x_k - xi_k x_0| <= L_start of the ray through
    the target.  For each x_0 in [0, x_max] the full such window is enumerated,
    so the set provably contains every record-beater; the complete
    smallest-norm group of S is included for the start convention.
    """
    x_max_str = f"{isqrt(norm_sq_max)}"
    bound_sq = 4
    first_group: list[tuple[int, ...]] = []
    while True:
        members = [c for c in _canonical_ball(target.n + 1, min(bound_sq, norm_sq_max))
                   if approx_set.member(c)]
        if members:
            ns0 = min(sum(v * v for v in c) for c in members)
            first_group = [c for c in members if sum(v * v for v in c) == ns0]
            break
        if bound_sq >= norm_sq_max:
            raise EmptySet(
                f"no nonzero member of the approximation set with norm <= {x_max_str}"
            )
        bound_sq = min(bound_sq * 4, norm_sq_max)

    start_keys = None
    for c in sorted(first_group):
        keys = comparator.keys(c)
        if start_keys is None or comparator.compare(keys, start_keys, c) < 0:
            start_keys = keys

    bits = _BASE_BITS
    ls_lo, ls_hi, _ = comparator.l_interval(start_keys, bits)
    snap = target.snapshot(bits)
    zlo, zhi = _abs_iv(*snap[0])
    if zlo <= 0:
        raise TieUnresolved("cannot bound |xi_0| away from zero for the window scan")
    margin = -(-ls_hi // zlo) + 1
    rsnap = target.ratio_snapshot(bits)

    cands = set(first_group)
    x0_max = isqrt(norm_sq_max)
    n = target.n
    for x0 in range(0, x0_max + 1):
        if x0 and not _x0_allowed(approx_set, x0):
            continue
        if x0 == 0:
            axes = [_allowed_range(approx_set, k, -margin, margin)
                    for k in range(1, n + 1)]
        else:
            axes = []
            for k in range(1, n + 1):
                rlo, rhi = rsnap[k - 1]
                tlo = (rlo * x0) >> bits
                thi = -((-rhi * x0) >> bits)
                axes.append(_allowed_range(approx_set, k, tlo - margin, thi + margin))
        if any(not a for a in axes):
            continue
        budget = norm_sq_max - x0 * x0
        for rest in product(*axes):
            if sum(v * v for v in rest) <= budget:
                c = (x0,) + rest
                if any(c):
                    cands.add(IntegerPoint.canonical(c).coords)
    return cands


def exhaustive_scan(target: TargetPoint, approx_set: ApproxSet,
                    x_max, cap: int = DEFAULT_ENUM_CAP) -> MinimalPointSequence:
    """Windowed exhaustive scan, independent of the record-pinning argument."""
    x_max, norm_sq_max = _validate_x_max(x_max)
    comparator = _Comparator(target, cap)
    if isinstance(approx_set, Sublattice):
        return brute_force_reference(target, approx_set, x_max, cap)
    cands = _window_candidates(target, approx_set, norm_sq_max, comparator)
    entries = _sweep(cands, comparator, target, cap)
    return MinimalPointSequence(target, approx_set, x_max, cap, entries, norm_sq_max)


# ---------------------------------------------------------------------------
# queries on a computed sequence

def envelope(seq: MinimalPointSequence, x) -> Union[RigorousReal, float]:
    """min L over nonzero members of S with norm <= x (INFINITE when none)."""
    x = Fraction(x)
    if x > seq.x_max:
        raise BeyondCertifiedRange(
            f"envelope queried at {x}, certified only up to {seq.x_max}"
        )
    return envelope_at_norm_sq(seq, x * x, _checked=False)


def envelope_at_norm_sq(seq: MinimalPointSequence, norm_sq,
                        _checked: bool = True) -> Union[RigorousReal, float]:
    """Envelope at norm sqrt(norm_sq): exact boundary form for integer points."""
    if _checked and norm_sq > seq.norm_sq_max:
        raise BeyondCertifiedRange(
            f"envelope queried at squared norm {norm_sq}, certified only up to "
            f"{seq.norm_sq_max}"
        )
    best = None
    for e in seq.entries:
        if e.norm_sq <= norm_sq:
            best = e
        else:
            break
    return INFINITE if best is None else best.l_value


@dataclass
class DirichletReport:
    n: int
    sup_value: float
    sup_upper: float
    at_index: Optional[int]
    values: list[float]


def dirichlet_check(seq: MinimalPointSequence) -> DirichletReport:
    """Empirical sup of X_{i+1}^(1/n) * L_i, the uniform-approximation gauge."""
    from .ivcalc import frac_enclosure, iv_pow, midpoint_float, rig_interval, upper

    n = seq.target.n
    values: list[float] = []
    sup_val, sup_up, arg = -math.inf, -math.inf, None
    for i in range(len(seq.entries) - 1):
        e, nxt = seq.entries[i], seq.entries[i + 1]
        li = rig_interval(e.l_value, 96)
        xi = iv_pow(frac_enclosure(nxt.norm_sq), Fraction(1, 2 * n))
        v = xi * li
        vf = midpoint_float(v)
        values.append(vf)
        if vf > sup_val:
            sup_val, sup_up, arg = vf, upper(v), i
    return DirichletReport(n=n, sup_value=sup_val, sup_upper=sup_up,
                           at_index=arg, values=values)


# ---------------------------------------------------------------------------
# CSV export

def write_csv(seq: MinimalPointSequence, fileobj) -> None:
    """Deterministic CSV: i, x_0..x_n, normSq, X, L, log10X, neg_log10L."""
    import csv

    from .reporting import format_significant

    n = seq.target.n
    w = csv.writer(fileobj, lineterminator="\n")
    w.writerow(["i"] + [f"x_{k}" for k in range(n + 1)]
               + ["normSq", "X", "L", "log10X", "neg_log10L"])
    for e in seq.entries:
        x_lo, x_hi, _ = rigorous.enclosure(e.x_value, 80)
        l_lo, l_hi, _ = rigorous.enclosure(e.l_value, 96)
        xf = (x_lo + x_hi) / 2
        lf = (l_lo + l_hi) / 2
        w.writerow(
            [e.index] + list(e.point.coords) + [
                e.norm_sq,
                format_significant(xf, 15),
                format_significant(lf, 15),
                format_significant(math.log10(e.norm_sq) / 2.0
                                   if e.norm_sq > 1 else 0.0, 15),
                format_significant(-math.log10(lf) if lf > 0 else math.inf, 15),
            ])


# ---------------------------------------------------------------------------
# property re-verification (used by tests and the acceptance gate)

def verify_properties(seq: MinimalPointSequence) -> None:
    """Re-check (a) and (b) on a computed sequence; raises AssertionError."""
    comparator = _Comparator(seq.target, seq.cap)
    for a, b in zip(seq.entries, seq.entries[1:]):
        assert a.norm_sq < b.norm_sq, "norms must strictly increase"
        assert comparator.compare(b.branch_keys, a.branch_keys,
                                  b.point.coords, a.point.coords) < 0, \
            "L values must strictly decrease"


def verify_annulus(seq: MinimalPointSequence, max_norm_sq: Optional[int] = None) -> int:
    """Property (c) by brute force: scan each annulus (X_i, X_{i+1}) for a
    point with L < L_i.  Returns the number of annuli checked."""
    comparator = _Comparator(seq.target, seq.cap)
    checked = 0
    limit = max_norm_sq if max_norm_sq is not None else seq.norm_sq_max
    for e, nxt in zip(seq.entries, seq.entries[1:]):
        if nxt.norm_sq > limit:
            break
        for c in _canonical_ball(seq.target.n + 1, nxt.norm_sq - 1):
            if sum(v * v for v in c) <= e.norm_sq:
                continue
            if not seq.approx_set.member(c):
                continue
            keys = comparator.keys(c)
            assert comparator.compare(keys, e.branch_keys, c, e.point.coords) >= 0, \
                f"point {c} violates minimality of {e.point.coords}"
        checked += 1
    return checked


def verify_minimality(seq: MinimalPointSequence) -> int:
    """Property (c) over the windowed candidate superset, which provably
    contains every potential violator.  Returns the number of points checked.

    A violator z has norm < X_{i+1} and L(z) < L_i for some i; since the L_i
    decrease, the binding comparison is against the first entry whose
    successor norm exceeds z (the L values only get smaller after it).
    """
    comparator = _Comparator(seq.target, seq.cap)
    if isinstance(seq.approx_set, Sublattice):
        cands = _sublattice_ball(seq.approx_set, seq.norm_sq_max)
    else:
        cands = _window_candidates(seq.target, seq.approx_set,
                                   seq.norm_sq_max, comparator)
    import bisect

    next_norms = [nxt.norm_sq for nxt in seq.entries[1:]]
    checked = 0
    for c in cands:
        if not seq.approx_set.member(c):
            continue
        ns = sum(v * v for v in c)
        i = bisect.bisect_right(next_norms, ns)
        if i >= len(next_norms):
            continue
        e = seq.entries[i]
        keys = comparator.keys(c)
        assert comparator.compare(keys, e.branch_keys, c, e.point.coords) >= 0, \
            f"point {c} violates minimality of {e.point.coords}"
        checked += 1
    return checked
