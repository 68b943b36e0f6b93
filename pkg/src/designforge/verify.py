"""Verifiers: independent validity checks for every design kind.

Each verifier re-derives validity from the definition of the object, not from
the way it was constructed.  Where the definition admits two genuinely
different checks (difference counting vs. full development), both run and
both must pass; the pair acts as a cross-check on the verifier itself.

Violation categories used in reports:
  missing-pair, repeated-pair, forbidden-pair, wrong-count,
  bad-orbit-length, correlation-exceeded, starter-coverage, starter-sums,
  malformed
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import (
    BaseBlock,
    Design,
    DifferenceProfile,
    GridPoint,
    Kind,
    delta_of_block,
    develop_orbit,
    expected_base_block_count,
    holey_difference_set,
    orbit_length,
)

MAX_LISTED = 20  # cap on individually listed violations per report


@dataclass(frozen=True)
class Violation:
    category: str
    detail: str


@dataclass
class VerificationReport:
    valid: bool
    checked: str = ""
    violations: list[Violation] = field(default_factory=list)
    suppressed: int = 0  # violations beyond MAX_LISTED

    def summary(self) -> str:
        if self.valid:
            return f"valid ({self.checked})"
        head = "; ".join(f"{v.category}: {v.detail}" for v in self.violations[:5])
        more = self.suppressed + max(0, len(self.violations) - 5)
        tail = f" (+{more} more)" if more else ""
        return f"INVALID ({self.checked}): {head}{tail}"


class _Collector:
    def __init__(self):
        self.items: list[Violation] = []
        self.suppressed = 0

    def add(self, category: str, detail: str) -> None:
        if len(self.items) < MAX_LISTED:
            self.items.append(Violation(category, detail))
        else:
            self.suppressed += 1

    def report(self, checked: str) -> VerificationReport:
        return VerificationReport(valid=not self.items and not self.suppressed,
                                  checked=checked,
                                  violations=self.items,
                                  suppressed=self.suppressed)


def _check_block_shape(v: _Collector, b: BaseBlock, sizes: tuple[int, ...],
                       n: int, L: int) -> bool:
    """Well-formedness: size, in-range points, no duplicate points."""
    if len(b) not in sizes:
        v.add("wrong-count", f"block {b} has size {len(b)}, want one of {sizes}")
        return False
    if len(set(b)) != len(b):
        v.add("malformed", f"block {b} has repeated points")
        return False
    for p in b:
        if not (0 <= p.group < n) or not (0 <= p.coord < L):
            v.add("malformed", f"point {p} outside grid {n}x{L}")
            return False
    return True


# ---------------------------------------------------------------------------
# holey designs on a grid (the central object)
# ---------------------------------------------------------------------------

def _schgdd_profile_check(design: Design, v: _Collector) -> None:
    """Check 1: per ordered group pair, the multiset of base-block coordinate
    differences equals Z_{mt} minus the multiples of t, each exactly once."""
    n, m, t = design.params.n, design.params.m, design.params.t
    L = m * t
    want = holey_difference_set(m, t)
    prof = DifferenceProfile.of_blocks(design.base_blocks, L)
    for i in range(n):
        bucket = prof.bucket(i, i)
        if bucket:
            v.add("forbidden-pair", f"group {i} meets itself in a block: diffs {sorted(bucket)}")
    for i, j in itertools.permutations(range(n), 2):
        bucket = prof.bucket(i, j)
        for d in want:
            c = bucket.get(d, 0)
            if c == 0:
                v.add("missing-pair", f"groups ({i},{j}): difference {d} never covered")
            elif c > 1:
                v.add("repeated-pair", f"groups ({i},{j}): difference {d} covered {c} times")
        for d in bucket:
            if d not in want:
                v.add("forbidden-pair",
                      f"groups ({i},{j}): hole-internal difference {d} covered")


def _schgdd_development_check(design: Design, v: _Collector) -> None:
    """Check 2 (independent): fully develop the base blocks and count actual
    point pairs.  Every pair in different groups and different holes must
    occur exactly once; nothing else may occur."""
    n, m, t = design.params.n, design.params.m, design.params.t
    L = m * t
    cover: Counter = Counter()
    for b in design.base_blocks:
        if orbit_length(b, L) != L:
            v.add("bad-orbit-length", f"block {b} has orbit shorter than {L}")
        for dev in (tuple(p.shifted(s, L) for p in b) for s in range(L)):
            for p, q in itertools.combinations(dev, 2):
                cover[frozenset((p, q))] += 1
    bad = 0
    for pair, c in cover.items():
        p, q = tuple(pair)
        if p.group == q.group:
            v.add("forbidden-pair", f"{p},{q} share a group")
            bad += 1
        elif p.coord % t == q.coord % t:
            v.add("forbidden-pair", f"{p},{q} share a hole")
            bad += 1
        elif c != 1:
            v.add("repeated-pair", f"{p},{q} covered {c} times")
            bad += 1
    expected_pairs = n * (n - 1) // 2 * m * t * m * (t - 1)
    good = len(cover) - bad
    if good != expected_pairs and not v.items:
        v.add("missing-pair",
              f"covered {good} cross pairs, expected {expected_pairs}")


def verify_schgdd(design: Design, threads: int = 1) -> VerificationReport:
    """Validity of a semi-cyclic holey design of type (n, m^t), block size 3.

    Runs two independent checks: difference-profile exactness and full
    development with pair counting.
    """
    v = _Collector()
    n, m, t = design.params.n, design.params.m, design.params.t
    L = m * t
    ok_shape = True
    for b in design.base_blocks:
        ok_shape &= _check_block_shape(v, b, design.params.k, n, L)
    if ok_shape:
        expected = expected_base_block_count(n, m, t)
        if len(design.base_blocks) != expected:
            v.add("wrong-count",
                  f"{len(design.base_blocks)} base blocks, expected {expected}")
        _schgdd_profile_check(design, v)
        _schgdd_development_check(design, v)
    return v.report("difference-profile + full-development")


def verify_hgdd(design: Design) -> VerificationReport:
    """Validity of a fully developed holey design (no cyclic structure
    assumed): exact coverage of cross-group cross-hole pairs."""
    v = _Collector()
    n, m, t = design.params.n, design.params.m, design.params.t
    L = m * t
    cover: Counter = Counter()
    for b in design.base_blocks:
        if not _check_block_shape(v, b, design.params.k, n, L):
            continue
        for p, q in itertools.combinations(b, 2):
            if p.group == q.group:
                v.add("forbidden-pair", f"{p},{q} share a group")
            elif p.coord % t == q.coord % t:
                v.add("forbidden-pair", f"{p},{q} share a hole")
            else:
                cover[frozenset((p, q))] += 1
    for pair, c in cover.items():
        if c != 1:
            p, q = tuple(pair)
            v.add("repeated-pair", f"{p},{q} covered {c} times")
    expected_pairs = n * (n - 1) // 2 * m * t * m * (t - 1)
    if len(cover) < expected_pairs:
        v.add("missing-pair",
              f"covered {len(cover)} cross pairs, expected {expected_pairs}")
    return v.report("pair-coverage")


# ---------------------------------------------------------------------------
# group divisible designs without holes
# ---------------------------------------------------------------------------

def verify_scgdd(design: Design, strict: bool = True) -> VerificationReport:
    """Validity of a (semi-)cyclic group divisible design of type m^n.

    Two layouts are supported (see core module docstring):

    * ``Kind.SCGDD``: rows I_n x Z_m, development by coordinate +1 mod m.
      Valid iff for every ordered pair of distinct groups the difference
      multiset equals Z_m exactly.
    * ``Kind.CYCLIC_GDD``: points Z_{m*n} stored as (0, x), groups = residues
      mod n.  Valid iff development covers each cross pair exactly once;
      with ``strict`` every orbit must have full length m*n.
    """
    v = _Collector()
    params = design.params
    if design.kind == Kind.CYCLIC_GDD:
        L = params.m * params.n
        cover: Counter = Counter()
        for b in design.base_blocks:
            if not _check_block_shape(v, b, params.k, 1, L):
                continue
            if strict and orbit_length(b, L) != L:
                v.add("bad-orbit-length", f"block {b} orbit shorter than {L}")
            for dev in develop_orbit(b, L):
                for p, q in itertools.combinations(dev, 2):
                    cover[frozenset((p.coord, q.coord))] += 1
        for pair, c in cover.items():
            x, y = tuple(pair)
            if x % params.n == y % params.n:
                v.add("forbidden-pair", f"{x},{y} share a group (mod {params.n})")
            elif c != 1:
                v.add("repeated-pair", f"pair {x},{y} covered {c} times")
        expected = (L * (L - 1) - L * (params.m - 1)) // 2
        good = sum(1 for pair in cover
                   if (lambda x, y: x % params.n != y % params.n)(*tuple(pair)))
        if good != expected:
            v.add("missing-pair", f"covered {good} cross pairs, expected {expected}")
        return v.report("cyclic development")

    # grid layout
    n, m = params.n, params.m
    ok_shape = True
    for b in design.base_blocks:
        ok_shape &= _check_block_shape(v, b, params.k, n, m)
    if ok_shape:
        prof = DifferenceProfile.of_blocks(design.base_blocks, m)
        for i in range(n):
            if prof.bucket(i, i):
                v.add("forbidden-pair", f"group {i} meets itself")
        for i, j in itertools.permutations(range(n), 2):
            bucket = prof.bucket(i, j)
            for d in range(m):
                c = bucket.get(d, 0)
                if c == 0:
                    v.add("missing-pair", f"groups ({i},{j}): difference {d} missing")
                elif c > 1:
                    v.add("repeated-pair", f"groups ({i},{j}): difference {d} x{c}")
        for b in design.base_blocks:
            if orbit_length(b, m) != m:
                v.add("bad-orbit-length", f"block {b} orbit shorter than {m}")
    return v.report("difference-profile")


def verify_mgdd(design: Design) -> VerificationReport:
    """Validity of a modified GDD of type t^n (rows I_n, columns I_t, full
    block list): pairs differing in both row and column covered exactly once,
    no block meets a row or column twice."""
    v = _Collector()
    n, t = design.params.n, design.params.t
    cover: Counter = Counter()
    for b in design.base_blocks:
        if not _check_block_shape(v, b, design.params.k, n, t):
            continue
        rows = [p.group for p in b]
        cols = [p.coord for p in b]
        if len(set(rows)) != len(rows):
            v.add("forbidden-pair", f"block {b} meets a row twice")
            continue
        if len(set(cols)) != len(cols):
            v.add("forbidden-pair", f"block {b} meets a column twice")
            continue
        for p, q in itertools.combinations(b, 2):
            cover[frozenset((p, q))] += 1
    for pair, c in cover.items():
        if c != 1:
            p, q = tuple(pair)
            v.add("repeated-pair", f"{p},{q} covered {c} times")
    expected = n * (n - 1) // 2 * t * (t - 1)
    if len(cover) < expected:
        v.add("missing-pair", f"covered {len(cover)} pairs, expected {expected}")
    return v.report("pair-coverage")


def verify_pbd(design: Design) -> VerificationReport:
    """Pairwise balanced design on n points (stored as (point, 0))."""
    v = _Collector()
    n = design.params.n
    cover: Counter = Counter()
    for b in design.base_blocks:
        if len(b) not in design.params.k:
            v.add("wrong-count", f"block size {len(b)} not in {design.params.k}")
            continue
        pts = [p.group for p in b]
        if any(p.coord != 0 for p in b) or len(set(pts)) != len(pts):
            v.add("malformed", f"bad block {b}")
            continue
        for x, y in itertools.combinations(sorted(pts), 2):
            cover[(x, y)] += 1
    for (x, y), c in cover.items():
        if c != 1:
            v.add("repeated-pair", f"pair ({x},{y}) covered {c} times")
    missing = n * (n - 1) // 2 - len(cover)
    if missing:
        v.add("missing-pair", f"{missing} point pairs uncovered")
    return v.report("pair-coverage")


# ---------------------------------------------------------------------------
# auxiliary ingredient kinds
# ---------------------------------------------------------------------------

def verify_pdf(design: Design) -> VerificationReport:
    """Perfect difference family: blocks of integers whose pairwise positive
    differences cover {1..(v-1)/2} exactly once."""
    v = _Collector()
    vv = design.params.n
    if vv % 2 == 0:
        v.add("malformed", f"v={vv} must be odd")
        return v.report("difference-cover")
    want = set(range(1, (vv - 1) // 2 + 1))
    got: Counter = Counter()
    for b in design.base_blocks:
        if len(b) not in design.params.k:
            v.add("wrong-count", f"block size {len(b)} not in {design.params.k}")
        xs = sorted(p.coord for p in b)
        if len(set(xs)) != len(xs):
            v.add("malformed", f"repeated element in {xs}")
            continue
        for x, y in itertools.combinations(xs, 2):
            got[abs(y - x)] += 1
    for d in want:
        c = got.get(d, 0)
        if c == 0:
            v.add("missing-pair", f"difference {d} not covered")
        elif c > 1:
            v.add("repeated-pair", f"difference {d} covered {c} times")
    for d in got:
        if d not in want:
            v.add("forbidden-pair", f"difference {d} outside 1..{(vv-1)//2}")
    return v.report("difference-cover")


def verify_cdm(design: Design) -> VerificationReport:
    """Difference matrix over Z_m: every ordered row pair's column-wise
    differences hit each residue exactly once."""
    v = _Collector()
    kk, m = design.params.n, design.params.m
    cols = design.base_blocks
    if len(cols) != m:
        v.add("wrong-count", f"{len(cols)} columns, expected {m}")
    rows_of = []
    for col in cols:
        if sorted(p.group for p in col) != list(range(kk)):
            v.add("malformed", f"column {col} does not have one entry per row")
            return v.report("row-pair differences")
        rows_of.append({p.group: p.coord % m for p in col})
    for r, s in itertools.permutations(range(kk), 2):
        seen = Counter((col[r] - col[s]) % m for col in rows_of)
        for d in range(m):
            c = seen.get(d, 0)
            if c == 0:
                v.add("missing-pair", f"rows ({r},{s}): difference {d} missing")
            elif c > 1:
                v.add("repeated-pair", f"rows ({r},{s}): difference {d} x{c}")
    return v.report("row-pair differences")


def verify_quasi_skew_starter(pairs: list[tuple[int, int]], n: int) -> VerificationReport:
    """Quasi-skew starter in Z_n: the pairs partition Z_n \\ {0}, and the
    sums x+y, each taken with both signs, also cover Z_n \\ {0} exactly."""
    v = _Collector()
    if n % 2 == 0:
        v.add("malformed", f"n={n} must be odd")
        return v.report("starter")
    elements = Counter()
    sums = Counter()
    for x, y in pairs:
        elements[x % n] += 1
        elements[y % n] += 1
        sums[(x + y) % n] += 1
        sums[(-x - y) % n] += 1
    if len(pairs) != (n - 1) // 2:
        v.add("wrong-count", f"{len(pairs)} pairs, expected {(n-1)//2}")
    for z in range(1, n):
        if elements.get(z, 0) != 1:
            v.add("starter-coverage", f"element {z} appears {elements.get(z, 0)} times")
        if sums.get(z, 0) != 1:
            v.add("starter-sums", f"+-sum {z} appears {sums.get(z, 0)} times")
    if elements.get(0, 0):
        v.add("starter-coverage", "0 used as a pair element")
    if sums.get(0, 0):
        v.add("starter-sums", "pair sums to 0")
    return v.report("partition + skew sums")


# ---------------------------------------------------------------------------
# sampling plans excluding contiguous units
# ---------------------------------------------------------------------------

def _contiguous_1d(x: int, y: int, n: int) -> bool:
    return (x - y) % n in (1, n - 1)


def verify_bsec1(design: Design, cyclic: bool) -> VerificationReport:
    """Balanced sampling plan on Z_n excluding contiguous units: every
    non-contiguous pair exactly once, contiguous pairs never.  With
    ``cyclic`` the stored blocks are base blocks developed mod n."""
    v = _Collector()
    n = design.params.n
    blocks = design.base_blocks
    if cyclic:
        full = []
        for b in blocks:
            full.extend(develop_orbit(b, n))
    else:
        full = list(blocks)
    cover: Counter = Counter()
    for b in full:
        if len(b) not in design.params.k or any(p.group != 0 for p in b):
            v.add("malformed", f"bad block {b}")
            continue
        for p, q in itertools.combinations(b, 2):
            if _contiguous_1d(p.coord, q.coord, n):
                v.add("forbidden-pair", f"contiguous pair {p.coord},{q.coord}")
            else:
                cover[frozenset((p.coord, q.coord))] += 1
    for pair, c in cover.items():
        if c != 1:
            v.add("repeated-pair", f"pair {sorted(pair)} covered {c} times")
    expected = n * (n - 1) // 2 - n
    if len(cover) < expected:
        v.add("missing-pair", f"covered {len(cover)}, expected {expected}")
    return v.report("pair-coverage")


def _contiguous_2d(p: GridPoint, q: GridPoint, n: int, m: int) -> bool:
    """2-D contiguity on the cylinder-with-wraparound grid: one coordinate
    equal, the other adjacent (both directions cyclic)."""
    if p.group == q.group:
        return (p.coord - q.coord) % m in (1, m - 1)
    if p.coord == q.coord:
        return (p.group - q.group) % n in (1, n - 1)
    return False


def verify_bsec2(design: Design) -> VerificationReport:
    """Two-dimensional balanced sampling plan on I_n x Z_m, semi-cyclic in
    the column coordinate: developing the base blocks by column +1 mod m must
    cover every non-contiguous pair exactly once and no contiguous pair."""
    v = _Collector()
    n, m = design.params.n, design.params.m
    cover: Counter = Counter()
    for b in design.base_blocks:
        if not _check_block_shape(v, b, design.params.k, n, m):
            continue
        for s in range(m):
            dev = tuple(p.shifted(s, m) for p in b)
            for p, q in itertools.combinations(dev, 2):
                if _contiguous_2d(p, q, n, m):
                    v.add("forbidden-pair", f"contiguous {p},{q}")
                else:
                    cover[frozenset((p, q))] += 1
    for pair, c in cover.items():
        if c != 1:
            p, q = tuple(pair)
            v.add("repeated-pair", f"{p},{q} covered {c} times")
    total = n * m * (n * m - 1) // 2
    contiguous = 2 * n * m  # each cell has 4 contiguous neighbours
    expected = total - contiguous
    if len(cover) < expected:
        v.add("missing-pair", f"covered {len(cover)}, expected {expected}")
    return v.report("develop + pair-coverage")


# ---------------------------------------------------------------------------
# optical orthogonal codes
# ---------------------------------------------------------------------------

def _row_diff_counter(a: BaseBlock, b: BaseBlock, m: int) -> Counter:
    """Counter of (column differences mod m) over same-row cell pairs of the
    two codewords; the correlation of a and b at shift r is its value at r."""
    rows_b: dict[int, list[int]] = {}
    for q in b:
        rows_b.setdefault(q.group, []).append(q.coord)
    out: Counter = Counter()
    for p in a:
        for cb in rows_b.get(p.group, ()):
            out[(p.coord - cb) % m] += 1
    return out


def _ooc_pair_chunk(args) -> list[tuple[int, int, int, int]]:
    codewords, m, lam, pairs = args
    bad = []
    for i, j in pairs:
        corr = _row_diff_counter(codewords[i], codewords[j], m)
        for r, c in corr.items():
            if c > lam:
                bad.append((i, j, r, c))
    return bad


def verify_ooc(design: Design, threads: int = 1) -> VerificationReport:
    """2-D optical orthogonal code on I_n x Z_m: every codeword has weight k,
    auto-correlation at nonzero shifts <= lambda, and cross-correlation of
    distinct codewords at every shift <= lambda."""
    v = _Collector()
    n, m = design.params.n, design.params.m
    lam = design.params.lam
    words = design.base_blocks
    for w in words:
        if not _check_block_shape(v, w, design.params.k, n, m):
            continue
        auto = _row_diff_counter(w, w, m)
        for r, c in auto.items():
            if r % m != 0 and c > lam:
                v.add("correlation-exceeded",
                      f"codeword {w}: auto-correlation {c} at shift {r}")
    if len(set(words)) != len(words):
        v.add("malformed", "duplicate codewords")
    pairs = list(itertools.combinations(range(len(words)), 2))
    if threads > 1 and len(pairs) > 2000:
        chunks = [pairs[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = pool.map(_ooc_pair_chunk,
                               [(words, m, lam, ch) for ch in chunks])
        bad = sorted(b for chunk in results for b in chunk)
    else:
        bad = _ooc_pair_chunk((words, m, lam, pairs))
    for i, j, r, c in bad:
        v.add("correlation-exceeded",
              f"codewords {i},{j}: cross-correlation {c} at shift {r}")
    return v.report("auto + cross correlation")


def johnson_bound(u: int, v: int, k: int, lam: int = 1) -> int:
    """Upper bound on the size of a (u x v, k, lam) optical orthogonal code:
    nested floor of u/k * (uv-1)/(k-1) * ... * (uv-lam)/(k-lam)."""
    if lam >= k:
        raise ValueError("lambda must be < k")
    acc = (u * v - lam) // (k - lam)
    for j in range(lam - 1, 0, -1):
        acc = (u * v - j) * acc // (k - j)
    return u * acc // k


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def verify(design: Design, threads: int = 1, strict: bool = True) -> VerificationReport:
    """Verify a design according to its kind."""
    kind = design.kind
    if kind == Kind.SCHGDD:
        return verify_schgdd(design, threads=threads)
    if kind == Kind.HGDD:
        return verify_hgdd(design)
    if kind in (Kind.SCGDD, Kind.CYCLIC_GDD):
        return verify_scgdd(design, strict=strict)
    if kind == Kind.MGDD:
        return verify_mgdd(design)
    if kind == Kind.PBD:
        return verify_pbd(design)
    if kind == Kind.PDF:
        return verify_pdf(design)
    if kind == Kind.CDM:
        return verify_cdm(design)
    if kind == Kind.BSEC1:
        return verify_bsec1(design, cyclic=False)
    if kind == Kind.CYCLIC_BSEC1:
        return verify_bsec1(design, cyclic=True)
    if kind == Kind.BSEC2:
        return verify_bsec2(design)
    if kind == Kind.OOC2D:
        return verify_ooc(design, threads=threads)
    if kind == Kind.STARTER:
        pairs = [(b[0].coord, b[1].coord) for b in design.base_blocks]
        return verify_quasi_skew_starter(pairs, design.params.n)
    raise ValueError(f"no verifier for kind {kind}")


__all__ = [
    "Violation", "VerificationReport", "verify", "verify_schgdd",
    "verify_hgdd", "verify_scgdd", "verify_mgdd", "verify_pbd", "verify_pdf",
    "verify_cdm", "verify_quasi_skew_starter", "verify_bsec1", "verify_bsec2",
    "verify_ooc", "johnson_bound",
]
