"""Bounded deterministic backtracking search for small ingredient designs.

Several recursive routes consume objects that are known to exist but are not
tabulated anywhere in this package: strictly cyclic group divisible designs,
semi-cyclic GDDs, modified GDDs, perfect difference families, pairwise
balanced designs, cyclic one-dimensional sampling plans, small holey designs
with odd hole counts, and two sporadic objects (a block-size-4 semi-cyclic
GDD of type 3^8 and an 11-codeword 3x8 optical orthogonal code).  This module
finds them by exhaustive depth-first search at desk scale.

Search contract:

* deterministic — branching always attacks the smallest uncovered slot
  (difference or point pair) and enumerates candidate blocks in lexicographic
  order, so equal budgets reproduce identical designs;
* honest failure — ``NotFound`` is returned only when the full (normalized)
  search space has been exhausted, which certifies nonexistence for that
  parameter; running out of nodes or wall clock returns ``BudgetExhausted``;
* gated output — every design returned by :func:`search` has already passed
  its verifier.

Normalizations used (all lossless, so exhaustion certifies nonexistence):
translation-invariant targets fix one element of each block at 0 and keep
the lexicographically least translate; row-developed targets keep one block
per row orbit.  The modified-GDD engine first tries a row-cyclic ansatz
(rows Z_n for odd n, rows Z_{n-1} plus one fixed row for even n) and falls
back to the unreduced pair-cover search before reporting NotFound.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import sys
import time
import warnings
from dataclasses import dataclass
from pathlib import Path

from .core import (
    BaseBlock,
    Design,
    DesignParams,
    GridPoint,
    Kind,
    block,
    develop_rows,
    holey_difference_set,
    orbit_rep,
)
from .verify import johnson_bound, verify

# deep exact-cover recursions (one level per base block) need headroom
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))


# ---------------------------------------------------------------------------
# problem / result types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 5_000_000
    wall_s: float = 60.0


@dataclass(frozen=True)
class SearchProblem:
    target: DesignParams
    budget: SearchBudget = SearchBudget()


@dataclass(frozen=True)
class NotFound:
    """The normalized search space was exhausted: no such design exists."""

    target: DesignParams
    nodes: int
    elapsed_s: float


@dataclass(frozen=True)
class BudgetExhausted:
    """Node or wall-clock budget ran out before the space was exhausted."""

    target: DesignParams
    nodes: int
    elapsed_s: float


class _OutOfBudget(Exception):
    pass


class _Ticker:
    __slots__ = ("max_nodes", "deadline", "nodes")

    def __init__(self, budget: SearchBudget):
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.wall_s
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _OutOfBudget
        if not (self.nodes & 0x3FF) and time.monotonic() > self.deadline:
            raise _OutOfBudget


# ---------------------------------------------------------------------------
# generic exact cover (precomputed candidates)
# ---------------------------------------------------------------------------

def _exact_cover(n_slots: int, cand_covers: list[tuple[int, ...]],
                 ticker: _Ticker) -> list[int] | None:
    """First exact cover of ``range(n_slots)``, or None if none exists.

    ``cand_covers[i]`` lists the slots candidate i covers.  Branching is
    deterministic most-constrained-first: the uncovered slot with the fewest
    still-valid candidates (ties by slot id), candidates in index order
    (indices are assigned in lexicographic generation order by the callers).
    A slot with no valid candidate fails the node immediately.
    """
    slot_cands: list[list[int]] = [[] for _ in range(n_slots)]
    for ci, cov in enumerate(cand_covers):
        for s in cov:
            slot_cands[s].append(ci)
    covered = bytearray(n_slots)
    chosen: list[int] = []

    def rec() -> bool:
        ticker.tick()
        best_s = -1
        best: list[int] | None = None
        for s in range(n_slots):
            if covered[s]:
                continue
            live = []
            for ci in slot_cands[s]:
                cov = cand_covers[ci]
                if not (covered[cov[0]] or covered[cov[1]]
                        or any(covered[x] for x in cov[2:])):
                    live.append(ci)
                    if best is not None and len(live) >= len(best):
                        break
            if best is None or len(live) < len(best):
                best, best_s = live, s
                if not live:
                    return False
        if best is None:
            return True
        for ci in best:
            cov = cand_covers[ci]
            if any(covered[x] for x in cov):
                continue
            for x in cov:
                covered[x] = 1
            chosen.append(ci)
            if rec():
                return True
            chosen.pop()
            for x in cov:
                covered[x] = 0
        return False

    return chosen if rec() else None


# ---------------------------------------------------------------------------
# semi-cyclic holey GDD / semi-cyclic GDD (grid layout)
# ---------------------------------------------------------------------------

def _grid_candidates_k3(n: int, L: int, diffs: list[int]) -> tuple[
        list[tuple[int, ...]], list[BaseBlock]]:
    """Difference-triple candidates for a block-size-3 grid target.

    A base block with rows a<b<c is determined up to translation by the
    ordered differences d_ab, d_bc (coordinate of the higher-indexed row
    subtracted from the lower); it covers slots (ab, d_ab), (bc, d_bc),
    (ac, d_ab+d_bc).
    """
    allowed = set(diffs)
    rank = {d: i for i, d in enumerate(diffs)}
    pairs = list(itertools.combinations(range(n), 2))
    pair_idx = {p: i for i, p in enumerate(pairs)}
    nd = len(diffs)
    covers: list[tuple[int, ...]] = []
    blocks: list[BaseBlock] = []
    for a, b, c in itertools.combinations(range(n), 3):
        iab, ibc, iac = pair_idx[(a, b)], pair_idx[(b, c)], pair_idx[(a, c)]
        for dab in diffs:
            for dbc in diffs:
                dac = (dab + dbc) % L
                if dac not in allowed:
                    continue
                covers.append((iab * nd + rank[dab],
                               ibc * nd + rank[dbc],
                               iac * nd + rank[dac]))
                blocks.append(block([(a, dac), (b, dbc), (c, 0)]))
    return covers, blocks


def _search_schgdd(n: int, m: int, t: int, ticker: _Ticker,
                   block_filter=None) -> list[BaseBlock] | None:
    L = m * t
    diffs = sorted(holey_difference_set(m, t))
    if not diffs or n < 3:
        return None
    if (len(diffs) * n * (n - 1) // 2) % 3 != 0:
        return None  # counting obstruction: slots not a multiple of 3
    covers, blocks = _grid_candidates_k3(n, L, diffs)
    if block_filter is not None:
        keep = [i for i, b in enumerate(blocks) if block_filter(b)]
        covers = [covers[i] for i in keep]
        blocks = [blocks[i] for i in keep]
    sol = _exact_cover(n * (n - 1) // 2 * len(diffs), covers, ticker)
    if sol is None:
        return None
    return [orbit_rep(blocks[ci], L) for ci in sol]


def _search_scgdd(n: int, m: int, k: int, ticker: _Ticker) -> list[BaseBlock] | None:
    diffs = list(range(m))
    n_slots = n * (n - 1) // 2 * m
    if k == 3:
        if n_slots % 3 != 0:
            return None
        covers, blocks = _grid_candidates_k3(n, m, diffs)
        sol = _exact_cover(n_slots, covers, ticker)
    elif k == 4:
        if n_slots % 6 != 0:
            return None
        pairs = list(itertools.combinations(range(n), 2))
        pair_idx = {p: i for i, p in enumerate(pairs)}
        covers = []
        blocks = []
        for rows in itertools.combinations(range(n), 4):
            a, b, c, e = rows
            for dab in range(m):
                for dbc in range(m):
                    for dce in range(m):
                        xc = dce
                        xb = (dbc + xc) % m
                        xa = (dab + xb) % m
                        cov = (pair_idx[(a, b)] * m + dab,
                               pair_idx[(a, c)] * m + (xa - xc) % m,
                               pair_idx[(a, e)] * m + xa,
                               pair_idx[(b, c)] * m + dbc,
                               pair_idx[(b, e)] * m + xb,
                               pair_idx[(c, e)] * m + xc)
                        if len(set(cov)) != 6:
                            continue
                        covers.append(cov)
                        blocks.append(block([(a, xa), (b, xb), (c, xc), (e, 0)]))
        sol = _exact_cover(n_slots, covers, ticker)
    else:
        raise ValueError(f"unsupported semi-cyclic GDD block size {k}")
    if sol is None:
        return None
    return [orbit_rep(blocks[ci], m) for ci in sol]


# ---------------------------------------------------------------------------
# strictly cyclic K-GDD of type w^t on Z_{w*t} (groups = residues mod t)
# ---------------------------------------------------------------------------

def _cyclic_canon(elems: tuple[int, ...], L: int) -> tuple[int, ...]:
    return min(tuple(sorted((e - x) % L for e in elems)) for x in elems)


def _ordered_diffs(elems: tuple[int, ...], L: int) -> list[int]:
    out = []
    for x, y in itertools.combinations(elems, 2):
        out.append((y - x) % L)
        out.append((x - y) % L)
    return out


def _search_strict_cyclic(t: int, w: int, K: tuple[int, ...],
                          ticker: _Ticker) -> list[BaseBlock] | None:
    """Strictly cyclic K-GDD of type w^t: base blocks in Z_{w*t} whose ordered
    differences cover Z_{wt} minus the multiples of t exactly once."""
    L = w * t
    unc = {d for d in range(1, L) if d % t != 0}

    def valid_diffs(elems: tuple[int, ...]) -> list[int] | None:
        ds = _ordered_diffs(elems, L)
        if len(set(ds)) != len(ds):
            return None
        if any(d not in unc for d in ds):
            return None
        return ds

    def extend(cur: list[int], ds_cur: set[int], floor: int, k: int,
               found: set[tuple[int, ...]]) -> None:
        """Add elements to ``cur`` (any residue, enumerated ascending above
        ``floor`` among the additions only) until size k, pruning on
        difference clashes against both the global uncovered set and the
        block's own differences so far."""
        ticker.tick()
        if len(cur) == k:
            tup = tuple(sorted(cur))
            if valid_diffs(tup) is not None:
                found.add(_cyclic_canon(tup, L))
            return
        for z in range(floor + 1, L):
            if z in cur:
                continue
            new_ds = []
            for x in cur:
                new_ds.append((z - x) % L)
                new_ds.append((x - z) % L)
            if (len(set(new_ds)) != len(new_ds)
                    or any(d not in unc or d in ds_cur for d in new_ds)):
                continue
            cur.append(z)
            ds_cur.update(new_ds)
            extend(cur, ds_cur, z, k, found)
            cur.pop()
            ds_cur.difference_update(new_ds)

    def candidates_for(d: int) -> list[tuple[int, ...]]:
        e = min(d, L - d)
        found: set[tuple[int, ...]] = set()
        for k in sorted(set(K)):
            for x in range(L):
                base = sorted({0, x, (x + e) % L})
                if len(base) > k:
                    continue
                ds_base = _ordered_diffs(tuple(base), L)
                if (len(set(ds_base)) != len(ds_base)
                        or any(dd not in unc for dd in ds_base)):
                    continue
                if len(base) == k:
                    found.add(_cyclic_canon(tuple(base), L))
                else:
                    extend(list(base), set(ds_base), 0, k, found)
        return sorted(c for c in found if valid_diffs(c) is not None)

    blocks: list[tuple[int, ...]] = []

    def rec() -> bool:
        ticker.tick()
        if not unc:
            return True
        d = min(unc)
        for cand in candidates_for(d):
            ds = valid_diffs(cand)
            if ds is None:
                continue
            for x in ds:
                unc.remove(x)
            blocks.append(cand)
            if rec():
                return True
            blocks.pop()
            for x in ds:
                unc.add(x)
        return False

    if not rec():
        return None
    return [block((0, e) for e in tup) for tup in blocks]


# ---------------------------------------------------------------------------
# perfect difference families
# ---------------------------------------------------------------------------

def _search_pdf(v: int, K: tuple[int, ...], ticker: _Ticker) -> list[BaseBlock] | None:
    """(v,K,1)-PDF: integer blocks whose pairwise positive differences cover
    {1..(v-1)/2} exactly once.  Blocks are translation-normalized to start at
    0, hence live inside [0,(v-1)/2]."""
    half = (v - 1) // 2
    unc = set(range(1, half + 1))

    def valid(elems: tuple[int, ...]) -> list[int] | None:
        ds = [y - x for x, y in itertools.combinations(elems, 2)]
        if len(set(ds)) != len(ds) or any(d not in unc for d in ds):
            return None
        return ds

    def extend(cur: list[int], k: int, found: set[tuple[int, ...]]) -> None:
        ticker.tick()
        if len(cur) == k:
            tup = tuple(sorted(cur))
            if valid(tup) is not None:
                found.add(tup)
            return
        for z in range(1, half + 1):
            if z in cur:
                continue
            if any(abs(z - x) not in unc for x in cur):
                continue
            if len({abs(z - x) for x in cur}) != len(cur):
                continue
            cur.append(z)
            extend(cur, k, found)
            cur.pop()

    def candidates_for(delta: int) -> list[tuple[int, ...]]:
        found: set[tuple[int, ...]] = set()
        for k in sorted(set(K)):
            for x in range(0, half - delta + 1):
                base = sorted({0, x, x + delta})
                if len(base) > k:
                    continue
                if len(base) == k:
                    tup = tuple(base)
                    if valid(tup) is not None:
                        found.add(tup)
                else:
                    extend(list(base), k, found)
        return sorted(found)

    blocks: list[tuple[int, ...]] = []

    def rec() -> bool:
        ticker.tick()
        if not unc:
            return True
        delta = min(unc)
        for cand in candidates_for(delta):
            ds = valid(cand)
            if ds is None:
                continue
            for x in ds:
                unc.remove(x)
            blocks.append(cand)
            if rec():
                return True
            blocks.pop()
            for x in ds:
                unc.add(x)
        return False

    if not rec():
        return None
    return [block((0, e) for e in tup) for tup in blocks]


# ---------------------------------------------------------------------------
# modified GDDs (rows x columns, no repeated row or column in a block)
# ---------------------------------------------------------------------------

def _mgdd_reduced(n: int, t: int, ticker: _Ticker) -> list[BaseBlock] | None:
    """Row-cyclic ansatz: initial blocks developed by +1 on the row index.

    Odd n: rows Z_n.  Even n: rows Z_{n-1} plus the fixed row n-1 (a full
    Z_n development cannot work: the pair class at row distance n/2 would be
    covered twice)."""
    if n % 2 == 1:
        row_mod, fixed = n, None
    else:
        row_mod, fixed = n - 1, n - 1
    half = row_mod // 2

    slots: dict[tuple, int] = {}
    for dr in range(1, half + 1):
        for c1, c2 in itertools.permutations(range(t), 2):
            slots[("f", dr, c1, c2)] = len(slots)
    if fixed is not None:
        for c1, c2 in itertools.permutations(range(t), 2):
            slots[("x", c1, c2)] = len(slots)

    def fkey(dr: int, c1: int, c2: int) -> tuple:
        dr %= row_mod
        if dr > half:
            dr, c1, c2 = row_mod - dr, c2, c1
        return ("f", dr, c1, c2)

    seen: set[tuple] = set()
    covers: list[tuple[int, ...]] = []
    initials: list[BaseBlock] = []

    def consider(pts: list[tuple[int, int]], keys: list[tuple]) -> None:
        if len(set(keys)) != 3:
            return
        canon_key = tuple(sorted(pts))
        if canon_key in seen:
            return
        seen.add(canon_key)
        covers.append(tuple(slots[k] for k in keys))
        initials.append(block(pts))

    # all-finite initial blocks, one representative per row orbit
    for a in range(1, row_mod):
        for bb in range(a + 1, row_mod):
            for x, y, z in itertools.permutations(range(t), 3):
                pts = [(0, x), (a, y), (bb, z)]
                reps = []
                for r, _ in pts:
                    shifted = sorted(((g - r) % row_mod, c) for g, c in pts)
                    reps.append(tuple(shifted))
                if tuple(sorted(pts)) != min(reps):
                    continue
                ticker.tick()
                consider(pts, [fkey(a, x, y), fkey(bb - a, y, z), fkey(bb, x, z)])
    # blocks through the fixed row (even n only)
    if fixed is not None:
        for a in range(1, row_mod):
            for x, y, z in itertools.permutations(range(t), 3):
                pts = [(0, x), (a, y), (fixed, z)]
                alt = tuple(sorted([(0, y), ((-a) % row_mod, x), (fixed, z)]))
                if tuple(sorted(pts)) > alt:
                    continue
                ticker.tick()
                consider(pts, [fkey(a, x, y), ("x", z, x), ("x", z, y)])

    sol = _exact_cover(len(slots), covers, ticker)
    if sol is None:
        return None
    fixed_rows = frozenset() if fixed is None else frozenset({fixed})
    return develop_rows([initials[ci] for ci in sol], row_mod, fixed_rows)


def _mgdd_full(n: int, t: int, ticker: _Ticker) -> list[BaseBlock] | None:
    """Unreduced pair-cover search over the full n x t grid."""
    slots: dict[frozenset, int] = {}
    for p, q in itertools.combinations(
            (GridPoint(r, c) for r in range(n) for c in range(t)), 2):
        if p.group != q.group and p.coord != q.coord:
            slots[frozenset((p, q))] = len(slots)
    covers = []
    blocks = []
    for pts in itertools.combinations(
            sorted(GridPoint(r, c) for r in range(n) for c in range(t)), 3):
        rows = {p.group for p in pts}
        cols = {p.coord for p in pts}
        if len(rows) != 3 or len(cols) != 3:
            continue
        covers.append(tuple(slots[frozenset(pq)]
                            for pq in itertools.combinations(pts, 2)))
        blocks.append(tuple(pts))
    sol = _exact_cover(len(slots), covers, ticker)
    if sol is None:
        return None
    return [blocks[ci] for ci in sol]


def _search_mgdd(n: int, t: int, ticker: _Ticker) -> list[BaseBlock] | None:
    reduced = _mgdd_reduced(n, t, ticker)
    if reduced is not None:
        return reduced
    return _mgdd_full(n, t, ticker)


# ---------------------------------------------------------------------------
# pairwise balanced designs (full pair cover, v <= 40)
# ---------------------------------------------------------------------------

def _search_pbd(v: int, K: tuple[int, ...], ticker: _Ticker) -> list[BaseBlock] | None:
    if v > 40:
        raise ValueError("PBD search supports v <= 40 only")
    unc = set(itertools.combinations(range(v), 2))
    blocks: list[tuple[int, ...]] = []

    def rec() -> bool:
        ticker.tick()
        if not unc:
            return True
        x, y = min(unc)
        rest = [z for z in range(y + 1, v)
                if (x, z) in unc and (y, z) in unc]
        for k in sorted(set(K)):
            for extra in itertools.combinations(rest, k - 2):
                if any((a, b) not in unc
                       for a, b in itertools.combinations(extra, 2)):
                    continue
                cand = (x, y) + extra
                pairs = list(itertools.combinations(cand, 2))
                for p in pairs:
                    unc.remove(p)
                blocks.append(cand)
                if rec():
                    return True
                blocks.pop()
                for p in pairs:
                    unc.add(p)
        return False

    if not rec():
        return None
    return [block((e, 0) for e in tup) for tup in blocks]


# ---------------------------------------------------------------------------
# cyclic one-dimensional sampling plans excluding contiguous units
# ---------------------------------------------------------------------------

def _search_cyclic_bsec1(m: int, ticker: _Ticker) -> list[BaseBlock] | None:
    """Base blocks in Z_m covering every difference class +-d, 2<=d<=(m-1)/2,
    exactly once and never class +-1 (contiguous pairs)."""
    if m % 2 == 0:
        return None
    unc = set(range(2, (m - 1) // 2 + 1))

    def classes(tup: tuple[int, ...]) -> list[int] | None:
        cs = []
        for x, y in itertools.combinations(tup, 2):
            d = (y - x) % m
            cs.append(min(d, m - d))
        if len(set(cs)) != 3 or any(c not in unc for c in cs):
            return None
        return cs

    cands: set[tuple[int, ...]] = set()
    for a in range(1, m):
        for bb in range(a + 1, m):
            tup = (0, a, bb)
            ticker.tick()
            if classes(tup) is not None:
                cands.add(_cyclic_canon(tup, m))
    ordered = sorted(cands)
    blocks: list[tuple[int, ...]] = []

    def rec() -> bool:
        ticker.tick()
        if not unc:
            return True
        for cand in ordered:
            cs = classes(cand)
            if cs is None:
                continue
            for c in cs:
                unc.remove(c)
            blocks.append(cand)
            if rec():
                return True
            blocks.pop()
            for c in cs:
                unc.add(c)
        return False

    if not rec():
        return None
    return [block((0, e) for e in tup) for tup in blocks]


# ---------------------------------------------------------------------------
# small two-dimensional optical orthogonal code packings
# ---------------------------------------------------------------------------

def _ooc_auto_ok(word: tuple[GridPoint, ...], m: int, lam: int) -> bool:
    from collections import Counter
    cnt: Counter = Counter()
    for p, q in itertools.permutations(word, 2):
        if p.group == q.group:
            cnt[(p.coord - q.coord) % m] += 1
    return all(c <= lam for r, c in cnt.items() if r % m != 0)


def _ooc_cross_ok(a: tuple[GridPoint, ...], b: tuple[GridPoint, ...],
                  m: int, lam: int) -> bool:
    from collections import Counter
    cnt: Counter = Counter()
    for p in a:
        for q in b:
            if p.group == q.group:
                cnt[(p.coord - q.coord) % m] += 1
    return all(c <= lam for c in cnt.values())


def _search_ooc(n: int, m: int, k: int, lam: int, size: int,
                ticker: _Ticker) -> list[BaseBlock] | None:
    """A (n x m, k, lam) optical orthogonal code with exactly ``size``
    codewords.  Codewords are normalized to the least cyclic column shift;
    the code is an ascending sequence of normalized codewords."""
    points = [GridPoint(g, c) for g in range(n) for c in range(m)]

    def canon(word: tuple[GridPoint, ...]) -> tuple[GridPoint, ...]:
        return min(tuple(sorted(p.shifted(s, m) for p in word))
                   for s in range(m))

    cands: list[tuple[GridPoint, ...]] = []
    seen: set[tuple[GridPoint, ...]] = set()
    for combo in itertools.combinations(sorted(points), k):
        ticker.tick()
        word = canon(tuple(combo))
        if word in seen:
            continue
        seen.add(word)
        if _ooc_auto_ok(word, m, lam):
            cands.append(word)
    cands.sort()
    nc = len(cands)
    compat = [[False] * nc for _ in range(nc)]
    for i in range(nc):
        for j in range(i + 1, nc):
            ticker.tick()
            ok = _ooc_cross_ok(cands[i], cands[j], m, lam)
            compat[i][j] = compat[j][i] = ok

    chosen: list[int] = []

    def rec(start: int) -> bool:
        ticker.tick()
        if len(chosen) == size:
            return True
        if nc - start < size - len(chosen):
            return False
        for i in range(start, nc):
            if all(compat[i][j] for j in chosen):
                chosen.append(i)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    if not rec(0):
        return None
    return [cands[i] for i in chosen]


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

def search(problem: SearchProblem | DesignParams,
           budget: SearchBudget | None = None,
           block_filter=None) -> Design | NotFound | BudgetExhausted:
    """Search for the design described by ``problem.target``.

    Returns a verified Design, or NotFound (space exhausted: certified
    nonexistence at this parameter), or BudgetExhausted.  ``block_filter``
    (holey targets only) restricts the candidate base blocks — with it, a
    None result certifies nonexistence only within the filtered space.
    """
    if isinstance(problem, DesignParams):
        problem = SearchProblem(problem, budget or SearchBudget())
    p = problem.target
    ticker = _Ticker(problem.budget)
    t0 = time.monotonic()
    try:
        if p.kind is Kind.SCHGDD:
            blocks = _search_schgdd(p.n, p.m, p.t, ticker, block_filter)
        elif block_filter is not None:
            raise ValueError("block_filter applies to holey-target searches only")
        elif p.kind is Kind.SCGDD:
            if len(p.k) != 1:
                raise ValueError("semi-cyclic GDD search needs a single block size")
            blocks = _search_scgdd(p.n, p.m, p.k[0], ticker)
        elif p.kind is Kind.CYCLIC_GDD:
            blocks = _search_strict_cyclic(p.n, p.m, p.k, ticker)
        elif p.kind is Kind.PDF:
            blocks = _search_pdf(p.n, p.k, ticker)
        elif p.kind is Kind.MGDD:
            if p.k != (3,):
                raise ValueError("modified-GDD search supports block size 3 only")
            blocks = _search_mgdd(p.n, p.t, ticker)
        elif p.kind is Kind.PBD:
            blocks = _search_pbd(p.n, p.k, ticker)
        elif p.kind is Kind.CYCLIC_BSEC1:
            blocks = _search_cyclic_bsec1(p.n, ticker)
        elif p.kind is Kind.OOC2D:
            size = johnson_bound(p.n, p.m, p.k[0], p.lam)
            blocks = _search_ooc(p.n, p.m, p.k[0], p.lam, size, ticker)
        else:
            raise ValueError(f"no search engine for kind {p.kind}")
    except _OutOfBudget:
        return BudgetExhausted(p, ticker.nodes, time.monotonic() - t0)
    elapsed = time.monotonic() - t0
    if blocks is None:
        return NotFound(p, ticker.nodes, elapsed)
    design = Design(params=p, base_blocks=list(blocks),
                    provenance=f"search[{_param_slug(p)}]")
    report = verify(design)
    if not report.valid:
        raise AssertionError(
            f"search produced an invalid design for {_param_slug(p)}: "
            f"{report.summary()}")
    return design


# ---------------------------------------------------------------------------
# exhaustive nonexistence certificate for the (5,1,4) hole pattern
# ---------------------------------------------------------------------------

def _unique_row_pattern_count() -> int:
    """Number of 10-block multisets of row triples from I_5 covering every
    row pair exactly 3 times.  (Any valid base-block set needs each of the
    10 row pairs covered by exactly 3 blocks — one per admissible difference
    — so its row patterns must form such a multiset.)"""
    triples = list(itertools.combinations(range(5), 3))
    pairs = list(itertools.combinations(range(5), 2))
    need = {pr: 3 for pr in pairs}
    count = 0

    def rec(i: int, remaining: int) -> None:
        nonlocal count
        if i == len(triples):
            if remaining == 0 and all(v == 0 for v in need.values()):
                count += 1
            return
        tri_pairs = list(itertools.combinations(triples[i], 2))
        max_mult = min([remaining] + [need[pr] for pr in tri_pairs])
        for mult in range(max_mult, -1, -1):
            for pr in tri_pairs:
                need[pr] -= mult
            rec(i + 1, remaining - mult)
            for pr in tri_pairs:
                need[pr] += mult
    rec(0, 10)
    return count


def confirm_nonexistence_5_1_4() -> dict:
    """Exhaustively confirm that no 3-SCHGDD of type (5,1^4) exists.

    Reduction (lossless): each base block may be translated so that its
    least-row point has coordinate 0.  Each unordered row pair must receive
    the three differences {1,2,3} mod 4, one per block, so exactly 3 of the
    10 base blocks contain any given row pair — the row patterns form a
    (5,3,3) pair design, and enumeration shows the only such multiset is all
    ten row triples once (``unique_row_patterns`` = 1).  With row patterns
    fixed, each block {(a,0),(b,x),(c,y)} has (x,y) ranging over the six
    ordered pairs of distinct nonzero residues mod 4.  The full 6^10 space
    is searched with difference-clash pruning.
    """
    t0 = time.monotonic()
    uniq = _unique_row_pattern_count()
    templates = list(itertools.combinations(range(5), 3))
    options = [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]
    used: dict[tuple[int, int], set[int]] = {
        pr: set() for pr in itertools.combinations(range(5), 2)}
    nodes = 0
    solutions = 0

    def rec(i: int) -> None:
        nonlocal nodes, solutions
        nodes += 1
        if i == len(templates):
            solutions += 1
            return
        a, b, c = templates[i]
        for x, y in options:
            dab = (-x) % 4
            dbc = (x - y) % 4
            dac = (-y) % 4
            if dab in used[(a, b)] or dbc in used[(b, c)] or dac in used[(a, c)]:
                continue
            used[(a, b)].add(dab)
            used[(b, c)].add(dbc)
            used[(a, c)].add(dac)
            rec(i + 1)
            used[(a, b)].remove(dab)
            used[(b, c)].remove(dbc)
            used[(a, c)].remove(dac)

    rec(0)
    return {
        "target": {"n": 5, "m": 1, "t": 4},
        "unique_row_patterns": uniq,
        "search_space": 6 ** 10,
        "nodes": nodes,
        "solutions": solutions,
        "elapsed_s": round(time.monotonic() - t0, 3),
    }


# ---------------------------------------------------------------------------
# cyclic difference matrices
# ---------------------------------------------------------------------------

def cdm(k: int = 3, m: int = 1) -> list[list[int]]:
    """The 3xm difference matrix over Z_m with entry (r,j) = r*j mod m.

    Row differences down columns are j and 2j, bijections of Z_m exactly when
    m is odd; even m admits no such matrix."""
    if k != 3:
        raise ValueError("only 3-row difference matrices are provided")
    if m % 2 == 0:
        raise ValueError(f"no 3-row difference matrix over Z_{m} (m even)")
    return [[(r * j) % m for j in range(m)] for r in range(3)]


def cdm_design(m: int) -> Design:
    matrix = cdm(3, m)
    cols = [block((r, matrix[r][j]) for r in range(3)) for j in range(m)]
    return Design(params=DesignParams(kind=Kind.CDM, n=3, m=m, k=(3,)),
                  base_blocks=cols, provenance=f"cdm(3,{m})")


# ---------------------------------------------------------------------------
# verified design cache
# ---------------------------------------------------------------------------

def _param_slug(p: DesignParams) -> str:
    ks = ".".join(str(x) for x in p.k)
    return f"{p.kind.value}_n{p.n}_m{p.m}_t{p.t}_k{ks}_lam{p.lam}"


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    if explicit:
        return Path(explicit)
    env = os.environ.get("FORGE_CACHE_DIR")
    return Path(env) if env else None


def _cache_path(cache_dir: Path, p: DesignParams) -> Path:
    slug = _param_slug(p)
    digest = hashlib.sha256(slug.encode()).hexdigest()[:16]
    return cache_dir / f"{slug}_{digest}.json"


def cache_put(design: Design,
              cache_dir: str | os.PathLike | None = None) -> Path | None:
    """Store a design, re-verifying first; returns the path or None if no
    cache directory is configured."""
    root = resolve_cache_dir(cache_dir)
    if root is None:
        return None
    report = verify(design)
    if not report.valid:
        raise ValueError(f"refusing to cache invalid design: {report.summary()}")
    root.mkdir(parents=True, exist_ok=True)
    path = _cache_path(root, design.params)
    path.write_text(design.to_json())
    return path


def cache_get(params: DesignParams,
              cache_dir: str | os.PathLike | None = None) -> Design | None:
    """Fetch a previously stored design; every hit is re-verified and corrupt
    entries are dropped with a warning, never trusted."""
    root = resolve_cache_dir(cache_dir)
    if root is None:
        return None
    path = _cache_path(root, params)
    if not path.exists():
        return None
    try:
        design = Design.from_json(path.read_text())
        if design.params != params:
            raise ValueError("cache entry parameter mismatch")
        report = verify(design)
        if not report.valid:
            raise ValueError(report.summary())
    except Exception as exc:  # noqa: BLE001 - any corruption means drop
        warnings.warn(f"dropping corrupt cache entry {path.name}: {exc}",
                      stacklevel=2)
        path.unlink(missing_ok=True)
        return None
    design.provenance = f"cache[{_param_slug(params)}]"
    return design
