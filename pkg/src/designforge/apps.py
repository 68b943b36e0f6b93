"""Application builders on top of the holey-design toolkit.

Two constructions: two-dimensional balanced sampling plans excluding
contiguous units (semi-cyclic in the column coordinate), and two-dimensional
optical orthogonal codes whose sizes meet the Johnson bound exactly.  Every
builder returns a ``Design`` so the matching verifier can gate the output;
the builders assert their codeword counts against the bound at runtime
rather than assuming the closed formulas.
"""

from __future__ import annotations

from .core import Design, DesignParams, Kind, block
from .engine import build
from .search import (
    BudgetExhausted,
    NotFound,
    SearchBudget,
    cache_get,
    cache_put,
    search,
)
from .verify import johnson_bound


class MissingIngredient(RuntimeError):
    """An ingredient design could not be obtained within the search budget.

    Supply it externally (drop a verified JSON file into the design cache)
    and retry; the message names the missing shape."""


def _searched(params: DesignParams, budget: SearchBudget | None,
              cache_dir=None) -> Design:
    hit = cache_get(params, cache_dir)
    if hit is not None:
        return hit
    res = search(params, budget or SearchBudget())
    if isinstance(res, NotFound):
        raise MissingIngredient(
            f"search certified there is no {params.kind.value} with "
            f"parameters {params.to_json()}")
    if isinstance(res, BudgetExhausted):
        raise MissingIngredient(
            f"search budget exhausted for {params.kind.value} with "
            f"parameters {params.to_json()}; supply it via the cache")
    cache_put(res, cache_dir)
    return res


# ---------------------------------------------------------------------------
# two-dimensional sampling plans excluding contiguous units
# ---------------------------------------------------------------------------

def build_bsec2(n: int, m: int, budget: SearchBudget | None = None,
                cache_dir=None) -> Design:
    """Sampling plan on Z_n x Z_m, semi-cyclic in the column coordinate,
    whose blocks avoid every grid-adjacent pair and cover each remaining
    pair exactly once.

    Three base-block layers, each owning one stratum of the pairs:
    a holey design of type (n,1^m) covers the pairs in distinct rows AND
    distinct columns; per row, a cyclic one-dimensional plan on Z_m covers
    the within-row pairs at distance >= 2; a one-dimensional plan on the
    rows, placed in column 0 and developed with everything else, covers the
    within-column pairs at distance >= 2.
    """
    if n % 6 != 3 or m % 6 != 3 or n < 9 or m < 9:
        raise ValueError(
            f"({n},{m}): this construction needs n, m == 3 (mod 6) "
            "with n, m >= 9")
    holey = build(n, 1, m, budget=budget, cache_dir=cache_dir)
    if holey.design is None:
        raise MissingIngredient("; ".join(holey.skipped))
    row_plan = _searched(DesignParams(kind=Kind.CYCLIC_BSEC1, n=m),
                         budget, cache_dir)
    col_plan = _searched(DesignParams(kind=Kind.CYCLIC_BSEC1, n=n),
                         budget, cache_dir)
    blocks = list(holey.design.base_blocks)
    for i in range(n):
        for b in row_plan.base_blocks:
            blocks.append(block((i, p.coord) for p in b))
    # Developing a cyclic plan over the rows yields a plain plan; its blocks
    # all sit in column 0 and the column development spreads them.
    for b in col_plan.base_blocks:
        for s in range(n):
            blocks.append(block(((p.coord + s) % n, 0) for p in b))
    return Design(params=DesignParams(kind=Kind.BSEC2, n=n, m=m),
                  base_blocks=blocks, provenance=f"bsec2[{n}x{m}]")


# ---------------------------------------------------------------------------
# two-dimensional optical orthogonal codes
# ---------------------------------------------------------------------------

# The optimal 2-row, 4-column code: two weight-3 cell sets of I_2 x Z_4.
CODE_2x4: tuple[tuple[tuple[int, int], ...], ...] = (
    ((0, 0), (0, 1), (1, 0)),
    ((1, 0), (1, 1), (0, 3)),
)

# The 4 blocks of the (unique) grouped triple cover on 3 groups of size 2
# with groups {a_i, b_i}: every cross-group pair exactly once.
_TRIPLE_COVER_2x3 = (
    (("a", 1), ("a", 2), ("a", 3)),
    (("a", 1), ("b", 2), ("b", 3)),
    (("b", 1), ("a", 2), ("b", 3)),
    (("b", 1), ("b", 2), ("a", 3)),
)


def build_ooc_n4(n: int, budget: SearchBudget | None = None,
                 cache_dir=None) -> Design:
    """Optimal (n x 4, 3, 1) optical orthogonal code, n == 0, 2 (mod 6).

    n=2 is the explicit two-word code.  n=6 folds a searched (3 x 8) code.
    For n >= 8, pair up rows j and j+n/2: a semi-cyclic grouped design of
    type 4^(n/2) on the row pairs has each base block doubled into the four
    blocks of the 2x2x2 triple cover (covering all cross-pair row pairs),
    and each row pair additionally carries a copy of the 2x4 code.
    """
    if n % 6 not in (0, 2):
        raise ValueError(f"n={n}: this construction needs n == 0, 2 (mod 6)")
    params = DesignParams(kind=Kind.OOC2D, n=n, m=4, k=(3,), lam=1)
    if n == 2:
        return Design(params=params,
                      base_blocks=[block(w) for w in CODE_2x4],
                      provenance="ooc[2x4 explicit]")
    if n == 6:
        small = _searched(
            DesignParams(kind=Kind.OOC2D, n=3, m=8, k=(3,), lam=1),
            budget, cache_dir)
        folded = fold_ooc(small, 2)
        folded.provenance = "ooc[6x4 from folded 3x8]"
        return folded
    half = n // 2
    scgdd = _searched(DesignParams(kind=Kind.SCGDD, n=half, m=4, k=(3,)),
                      budget, cache_dir)
    words = []
    for bb in scgdd.base_blocks:
        cells = {("a", r + 1): (p.group, p.coord) for r, p in enumerate(bb)}
        cells.update(
            (("b", r + 1), (p.group + half, p.coord))
            for r, p in enumerate(bb))
        for combo in _TRIPLE_COVER_2x3:
            words.append(block(cells[c] for c in combo))
    for j in range(half):
        for w in CODE_2x4:
            words.append(block((j + r * half, c) for r, c in w))
    bound = johnson_bound(n, 4, 3, 1)
    if len(words) != bound:
        raise AssertionError(
            f"(n x 4) code has {len(words)} words, bound is {bound}")
    return Design(params=params, base_blocks=words,
                  provenance=f"ooc[{n}x4 from row pairs]")


def build_ooc_nm(n: int, m: int, budget: SearchBudget | None = None,
                 cache_dir=None) -> Design:
    """Optimal (n x m, 3, 1) optical orthogonal code, n == 0, 2 (mod 6) and
    m == 4 (mod 12).

    For m >= 16 the columns split into classes mod m/4 and three layers own
    disjoint correlation strata: the base blocks of a holey design of type
    (n, 4^(m/4)) (rows distinct, column classes distinct); per row, the base
    blocks of a strictly cyclic grouped design of type 4^(m/4) (same row,
    column difference not a multiple of m/4); and an (n x 4) code spread onto
    the columns {0, m/4, m/2, 3m/4} (differences that are multiples of m/4).
    """
    if n % 6 not in (0, 2) or m % 12 != 4:
        raise ValueError(
            f"({n},{m}): this construction needs n == 0, 2 (mod 6) and "
            "m == 4 (mod 12)")
    if m == 4:
        return build_ooc_n4(n, budget, cache_dir)
    q = m // 4
    holey = build(n, 4, q, budget=budget, cache_dir=cache_dir)
    if holey.design is None:
        raise MissingIngredient("; ".join(holey.skipped))
    row_gdd = _searched(DesignParams(kind=Kind.CYCLIC_GDD, n=q, m=4, k=(3,)),
                        budget, cache_dir)
    col_code = build_ooc_n4(n, budget, cache_dir)
    words = list(holey.design.base_blocks)
    for i in range(n):
        for bb in row_gdd.base_blocks:
            words.append(block((i, p.coord) for p in bb))
    for w in col_code.base_blocks:
        words.append(block((p.group, p.coord * q) for p in w))
    bound = johnson_bound(n, m, 3, 1)
    closed = n * (n * m - 2) // 6
    if closed != bound:
        raise AssertionError(
            f"count formula {closed} disagrees with bound {bound}")
    if len(words) != bound:
        raise AssertionError(
            f"(n x m) code has {len(words)} words, bound is {bound}")
    return Design(params=DesignParams(kind=Kind.OOC2D, n=n, m=m, k=(3,),
                                      lam=1),
                  base_blocks=words, provenance=f"ooc[{n}x{m} three-layer]")


def fold_ooc(code: Design, m1: int) -> Design:
    """Fold the column coordinate of an optical orthogonal code: m = m1*m2
    columns become m1 row layers of m2 columns, and each codeword
    contributes its m1 column shifts.

    Cell map: (i, j) -> (i + n*(j mod m1), j div m1).  A new-column shift by
    r equals an old-column shift by m1*r uniformly, so every correlation at
    the new period is one the old code already bounded; the word count
    multiplies by m1.
    """
    n, m = code.params.n, code.params.m
    if m1 < 1 or m % m1 != 0:
        raise ValueError(f"m1={m1} does not divide the column period {m}")
    m2 = m // m1
    words = []
    for w in code.base_blocks:
        for s in range(m1):
            words.append(block(
                (p.group + n * ((p.coord + s) % m % m1),
                 (p.coord + s) % m // m1)
                for p in w))
    params = DesignParams(kind=Kind.OOC2D, n=n * m1, m=m2,
                          k=code.params.k, lam=code.params.lam)
    return Design(params=params, base_blocks=words,
                  provenance=f"fold[m1={m1}; {code.provenance}]")
