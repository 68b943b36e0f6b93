"""Hand-tabulated base-block families for holey triple designs on small grids.

Each family covers one parameter shape (fixed row count n and a pattern in
the hole size m / hole count t) and is stored as one table function that
emits the block list for given parameters.  Everything here is data entry:
the only logic is expanding index ranges.  Every emitted design is expected
to pass ``verify.verify_schgdd``; a failure indicates a table typo, never a
caller error.

Conventions
-----------
* A table lists either all base blocks or an *initial* set that still has to
  be spread over the rows; ``develop_rows`` does the spreading.  Six-row
  tables use five cyclic rows plus one fixed row (held as row index 5).
* Index ranges ``[a,b]`` are inclusive; a range whose upper end is below its
  lower end is empty.  ``skip`` removes listed indices, ``drop_mod``
  removes indices in a residue class.
* Coordinates are reduced modulo the column modulus ``L`` on entry, so the
  tables can be typed exactly as derived (including negative or >= L
  values).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .core import (
    BaseBlock,
    Design,
    DesignParams,
    Kind,
    block,
    develop_rows,
    expected_base_block_count,
)

INF = 5  # fixed-row index used by the six-row tables


def _rng(lo: int, hi: int, skip=(), drop_mod: tuple[int, int] | None = None) -> list[int]:
    """Inclusive range [lo, hi] minus ``skip``; ``drop_mod=(r, v)`` removes
    i = r (mod v)."""
    out = []
    banned = set(skip)
    for i in range(lo, hi + 1):
        if i in banned:
            continue
        if drop_mod is not None and i % drop_mod[1] == drop_mod[0]:
            continue
        out.append(i)
    return out


def _b(L: int, *pts: tuple[int, int]) -> BaseBlock:
    """Block with coordinates reduced mod L (rows untouched)."""
    return block((g, c % L) for g, c in pts)


# ---------------------------------------------------------------------------
# four rows, hole size 2, t even  ->  type (4, 2^t)
# ---------------------------------------------------------------------------

def table_4_2t(t: int) -> list[BaseBlock]:
    """All 4(t-1) base blocks on I_4 x Z_2t, t even >= 4."""
    L = 2 * t
    h = t // 2
    bs: list[BaseBlock] = []
    for i in _rng(1, t - 1, skip={h - 1, h}):
        bs.append(_b(L, (0, 0), (1, i), (2, 2 * i)))
    for i in _rng(1, t - 1, skip={h, h + 1}):
        bs.append(_b(L, (0, 0), (1, t + i), (3, t - i)))
    for i in _rng(1, t - 2):
        bs.append(_b(L, (0, 0), (2, 2 * i + 1), (3, t + i)))
    for i in _rng(1, t - 2):
        bs.append(_b(L, (1, 0), (2, t + i), (3, 2 * i + 1)))
    bs += [
        _b(L, (0, 0), (1, 3 * h + 1), (2, 1)),
        _b(L, (0, 0), (1, h - 1), (3, h)),
        _b(L, (0, 0), (2, t - 2), (3, 2 * t - 1)),
        _b(L, (0, 0), (1, 3 * h), (2, 2 * t - 1)),
        _b(L, (0, 0), (1, h), (3, h - 1)),
        _b(L, (1, 0), (2, 2 * t - 1), (3, t - 2)),
    ]
    return bs


# ---------------------------------------------------------------------------
# five rows, four holes of odd size m = 1,5 (mod 6), m >= 5  ->  type (5, m^4)
# ---------------------------------------------------------------------------

def table_5_m4(m: int) -> list[BaseBlock]:
    """2m initial blocks on Z_5 x Z_4m (spread over rows afterwards)."""
    L = 4 * m
    if m == 5:
        return [
            _b(L, (0, 0), (1, 6), (2, 19)),
            _b(L, (0, 0), (1, 1), (2, 18)),
            _b(L, (0, 0), (1, 3), (2, 17)),
            _b(L, (0, 0), (1, 10), (2, 9)),
            _b(L, (0, 0), (1, 9), (2, 7)),
            _b(L, (0, 0), (1, 2), (3, 7)),
            _b(L, (0, 0), (1, 5), (3, 6)),
            _b(L, (0, 0), (1, 7), (3, 9)),
            _b(L, (0, 0), (1, 11), (3, 14)),
            _b(L, (0, 0), (1, 15), (3, 5)),
        ]
    bs: list[BaseBlock] = []
    # first part: m + 2 blocks
    for i in _rng(0, m - 2, skip={(m - 1) // 2}):
        bs.append(_b(L, (0, 0), (1, 2 * m - 4 - 4 * i), (3, 4 * m - 3 - 2 * i)))
    bs += [
        _b(L, (0, 0), (1, 2 * m - 1), (3, 4 * m - 1)),
        _b(L, (0, 0), (1, 4 * m - 1), (3, 1)),
        _b(L, (0, 0), (1, 2 * m), (2, 3 * m)),
        _b(L, (0, 0), (1, 4 * m - 2), (2, m + 2)),
    ]
    # second part: m - 2 blocks, split on m mod 12
    if m % 12 in (7, 11):
        for i in _rng(0, (m - 7) // 4):
            bs.append(_b(L, (0, 0), (1, 2 * m + 1 - 4 * i), (2, 2 * m - 4 - 8 * i)))
        for i in _rng(0, (m - 7) // 4):
            bs.append(_b(L, (0, 0), (1, 2 * m - 5 - 4 * i), (2, 2 * m - 8 - 8 * i)))
        for i in _rng(0, (m - 3) // 2):
            bs.append(_b(L, (0, 0), (1, 1 + 2 * i), (2, 2 * m + 4 + 4 * i)))
    else:  # m = 1,5 (mod 12), m >= 13
        for i in _rng(0, (m - 9) // 4):
            bs.append(_b(L, (0, 0), (1, 2 * m + 1 - 4 * i), (2, 2 * m - 4 - 8 * i)))
        for i in _rng(0, (m - 13) // 4):
            bs.append(_b(L, (0, 0), (1, 2 * m - 5 - 4 * i), (2, 2 * m - 8 - 8 * i)))
        bs += [
            _b(L, (0, 0), (1, m - 2), (2, 2 * m + 4)),
            _b(L, (0, 0), (1, 3 * m + 2), (2, 2 * m + 8)),
            _b(L, (0, 0), (1, 1), (2, 6)),
            _b(L, (0, 0), (1, 2 * m + 3), (2, 10)),
            _b(L, (0, 0), (1, 9), (2, 2 * m + 20)),
        ]
        if m % 12 == 1:
            for i in _rng(0, (m - 13) // 6):
                bs.append(_b(L, (0, 0), (1, 15 + 6 * i), (2, 2 * m + 24 + 12 * i)))
            for i in _rng(0, (m - 19) // 6):
                bs.append(_b(L, (0, 0), (1, 13 + 6 * i), (2, 2 * m + 32 + 12 * i)))
            for i in _rng(0, (m - 19) // 6):
                bs.append(_b(L, (0, 0), (1, 11 + 6 * i), (2, 2 * m + 28 + 12 * i)))
            bs += [
                _b(L, (0, 0), (1, 3), (2, 2 * m + 16)),
                _b(L, (0, 0), (1, 7), (2, 2 * m + 12)),
            ]
        else:  # m = 5 (mod 12), m >= 17
            for i in _rng(0, (m - 17) // 6):
                bs.append(_b(L, (0, 0), (1, 19 + 6 * i), (2, 2 * m + 32 + 12 * i)))
            for i in _rng(0, (m - 23) // 6):
                bs.append(_b(L, (0, 0), (1, 17 + 6 * i), (2, 2 * m + 40 + 12 * i)))
            for i in _rng(0, (m - 23) // 6):
                bs.append(_b(L, (0, 0), (1, 15 + 6 * i), (2, 2 * m + 36 + 12 * i)))
            bs += [
                _b(L, (0, 0), (1, 3), (2, 2 * m + 12)),
                _b(L, (0, 0), (1, 7), (2, 2 * m + 24)),
                _b(L, (0, 0), (1, 11), (2, 2 * m + 16)),
                _b(L, (0, 0), (1, 13), (2, 2 * m + 28)),
            ]
    return bs


# ---------------------------------------------------------------------------
# five rows, hole size 3, t even  ->  type (5, 3^t)
# ---------------------------------------------------------------------------

def table_5_3t(t: int) -> list[BaseBlock]:
    """2(t-1) initial blocks (rows 0..3 of Z_5) on Z_5 x Z_3t, t even >= 4."""
    L = 3 * t
    h = t // 2
    bs: list[BaseBlock] = []
    for i in _rng(1, t - 1, skip={h - 1, h}):
        bs.append(_b(L, (0, 0), (1, i), (2, 2 * i + 2 * t)))
    for i in _rng(2, t - 1):
        bs.append(_b(L, (0, 0), (1, t + i), (3, 2 * t - i + 1)))
    bs += [
        _b(L, (0, 0), (1, 5 * h), (2, 2 * t - 1)),
        _b(L, (0, 0), (1, h), (2, t - 1)),
        _b(L, (0, 0), (1, t + 1), (3, 2)),
    ]
    return bs


# ---------------------------------------------------------------------------
# five rows, hole size 1, t = 4 (mod 6), t >= 10  ->  type (5, 1^t)
# ---------------------------------------------------------------------------

def table_5_1t(t: int) -> list[BaseBlock]:
    """2(t-1)/3 initial blocks on Z_5 x Z_t."""
    L = t
    a = (t - 1) // 3
    bs: list[BaseBlock] = []
    for i in _rng(1, (t - 4) // 3, skip={(t + 2) // 6}):
        bs.append(_b(L, (0, 0), (1, i), (2, 2 * a + 2 * i)))
    for i in _rng(1, (t - 4) // 3, skip={(t - 4) // 6}):
        bs.append(_b(L, (0, 0), (1, a + i), (3, 2 * a - i)))
    bs += [
        _b(L, (0, 0), (1, (t + 2) // 6), (2, t // 2)),
        _b(L, (0, 0), (1, t // 2 - 1), (2, (t - 4) // 3)),
        _b(L, (0, 0), (1, 2 * a), (3, t - 1)),
        _b(L, (0, 0), (1, t - 1), (3, a)),
    ]
    return bs


# ---------------------------------------------------------------------------
# six rows (five cyclic + one fixed), eight holes  ->  types (6, 2^8), (6, 4^8)
# ---------------------------------------------------------------------------

def table_6_2_8() -> list[BaseBlock]:
    """14 initial blocks on (Z_5 + fixed row) x Z_16."""
    L = 16
    F = INF
    return [
        _b(L, (0, 0), (1, 1), (3, 2)),
        _b(L, (0, 0), (3, 1), (2, 2)),
        _b(L, (0, 0), (F, 1), (1, 2)),
        _b(L, (0, 0), (4, 2), (F, 4)),
        _b(L, (0, 0), (1, 3), (3, 6)),
        _b(L, (0, 0), (3, 3), (2, 6)),
        _b(L, (0, 0), (F, 3), (1, 7)),
        _b(L, (0, 0), (1, 4), (2, 9)),
        _b(L, (0, 0), (2, 4), (F, 10)),
        _b(L, (0, 0), (3, 4), (1, 9)),
        _b(L, (0, 0), (4, 4), (3, 9)),
        _b(L, (0, 0), (2, 5), (F, 14)),
        _b(L, (0, 0), (F, 5), (1, 10)),
        _b(L, (0, 0), (1, 6), (F, 13)),
    ]


def table_6_4_8() -> list[BaseBlock]:
    """28 initial blocks on (Z_5 + fixed row) x Z_32."""
    L = 32
    F = INF
    return [
        _b(L, (0, 0), (3, 4), (F, 9)),
        _b(L, (0, 0), (4, 4), (2, 9)),
        _b(L, (0, 0), (1, 6), (F, 12)),
        _b(L, (0, 0), (4, 6), (1, 13)),
        _b(L, (0, 0), (1, 7), (4, 14)),
        _b(L, (0, 0), (4, 7), (1, 17)),
        _b(L, (0, 0), (F, 7), (1, 14)),
        _b(L, (0, 0), (4, 9), (1, 20)),
        _b(L, (0, 0), (1, 10), (2, 21)),
        _b(L, (0, 0), (3, 10), (2, 20)),
        _b(L, (0, 0), (F, 10), (2, 6)),
        _b(L, (0, 0), (1, 1), (3, 2)),
        _b(L, (0, 0), (3, 1), (2, 2)),
        _b(L, (0, 0), (F, 1), (1, 2)),
        _b(L, (0, 0), (4, 2), (1, 5)),
        _b(L, (0, 0), (F, 2), (1, 4)),
        _b(L, (0, 0), (1, 3), (2, 12)),
        _b(L, (0, 0), (3, 3), (1, 12)),
        _b(L, (0, 0), (4, 3), (2, 17)),
        _b(L, (0, 0), (F, 3), (2, 14)),
        _b(L, (0, 0), (2, 4), (F, 23)),
        _b(L, (0, 0), (2, 5), (F, 20)),
        _b(L, (0, 0), (4, 5), (F, 22)),
        _b(L, (0, 0), (3, 6), (1, 19)),
        _b(L, (0, 0), (4, 11), (F, 29)),
        _b(L, (0, 0), (F, 11), (3, 17)),
        _b(L, (0, 0), (2, 13), (F, 27)),
        _b(L, (0, 0), (F, 13), (4, 17)),
    ]


# ---------------------------------------------------------------------------
# six rows, three holes of odd size m >= 5  ->  type (6, m^3)
# ---------------------------------------------------------------------------

def table_6_m3(m: int) -> list[BaseBlock]:
    """2m initial blocks on (Z_5 + fixed row) x Z_3m, m odd >= 5."""
    L = 3 * m
    F = INF
    bs: list[BaseBlock] = []
    if m % 4 == 1:
        for i in _rng(0, (3 * m - 7) // 2, drop_mod=(2, 3)):
            bs.append(_b(L, (0, 0), (1, 1 + i), (2, (3 * m + 7) // 2 + 2 * i)))
        for i in _rng(0, (3 * m - 23) // 4, drop_mod=(2, 3)):
            bs.append(_b(L, (0, 0), (2, 5 + 2 * i), (F, (3 * m + 5) // 2 + i)))
        for i in _rng(0, (3 * m - 11) // 4, drop_mod=(2, 3)):
            bs.append(_b(L, (0, 0), (2, (3 * m + 1) // 2 + 2 * i), (F, (9 * m - 5) // 4 + i)))
        bs += [
            _b(L, (0, 0), (2, (3 * m - 5) // 2), (F, 3 * m - 2)),
            _b(L, (0, 0), (2, 3 * m - 1), (F, (3 * m + 1) // 4)),
            _b(L, (0, 0), (1, (3 * m + 1) // 2), (F, (3 * m - 1) // 2)),
            _b(L, (0, 0), (1, (3 * m - 1) // 2), (3, (3 * m + 1) // 2)),
        ]
    else:  # m = 3 (mod 4), m >= 7
        for i in _rng(0, (3 * m - 9) // 2, drop_mod=(2, 3)):
            bs.append(_b(L, (0, 0), (1, 1 + i), (2, (3 * m + 7) // 2 + 2 * i)))
        for i in _rng(0, (3 * m - 9) // 4, drop_mod=(1, 3)):
            bs.append(_b(L, (0, 0), (2, 4 + 2 * i), (F, (3 * m + 7) // 2 + i)))
        for i in _rng(0, (3 * m - 21) // 4, drop_mod=(2, 3)):
            bs.append(_b(L, (0, 0), (2, (3 * m + 13) // 2 + 2 * i), (F, (9 * m + 13) // 4 + i)))
        bs += [
            _b(L, (0, 0), (2, (3 * m - 7) // 2), (F, 3 * m - 1)),
            _b(L, (0, 0), (1, 3 * m - 1), (F, (3 * m - 5) // 4)),
            _b(L, (0, 0), (1, (3 * m + 1) // 2), (F, 1)),
            _b(L, (0, 0), (1, (3 * m - 1) // 2), (3, 2)),
            _b(L, (0, 0), (1, (3 * m - 5) // 2), (3, 3 * m - 2)),
        ]
    return bs


# ---------------------------------------------------------------------------
# six rows, hole size 2, t = 2 (mod 4)  ->  type (6, 2^t)
# ---------------------------------------------------------------------------

def table_6_2t(t: int) -> list[BaseBlock]:
    """2(t-1) initial blocks on (Z_5 + fixed row) x Z_2t, t = 2 (mod 4), t >= 6."""
    L = 2 * t
    F = INF
    h = t // 2
    bs: list[BaseBlock] = []
    for i in _rng(0, t - 3, skip={h - 3, h - 2}):
        bs.append(_b(L, (0, 0), (1, 2 + i), (2, t + 4 + 2 * i)))
    for i in _rng(0, t - 4, skip={h - 2}):
        bs.append(_b(L, (0, 0), (2, 3 + 2 * i), (F, t + 2 + i)))
    bs += [
        _b(L, (0, 0), (1, 3 * h - 1), (2, t - 1)),
        _b(L, (0, 0), (2, 2 * t - 1), (F, 1)),
        _b(L, (0, 0), (1, h - 1), (F, 2 * t - 1)),
        _b(L, (0, 0), (1, h), (F, t + 1)),
        _b(L, (0, 0), (1, 1), (3, 2)),
        _b(L, (0, 0), (1, t + 1), (3, 3)),
    ]
    return bs


# ---------------------------------------------------------------------------
# n rows (n = 5 mod 6), four holes of size 3  ->  type (n, 3^4)
# ---------------------------------------------------------------------------

def table_n_34(n: int) -> list[BaseBlock]:
    """3(n-1)/2 initial blocks on Z_n x Z_12."""
    L = 12
    if n == 5:
        return [
            _b(L, (0, 0), (1, 1), (4, 3)),
            _b(L, (0, 0), (2, 1), (3, 3)),
            _b(L, (0, 0), (2, 2), (3, 5)),
            _b(L, (0, 0), (4, 2), (1, 5)),
            _b(L, (0, 0), (3, 1), (2, 6)),
            _b(L, (0, 0), (4, 1), (1, 6)),
        ]
    if n == 11:
        return [
            _b(L, (0, 0), (6, 1), (1, 3)),
            _b(L, (0, 0), (1, 2), (3, 5)),
            _b(L, (0, 0), (1, 1), (3, 6)),
            _b(L, (0, 0), (7, 1), (3, 3)),
            _b(L, (0, 0), (5, 2), (4, 5)),
            _b(L, (0, 0), (4, 1), (5, 6)),
            _b(L, (0, 0), (8, 1), (5, 3)),
            _b(L, (0, 0), (4, 2), (8, 5)),
            _b(L, (0, 0), (5, 1), (1, 6)),
            _b(L, (0, 0), (9, 1), (7, 3)),
            _b(L, (0, 0), (3, 2), (9, 5)),
            _b(L, (0, 0), (3, 1), (9, 6)),
            _b(L, (0, 0), (10, 1), (9, 3)),
            _b(L, (0, 0), (2, 2), (10, 5)),
            _b(L, (0, 0), (2, 1), (7, 6)),
        ]
    # n = 6s + 5, s >= 2
    s = (n - 5) // 6
    bs: list[BaseBlock] = []
    # first part: 6s + 7 blocks
    for i in _rng(0, 3 * s + 1):
        bs.append(_b(L, (0, 0), (1 + i, 1), (2 + 2 * i, 3)))
    for i in _rng(0, 3 * s):
        bs.append(_b(L, (0, 0), (6 * s + 4 - i, 2), (2 + i, 5)))
    bs += [
        _b(L, (0, 0), (3 * s + 3, 2), (3 * s + 4, 5)),
        _b(L, (0, 0), (3 * s + 3, 1), (1, 6)),
        _b(L, (0, 0), (6 * s + 2, 1), (6 * s + 3, 6)),
        _b(L, (0, 0), (6 * s + 4, 1), (6 * s + 2, 6)),
    ]
    # second part: 3s - 1 blocks
    if s % 2 == 0:
        for i in _rng(0, 3 * s // 2 - 3):
            bs.append(_b(L, (0, 0), (3 * s + 4 + i, 1), (4 + 2 * i, 6)))
        for i in _rng(0, s // 2 - 2):
            bs.append(_b(L, (0, 0), (9 * s // 2 + 5 + 3 * i, 1), (3 * s + 8 + 6 * i, 6)))
        for i in _rng(0, s // 2 - 2):
            bs.append(_b(L, (0, 0), (9 * s // 2 + 7 + 3 * i, 1), (3 * s + 12 + 6 * i, 6)))
        for i in _rng(0, s // 2 - 2):
            bs.append(_b(L, (0, 0), (9 * s // 2 + 9 + 3 * i, 1), (3 * s + 10 + 6 * i, 6)))
        bs += [
            _b(L, (0, 0), (9 * s // 2 + 2, 1), (3 * s + 2, 6)),
            _b(L, (0, 0), (9 * s // 2 + 3, 1), (3 * s + 1, 6)),
            _b(L, (0, 0), (9 * s // 2 + 4, 1), (3 * s + 6, 6)),
            _b(L, (0, 0), (9 * s // 2 + 6, 1), (3 * s + 5, 6)),
        ]
    else:
        for i in _rng(0, (3 * s - 5) // 2):
            bs.append(_b(L, (0, 0), (3 * s + 4 + i, 1), (4 + 2 * i, 6)))
        for i in _rng(0, (s - 3) // 2):
            bs.append(_b(L, (0, 0), ((9 * s + 11) // 2 + 3 * i, 1), (3 * s + 9 + 6 * i, 6)))
        for i in _rng(0, (s - 3) // 2):
            bs.append(_b(L, (0, 0), ((9 * s + 15) // 2 + 3 * i, 1), (3 * s + 7 + 6 * i, 6)))
        for i in _rng(0, (s - 5) // 2):
            bs.append(_b(L, (0, 0), ((9 * s + 13) // 2 + 3 * i, 1), (3 * s + 11 + 6 * i, 6)))
        bs += [
            _b(L, (0, 0), ((9 * s + 5) // 2, 1), (3 * s + 4, 6)),
            _b(L, (0, 0), ((9 * s + 7) // 2, 1), (3 * s + 2, 6)),
            _b(L, (0, 0), ((9 * s + 9) // 2, 1), (3 * s + 5, 6)),
        ]
    return bs


# ---------------------------------------------------------------------------
# quasi-skew starters in Z_n: small table + eight parametric cases
# ---------------------------------------------------------------------------

# one row per small s = (n-1)/2 not covered by the parametric cases below
SMALL_STARTERS: dict[int, list[tuple[int, int]]] = {
    3: [(1, 5), (2, 3), (4, 6)],
    4: [(1, 5), (3, 4), (2, 8), (6, 7)],
    5: [(1, 6), (2, 8), (3, 5), (4, 9), (7, 10)],
    6: [(1, 7), (2, 10), (3, 8), (4, 6), (5, 12), (9, 11)],
    7: [(1, 11), (2, 9), (4, 5), (6, 8), (3, 14), (7, 13), (10, 12)],
    8: [(1, 14), (2, 10), (3, 11), (4, 6), (7, 9), (5, 16), (8, 15), (12, 13)],
    10: [(1, 15), (2, 16), (3, 14), (4, 9), (6, 8), (7, 13), (5, 18),
         (10, 17), (11, 19), (12, 20)],
    11: [(1, 13), (2, 18), (4, 14), (5, 11), (6, 16), (7, 12), (8, 9),
         (3, 22), (10, 21), (15, 20), (17, 19)],
    13: [(1, 15), (2, 18), (4, 13), (5, 19), (7, 11), (8, 14), (10, 16),
         (3, 26), (6, 25), (9, 24), (12, 23), (17, 22), (20, 21)],
    14: [(1, 15), (2, 18), (4, 20), (5, 13), (6, 22), (7, 19), (9, 16),
         (10, 12), (3, 28), (8, 27), (11, 26), (14, 25), (17, 24), (21, 23)],
}

# minimum s at which the parametric case for s mod 8 kicks in
_PARAM_MIN = {0: 16, 1: 9, 2: 18, 3: 19, 4: 12, 5: 21, 6: 22, 7: 15}


def _starter_param(s: int) -> list[tuple[int, int]]:
    n = 2 * s + 1
    r = s % 8
    if s == 20:
        # Table defect: the two excluded indices of the second run for the
        # s = 4 (mod 8) case, (3s-12)/8 and s/4+1, coincide exactly at s=20,
        # so the tabulated row degenerates to 21 pairs with elements 17 and
        # 36 doubled.  Quarantined rather than silently repaired.
        raise ValueError(
            "starter table degenerates at s=20 (n=41): exclusion indices "
            "(3s-12)/8 and s/4+1 coincide; no valid row is tabulated")
    pairs: list[tuple[int, int]] = []

    def add(x: int, y: int) -> None:
        pairs.append((x % n, y % n))

    if r == 0:
        for i in _rng(1, s // 2 - 1, skip={s // 8 + 1, s // 4}):
            add(i, i + s)
        for i in _rng(2, s // 2 - 1, skip={3 * s // 8 + 1}):
            add(i + s // 2 + 1, i - s // 2 - 1)
        add(s // 2, s // 2 + 1)
        add(5 * s // 4, 3 * s // 2)
        add(s // 8 + 1, 15 * s // 8 + 1)
        add(3 * s // 2 + 1, 2 * s)
        add(s // 4, s // 2 + 2)
        add(7 * s // 8 + 2, 9 * s // 8 + 1)
    elif r == 1:
        for i in _rng(1, (s - 3) // 2, skip={(s - 1) // 8, (s - 1) // 4}):
            add(i, i + s)
        for i in _rng(1, (s - 3) // 2, skip={(3 * s - 11) // 8}):
            add(i + (s + 3) // 2, i - (s + 3) // 2 + 1)
        add((s - 1) // 8, (15 * s - 7) // 8)
        add((s + 3) // 2, (s - 1) // 4)
        add((s - 1) // 2, (s + 1) // 2)
        add((7 * s + 1) // 8, (9 * s - 1) // 8)
        add((3 * s - 1) // 2, (5 * s - 1) // 4)
        add((3 * s + 1) // 2, 2 * s)
    elif r == 2:
        for i in _rng(2, s // 2 - 1, skip={(s + 6) // 8}):
            add(i, i + s)
        for i in _rng(2, s // 2 - 1, skip={(s - 2) // 4, (3 * s + 10) // 8}):
            add(i + s // 2 + 1, i - s // 2 - 1)
        add(s // 2, s // 2 + 2)
        add((7 * s + 18) // 8, (9 * s + 6) // 8)
        add((s + 6) // 8, (15 * s + 10) // 8)
        add(s // 2 + 1, (3 * s + 2) // 4)
        add(3 * s // 2, (7 * s - 2) // 4)
        add(1, 3 * s // 2 + 1)
        add(s + 1, 2 * s)
    elif r == 3:
        for i in _rng(1, (s - 3) // 2, skip={(s - 3) // 8}):
            add(i, i + s)
        for i in _rng(1, (s - 3) // 2, skip={(3 * s - 9) // 8, (s + 1) // 4}):
            add(i + (s + 3) // 2, i - (s + 3) // 2 + 1)
        add((s - 3) // 8, (15 * s - 5) // 8)
        add((s + 1) // 2, (3 * s + 7) // 4)
        add((3 * s + 1) // 2, 2 * s)
        add((7 * s + 3) // 8, (9 * s - 3) // 8)
        add((3 * s - 1) // 2, (7 * s + 3) // 4)
        add((s - 1) // 2, (s + 3) // 2)
    elif r == 4:
        for i in _rng(1, s // 2 - 1, skip={(s + 4) // 8}):
            add(i, i + s)
        for i in _rng(2, s // 2 - 1, skip={(3 * s - 12) // 8, s // 4 + 1}):
            add(i + s // 2 + 1, i - s // 2 - 1)
        add((s + 4) // 8, (15 * s - 12) // 8)
        add(3 * s // 2 + 1, 7 * s // 4 + 1)
        add(3 * s // 2, 2 * s)
        add((7 * s - 4) // 8, (9 * s + 4) // 8)
        add(s // 2 + 2, 3 * s // 4 + 2)
        add(s // 2, s // 2 + 1)
    elif r == 5:
        for i in _rng(1, (s - 3) // 2, skip={(s + 11) // 8, (s - 1) // 4}):
            add(i, i + s)
        for i in _rng(1, (s - 3) // 2, skip={(3 * s + 1) // 8}):
            add(i + (s + 3) // 2, i - (s + 1) // 2)
        add((3 * s - 1) // 2, (5 * s - 1) // 4)
        add((9 * s + 11) // 8, (7 * s + 13) // 8)
        add((s - 1) // 2, (s + 1) // 2)
        add((s + 3) // 2, (s - 1) // 4)
        add((3 * s + 1) // 2, 2 * s)
        add((s + 11) // 8, (15 * s + 5) // 8)
    elif r == 6:
        for i in _rng(2, s // 2 - 1, skip={(s - 6) // 8}):
            add(i, i + s)
        for i in _rng(2, s // 2 - 1, skip={(3 * s - 2) // 8, (s - 2) // 4}):
            add(i + s // 2 + 1, i - s // 2 - 1)
        add((s - 6) // 8, (15 * s - 2) // 8)
        add(3 * s // 2, (7 * s - 2) // 4)
        add(1, 3 * s // 2 + 1)
        add(s + 1, 2 * s)
        add((7 * s + 6) // 8, (9 * s - 6) // 8)
        add(s // 2 + 1, (3 * s + 2) // 4)
        add(s // 2, s // 2 + 2)
    else:  # r == 7
        for i in _rng(1, (s - 3) // 2, skip={(s + 9) // 8}):
            add(i, i + s)
        for i in _rng(1, (s - 3) // 2, skip={(s + 1) // 4, (3 * s + 3) // 8}):
            add(i + (s + 3) // 2, i + (3 * s + 1) // 2)
        add((9 * s + 9) // 8, (7 * s + 15) // 8)
        add((3 * s + 1) // 2, 2 * s)
        add((3 * s - 1) // 2, (7 * s + 3) // 4)
        add((s - 1) // 2, (s + 3) // 2)
        add((s + 9) // 8, (15 * s + 7) // 8)
        add((s + 1) // 2, (3 * s + 7) // 4)
    return pairs


def quasi_skew_starter(n: int) -> list[tuple[int, int]]:
    """Pairs {x,y} partitioning Z_n \\ {0} whose sums +-(x+y) also sweep
    Z_n \\ {0}.  Defined for odd n >= 7."""
    if n < 7 or n % 2 == 0:
        raise ValueError(f"starter requires odd n >= 7, got {n}")
    s = (n - 1) // 2
    if s in SMALL_STARTERS:
        return list(SMALL_STARTERS[s])
    if s < _PARAM_MIN[s % 8]:
        raise ValueError(f"no starter table row for s={s}")
    return _starter_param(s)


def schgdd_n_1_4_from_starter(n: int) -> Design:
    """Type (n, 1^4) from a quasi-skew starter: blocks
    {(i,0), (x+i,1), (x+y+i,2)} over all starter pairs {x,y} and i in Z_n."""
    pairs = quasi_skew_starter(n)
    initial = [block([(0, 0), (x % n, 1), ((x + y) % n, 2)]) for x, y in pairs]
    params = DesignParams(kind=Kind.SCHGDD, n=n, m=1, t=4)
    bs = develop_rows(initial, n)
    return Design(params=params, base_blocks=bs, provenance=f"direct:nx14(n={n})")


# ---------------------------------------------------------------------------
# family registry
# ---------------------------------------------------------------------------

class FamilyId(str, Enum):
    F4_2T = "4x2t"      # type (4, 2^t), t even >= 4
    F5_M4 = "5xm4"      # type (5, m^4), m = 1,5 (mod 6), m >= 5
    F5_3T = "5x3t"      # type (5, 3^t), t even >= 4
    F5_1T = "5x1t"      # type (5, 1^t), t = 4 (mod 6), t >= 10
    F6_2_8 = "6x2_8"    # type (6, 2^8)
    F6_4_8 = "6x4_8"    # type (6, 4^8)
    F6_M3 = "6xm3"      # type (6, m^3), m odd >= 5
    F6_2T = "6x2t"      # type (6, 2^t), t = 2 (mod 4), t >= 6
    FN_14 = "nx14"      # type (n, 1^4), n odd >= 7, from a starter
    FN_34 = "nx34"      # type (n, 3^4), n = 5 (mod 6)


@dataclass(frozen=True)
class _FamilySpec:
    fid: FamilyId
    applies: Callable[[int, int, int], bool]
    build: Callable[[int, int, int], list[BaseBlock]]
    develop: int  # 0 = blocks listed in full; else row modulus for develop_rows
    fixed_rows: frozenset[int] = frozenset()


_REGISTRY: list[_FamilySpec] = [
    _FamilySpec(FamilyId.F4_2T,
                lambda n, m, t: n == 4 and m == 2 and t >= 4 and t % 2 == 0,
                lambda n, m, t: table_4_2t(t), develop=0),
    _FamilySpec(FamilyId.F5_M4,
                lambda n, m, t: n == 5 and t == 4 and m >= 5 and m % 6 in (1, 5),
                lambda n, m, t: table_5_m4(m), develop=5),
    _FamilySpec(FamilyId.F5_3T,
                lambda n, m, t: n == 5 and m == 3 and t >= 4 and t % 2 == 0,
                lambda n, m, t: table_5_3t(t), develop=5),
    _FamilySpec(FamilyId.F5_1T,
                lambda n, m, t: n == 5 and m == 1 and t >= 10 and t % 6 == 4,
                lambda n, m, t: table_5_1t(t), develop=5),
    _FamilySpec(FamilyId.F6_2_8,
                lambda n, m, t: (n, m, t) == (6, 2, 8),
                lambda n, m, t: table_6_2_8(), develop=5, fixed_rows=frozenset({INF})),
    _FamilySpec(FamilyId.F6_4_8,
                lambda n, m, t: (n, m, t) == (6, 4, 8),
                lambda n, m, t: table_6_4_8(), develop=5, fixed_rows=frozenset({INF})),
    _FamilySpec(FamilyId.F6_M3,
                lambda n, m, t: n == 6 and t == 3 and m >= 5 and m % 2 == 1,
                lambda n, m, t: table_6_m3(m), develop=5, fixed_rows=frozenset({INF})),
    _FamilySpec(FamilyId.F6_2T,
                lambda n, m, t: n == 6 and m == 2 and t >= 6 and t % 4 == 2,
                lambda n, m, t: table_6_2t(t), develop=5, fixed_rows=frozenset({INF})),
    _FamilySpec(FamilyId.FN_14,
                lambda n, m, t: m == 1 and t == 4 and n >= 7 and n % 2 == 1,
                lambda n, m, t: [], develop=0),  # built via starter path below
    _FamilySpec(FamilyId.FN_34,
                lambda n, m, t: m == 3 and t == 4 and n % 6 == 5,
                lambda n, m, t: table_n_34(n), develop=-1),  # -1: develop over n rows
]

_BY_ID = {spec.fid: spec for spec in _REGISTRY}


def family_applies(fid: FamilyId, n: int, m: int, t: int) -> bool:
    return _BY_ID[fid].applies(n, m, t)


def find_family(n: int, m: int, t: int) -> FamilyId | None:
    """First registered family whose applicability predicate accepts (n,m,t)."""
    for spec in _REGISTRY:
        if spec.applies(n, m, t):
            return spec.fid
    return None


def build_family(fid: FamilyId, n: int, m: int, t: int) -> Design:
    """Expand the family's table at (n, m, t).  Raises ValueError when the
    parameters are outside the family's shape; the output carries exactly
    (t-1)n(n-1)m/6 base blocks (asserted)."""
    spec = _BY_ID[FamilyId(fid)]
    if not spec.applies(n, m, t):
        raise ValueError(f"family {spec.fid.value} not applicable at (n,m,t)=({n},{m},{t})")
    if spec.fid == FamilyId.FN_14:
        return schgdd_n_1_4_from_starter(n)
    listed = spec.build(n, m, t)
    if spec.develop == 0:
        bs = list(listed)
    elif spec.develop == -1:
        bs = develop_rows(listed, n)
    else:
        bs = develop_rows(listed, spec.develop, spec.fixed_rows)
    expected = expected_base_block_count(n, m, t)
    assert len(bs) == expected, (
        f"family {spec.fid.value} at ({n},{m},{t}): {len(bs)} blocks, expected {expected}")
    params = DesignParams(kind=Kind.SCHGDD, n=n, m=m, t=t)
    return Design(params=params, base_blocks=bs,
                  provenance=f"direct:{spec.fid.value}(n={n},m={m},t={t})")


__all__ = [
    "FamilyId", "build_family", "family_applies", "find_family",
    "quasi_skew_starter", "schgdd_n_1_4_from_starter",
    "table_4_2t", "table_5_m4", "table_5_3t", "table_5_1t",
    "table_6_2_8", "table_6_4_8", "table_6_m3", "table_6_2t", "table_n_34",
    "SMALL_STARTERS", "INF",
]
