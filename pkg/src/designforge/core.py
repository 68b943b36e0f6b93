"""Core data model: grid points, blocks, design containers, difference profiles.

The objects here describe block designs on an n x L grid of points (group,
coordinate) where the coordinate is cyclic modulo L.  A design is stored by
its base blocks; developing a base block means adding 1 to every coordinate
modulo L, which generates an orbit of up to L blocks.  Holey designs
additionally partition the coordinates into t hole classes (coordinates
congruent mod t), and a valid holey design covers exactly the pairs of points
lying in different groups *and* different hole classes.

Kind-specific conventions for the generic containers:

==================  =========================================================
kind                meaning of (n, m, t) and of a block's points
==================  =========================================================
SCHGDD              n groups (rows) x Z_{m*t}; holes = coords mod t;
                    base blocks developed by +1 mod m*t.
HGDD                same grid, but base_blocks is the full developed list.
SCGDD               type m^n on rows I_n x Z_m; blocks developed by +1 mod m;
                    cross-group coverage includes equal coordinates.
CYCLIC_GDD          type m^n on the single cycle Z_{m*n} (points stored as
                    (0, x)); groups are residue classes mod n; "strictly
                    cyclic" = every base-block orbit has full length m*n.
MGDD                type t^n: rows I_n x columns I_t, full block list; covers
                    pairs differing in both row and column.
PDF                 perfect difference family on Z_n (n = v); blocks stored as
                    (0, x) with integer x; positive pairwise differences cover
                    {1..(v-1)/2} exactly once.
CDM                 (n, m) difference matrix with n rows over Z_m; each base
                    block is one column: ((0,d_0), ..., (n-1,d_{n-1})).
STARTER             quasi-skew starter in Z_n: blocks are the pairs
                    ((0,x), (0,y)).
PBD                 pairwise balanced design on n points; block points are
                    (p, 0), i.e. the PBD doubles as an SCGDD of type 1^n.
BSEC1               balanced sampling plan excluding contiguous units on Z_n,
                    full block list, blocks of (0, x) points.
CYCLIC_BSEC1        same object stored by base blocks mod n.
BSEC2               two-dimensional plan on I_n x Z_m; base blocks developed
                    by column +1 mod m.
OOC2D               optical orthogonal code on I_n x Z_m; base_blocks are the
                    codewords (no development; shifts are the code's family).
==================  =========================================================
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Sequence


class Kind(str, Enum):
    SCHGDD = "SCHGDD"
    HGDD = "HGDD-developed"
    SCGDD = "SCGDD"
    CYCLIC_GDD = "StrictCyclicGDD"
    MGDD = "MGDD"
    PDF = "PDF"
    CDM = "CDM"
    STARTER = "QuasiSkewStarter"
    PBD = "PBD"
    BSEC1 = "BSEC1"
    CYCLIC_BSEC1 = "CyclicBSEC1"
    BSEC2 = "BSEC2"
    OOC2D = "OOC2D"


@dataclass(frozen=True, order=True)
class GridPoint:
    """A point (group, coord) of the design grid."""

    group: int
    coord: int

    def shifted(self, s: int, modulus: int) -> "GridPoint":
        return GridPoint(self.group, (self.coord + s) % modulus)


# A block is a tuple of GridPoints in canonical (sorted) order.
BaseBlock = tuple[GridPoint, ...]


def block(points: Iterable[tuple[int, int]]) -> BaseBlock:
    """Build a canonical block from (group, coord) pairs."""
    return tuple(sorted(GridPoint(g, c) for g, c in points))


def normalize_block(b: Iterable[GridPoint]) -> BaseBlock:
    return tuple(sorted(b))


@dataclass(frozen=True)
class DesignParams:
    """Parameters of a design; field meaning depends on ``kind`` (see module
    docstring).  ``k`` is the tuple of admissible block sizes and ``lam`` the
    index (lambda)."""

    kind: Kind
    n: int = 0
    m: int = 1
    t: int = 1
    k: tuple[int, ...] = (3,)
    lam: int = 1

    @property
    def L(self) -> int:
        """Cyclic modulus of the coordinate for grid kinds."""
        if self.kind in (Kind.SCHGDD, Kind.HGDD):
            return self.m * self.t
        if self.kind in (Kind.SCGDD, Kind.CDM):
            return self.m
        if self.kind == Kind.CYCLIC_GDD:
            return self.m * self.n
        if self.kind in (Kind.BSEC2, Kind.OOC2D):
            return self.m
        if self.kind in (Kind.BSEC1, Kind.CYCLIC_BSEC1, Kind.STARTER, Kind.PBD, Kind.PDF):
            return self.n
        return self.m * self.t

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "k": list(self.k),
            "L": self.L,
            "lambda": self.lam,
        }


@dataclass
class Design:
    """A design given by its parameter set and base blocks.

    ``base_blocks`` are canonical blocks; whether they are developed (and by
    what modulus) is a property of the kind.  ``provenance`` is a short
    free-text trail of how the design was obtained (rule names, search,
    cache, external file).
    """

    params: DesignParams
    base_blocks: list[BaseBlock]
    provenance: str = ""

    @property
    def kind(self) -> Kind:
        return self.params.kind

    def __len__(self) -> int:
        return len(self.base_blocks)

    def to_json(self) -> str:
        payload = {
            "kind": self.params.kind.value,
            "params": self.params.to_json(),
            "base_blocks": [
                [[p.group, p.coord] for p in b] for b in self.base_blocks
            ],
            "provenance": self.provenance,
        }
        return json.dumps(payload, separators=(",", ":"), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Design":
        payload = json.loads(text)
        kind = Kind(payload["kind"])
        p = payload["params"]
        params = DesignParams(
            kind=kind,
            n=int(p.get("n", 0)),
            m=int(p.get("m", 1)),
            t=int(p.get("t", 1)),
            k=tuple(int(x) for x in p.get("k", [3])),
            lam=int(p.get("lambda", 1)),
        )
        blocks = []
        for raw in payload["base_blocks"]:
            pts = []
            for g, c in raw:
                if g == "inf":
                    # fixed-row marker in initial-block payloads: the fixed
                    # row is, by convention, the last row.
                    g = params.n - 1
                pts.append((int(g), int(c)))
            blocks.append(block(pts))
        return cls(params=params, base_blocks=blocks,
                   provenance=payload.get("provenance", ""))


# ---------------------------------------------------------------------------
# development operators
# ---------------------------------------------------------------------------

def delta_of_block(b: Sequence[GridPoint], modulus: int) -> dict[tuple[int, int], list[int]]:
    """Ordered coordinate differences of a block, keyed by ordered group pair.

    For every ordered pair of distinct points ((g1,c1),(g2,c2)) the difference
    (c1-c2) mod modulus is recorded under key (g1,g2); same-group pairs are
    recorded under (g,g) so the caller can detect them.
    """
    out: dict[tuple[int, int], list[int]] = {}
    for i, p in enumerate(b):
        for j, q in enumerate(b):
            if i == j:
                continue
            out.setdefault((p.group, q.group), []).append((p.coord - q.coord) % modulus)
    return out


def develop_orbit(b: Sequence[GridPoint], modulus: int) -> list[BaseBlock]:
    """All distinct shifts of the block under coord -> coord+1 (mod modulus)."""
    seen = set()
    orbit = []
    for s in range(modulus):
        shifted = normalize_block(p.shifted(s, modulus) for p in b)
        if shifted in seen:
            break
        seen.add(shifted)
        orbit.append(shifted)
    return orbit


def orbit_length(b: Sequence[GridPoint], modulus: int) -> int:
    return len(develop_orbit(b, modulus))


def orbit_rep(b: Sequence[GridPoint], modulus: int) -> BaseBlock:
    """Canonical orbit representative: the lexicographically least shift."""
    return min(develop_orbit(b, modulus))


def develop_rows(initial: Iterable[Sequence[GridPoint]], row_modulus: int,
                 fixed_rows: frozenset[int] | set[int] = frozenset()) -> list[BaseBlock]:
    """Develop initial blocks by row -> row+1 (mod row_modulus).

    Rows in ``fixed_rows`` (by convention the last row of the grid, playing
    the role of a fixed point of the row automorphism) are left unchanged.
    Fixed rows must not be touched by the modulus: they are indices >=
    row_modulus.
    """
    out: list[BaseBlock] = []
    for b in initial:
        for i in range(row_modulus):
            out.append(normalize_block(
                GridPoint(p.group if p.group in fixed_rows else (p.group + i) % row_modulus,
                          p.coord)
                for p in b))
    return out


# ---------------------------------------------------------------------------
# arithmetic preconditions and counts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NecessityReport:
    ok: bool
    failures: tuple[str, ...] = ()


def necessary_conditions(n: int, m: int, t: int) -> NecessityReport:
    """Divisibility/parity preconditions for a holey design (n, m^t) with
    triples: n,t >= 3, (t-1)(n-1)m even, (t-1)n(n-1)m divisible by 6."""
    failures = []
    if n < 3:
        failures.append(f"n={n} < 3")
    if t < 3:
        failures.append(f"t={t} < 3")
    if m < 1:
        failures.append(f"m={m} < 1")
    else:
        if ((t - 1) * (n - 1) * m) % 2 != 0:
            failures.append(f"(t-1)(n-1)m = {(t-1)*(n-1)*m} is odd")
        if ((t - 1) * n * (n - 1) * m) % 6 != 0:
            failures.append(f"(t-1)n(n-1)m = {(t-1)*n*(n-1)*m} not divisible by 6")
    return NecessityReport(ok=not failures, failures=tuple(failures))


def expected_base_block_count(n: int, m: int, t: int) -> int:
    """Number of base blocks of a triple-system holey design of type (n, m^t)."""
    num = (t - 1) * n * (n - 1) * m
    assert num % 6 == 0, (n, m, t)
    return num // 6


# ---------------------------------------------------------------------------
# difference profiles
# ---------------------------------------------------------------------------

@dataclass
class DifferenceProfile:
    """Multiset of covered coordinate differences per ordered group pair."""

    modulus: int
    table: dict[tuple[int, int], Counter] = field(default_factory=dict)

    def add_block(self, b: Sequence[GridPoint]) -> None:
        for key, diffs in delta_of_block(b, self.modulus).items():
            bucket = self.table.setdefault(key, Counter())
            for d in diffs:
                bucket[d] += 1

    @classmethod
    def of_blocks(cls, blocks: Iterable[Sequence[GridPoint]], modulus: int) -> "DifferenceProfile":
        prof = cls(modulus=modulus)
        for b in blocks:
            prof.add_block(b)
        return prof

    def bucket(self, i: int, j: int) -> Counter:
        return self.table.get((i, j), Counter())


def holey_difference_set(m: int, t: int) -> frozenset[int]:
    """Differences a holey design on Z_{m*t} with holes mod t must cover:
    everything except multiples of t."""
    return frozenset(d for d in range(m * t) if d % t != 0)


__all__ = [
    "Kind", "GridPoint", "BaseBlock", "block", "normalize_block",
    "DesignParams", "Design", "delta_of_block", "develop_orbit",
    "orbit_length", "orbit_rep", "develop_rows", "NecessityReport",
    "necessary_conditions", "expected_base_block_count",
    "DifferenceProfile", "holey_difference_set", "replace",
]
