"""Explicit base-block families: fixed-point oracles, full verification on
their applicability ranges, and the starter tables."""

import pytest

from designforge.core import block, expected_base_block_count
from designforge.families import (
    FamilyId,
    build_family,
    family_applies,
    find_family,
    quasi_skew_starter,
    schgdd_n_1_4_from_starter,
)
from designforge.verify import verify, verify_quasi_skew_starter

# (family, n, m, t) across every shape the tables cover
CASES = (
    [(FamilyId.F4_2T, 4, 2, t) for t in (4, 6, 8, 10, 12)]
    + [(FamilyId.F5_M4, 5, m, 4) for m in (5, 7, 11, 13, 17, 19, 25)]
    + [(FamilyId.F5_3T, 5, 3, t) for t in (4, 6, 8, 10)]
    + [(FamilyId.F5_1T, 5, 1, t) for t in (10, 16, 22)]
    + [(FamilyId.F6_2_8, 6, 2, 8), (FamilyId.F6_4_8, 6, 4, 8)]
    + [(FamilyId.F6_M3, 6, m, 3) for m in (5, 7, 9, 11, 13)]
    + [(FamilyId.F6_2T, 6, 2, t) for t in (6, 10, 14)]
    + [(FamilyId.FN_34, n, 3, 4) for n in (5, 11, 17, 23, 29)]
    + [(FamilyId.FN_14, n, 1, 4) for n in (7, 9, 15, 33)]
)


@pytest.mark.parametrize("fid,n,m,t", CASES,
                         ids=[f"{c[0].value}-{c[1]}-{c[2]}-{c[3]}"
                              for c in CASES])
def test_family_builds_and_verifies(fid, n, m, t):
    d = build_family(fid, n, m, t)
    assert len(d.base_blocks) == expected_base_block_count(n, m, t)
    report = verify(d)
    assert report.valid, report.summary()


def test_fixed_block_oracles():
    # spot values transcribed independently from the published tables
    d = build_family(FamilyId.F4_2T, 4, 2, 4)
    assert block([(0, 0), (1, 7), (2, 1)]) in d.base_blocks
    d = build_family(FamilyId.F5_M4, 5, 5, 4)
    assert d.base_blocks[0] == block([(0, 0), (1, 6), (2, 19)])


def test_find_family_agrees_with_applicability():
    assert find_family(4, 2, 6) == FamilyId.F4_2T
    assert find_family(6, 4, 8) == FamilyId.F6_4_8
    assert find_family(11, 3, 4) == FamilyId.FN_34
    assert find_family(4, 3, 6) is None
    for fid, n, m, t in CASES:
        assert family_applies(fid, n, m, t)


def test_inapplicable_parameters_raise():
    with pytest.raises(ValueError):
        build_family(FamilyId.F4_2T, 4, 2, 5)  # odd hole count
    with pytest.raises(ValueError):
        build_family(FamilyId.F5_M4, 5, 9, 4)  # m = 3 (mod 6)


def test_starter_small_and_parametrized_rows():
    for n in (7, 9, 11, 33, 99, 127):
        pairs = quasi_skew_starter(n)
        assert verify_quasi_skew_starter(pairs, n).valid, n
    assert (8, 9) in [tuple(sorted(p)) for p in quasi_skew_starter(33)]


def test_starter_table_degeneracy_is_quarantined():
    # the s=20 row of the parametrized table collapses two exclusions into
    # one; the builder refuses rather than emitting a wrong pairing
    with pytest.raises(ValueError, match="s=20"):
        quasi_skew_starter(41)


def test_starter_expansion_design():
    d = schgdd_n_1_4_from_starter(9)
    assert len(d.base_blocks) == expected_base_block_count(9, 1, 4)
    assert verify(d).valid
