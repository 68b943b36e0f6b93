"""Sampling-plan and optical-code builders: explicit seeds, preconditions,
layer counts, and the fold transform."""

import pytest

from designforge.apps import (
    CODE_2x4,
    build_bsec2,
    build_ooc_n4,
    build_ooc_nm,
    fold_ooc,
)
from designforge.core import block
from designforge.verify import johnson_bound, verify


def test_code_2x4_oracle():
    code = build_ooc_n4(2)
    assert len(code.base_blocks) == 2 == johnson_bound(2, 4, 3, 1)
    assert block([(0, 0), (0, 1), (1, 0)]) in code.base_blocks
    assert block([(1, 0), (1, 1), (0, 3)]) in code.base_blocks
    assert verify(code).valid


@pytest.mark.parametrize("n", [3, 4, 5, 7, 10])
def test_ooc_n4_rejects_unsupported_rows(n):
    with pytest.raises(ValueError, match="mod 6"):
        build_ooc_n4(n)


def test_ooc_n4_eight_rows():
    code = build_ooc_n4(8)
    assert len(code.base_blocks) == 40 == johnson_bound(8, 4, 3, 1)
    assert verify(code).valid


def test_ooc_n4_six_rows_via_fold():
    code = build_ooc_n4(6)
    assert code.params.n == 6 and code.params.m == 4
    assert len(code.base_blocks) == 22 == johnson_bound(6, 4, 3, 1)
    assert verify(code).valid


def test_ooc_nm_preconditions():
    with pytest.raises(ValueError, match="mod 12"):
        build_ooc_nm(8, 8)
    with pytest.raises(ValueError):
        build_ooc_nm(7, 16)


def test_ooc_nm_delegates_single_class():
    assert len(build_ooc_nm(8, 4).base_blocks) == 40


def test_fold_by_one_is_identity():
    code = build_ooc_n4(2)
    folded = fold_ooc(code, 1)
    assert folded.params.n == 2 and folded.params.m == 4
    assert sorted(folded.base_blocks) == sorted(code.base_blocks)


@pytest.mark.parametrize("m1,rows,cols", [(2, 4, 2), (4, 8, 1)])
def test_fold_two_by_four(m1, rows, cols):
    folded = fold_ooc(build_ooc_n4(2), m1)
    assert folded.params.n == rows and folded.params.m == cols
    assert len(folded.base_blocks) == 2 * m1
    assert verify(folded).valid


def test_fold_rejects_bad_split():
    with pytest.raises(ValueError, match="does not divide"):
        fold_ooc(build_ooc_n4(2), 3)


def test_fold_eight_by_four():
    folded = fold_ooc(build_ooc_n4(8), 2)
    assert folded.params.n == 16 and folded.params.m == 2
    assert len(folded.base_blocks) == 80 == johnson_bound(16, 2, 3, 1)
    assert verify(folded).valid


@pytest.mark.parametrize("n,m", [(7, 9), (9, 8), (3, 3)])
def test_bsec2_preconditions(n, m):
    with pytest.raises(ValueError, match="mod 6"):
        build_bsec2(n, m)


def test_bsec2_nine_by_nine():
    plan = build_bsec2(9, 9)
    assert plan.params.n == 9 and plan.params.m == 9
    # layers: 96 holey blocks + 9 rows x 1 within-row block + 9 developed
    # within-column blocks
    assert len(plan.base_blocks) == 114
    assert verify(plan).valid
