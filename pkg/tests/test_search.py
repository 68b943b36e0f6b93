"""Backtracking searches: found objects verify, empty spaces certify,
budgets cut off cleanly, and the cache round-trips."""

import pytest

from designforge.core import Design, DesignParams, Kind
from designforge.engine import carry_balanced
from designforge.search import (
    BudgetExhausted,
    NotFound,
    SearchBudget,
    cache_get,
    cache_put,
    cdm,
    cdm_design,
    confirm_nonexistence_5_1_4,
    search,
)
from designforge.verify import verify


def _params(kind, **kw):
    return DesignParams(kind=kind, **kw)


def test_schgdd_search_finds_and_verifies():
    res = search(_params(Kind.SCHGDD, n=3, m=2, t=4))
    assert isinstance(res, Design)
    assert verify(res).valid


def test_search_certifies_nonexistence():
    res = search(_params(Kind.SCHGDD, n=5, m=1, t=4))
    assert isinstance(res, NotFound)
    assert res.nodes > 0


def test_budget_cuts_off():
    res = search(_params(Kind.SCHGDD, n=9, m=1, t=9),
                 SearchBudget(max_nodes=10, wall_s=60.0))
    assert isinstance(res, BudgetExhausted)


def test_reduced_space_exhaustion_zero_solutions():
    out = confirm_nonexistence_5_1_4()
    assert out["solutions"] == 0
    assert out["unique_row_patterns"] == 1
    assert out["nodes"] > 0


def test_block_filter_restricts_schgdd_search():
    span = 2 * 6
    res = search(_params(Kind.SCHGDD, n=3, m=2, t=6),
                 block_filter=lambda bb: carry_balanced(bb, span))
    assert isinstance(res, Design)
    assert all(carry_balanced(bb, span) for bb in res.base_blocks)
    assert verify(res).valid


def test_block_filter_rejected_for_non_holey_kinds():
    with pytest.raises(ValueError):
        search(_params(Kind.MGDD, n=5, t=3), block_filter=lambda bb: True)


def test_other_kind_searches():
    for params in (
        _params(Kind.SCGDD, n=4, m=4),
        _params(Kind.CYCLIC_GDD, n=4, m=4),
        _params(Kind.MGDD, n=5, t=3),
        _params(Kind.PBD, n=7, k=(3,)),
        _params(Kind.PDF, n=19, k=(3, 4)),
        _params(Kind.CYCLIC_BSEC1, n=9),
    ):
        res = search(params)
        assert isinstance(res, Design), params
        assert verify(res).valid, params


def test_cdm_rows_cover_all_differences():
    rows = cdm(3, 7)
    assert len(rows) == 3
    for i in range(3):
        for j in range(i + 1, 3):
            diffs = {(a - b) % 7 for a, b in zip(rows[i], rows[j])}
            assert diffs == set(range(7))
    assert verify(cdm_design(7)).valid


def test_cache_round_trip(tmp_path):
    d = search(_params(Kind.SCHGDD, n=3, m=2, t=4))
    cache_put(d, tmp_path)
    hit = cache_get(d.params, tmp_path)
    assert hit is not None
    assert hit.base_blocks == d.base_blocks
    assert cache_get(_params(Kind.SCHGDD, n=3, m=2, t=6), tmp_path) is None


def test_cache_rejects_corrupt_entry(tmp_path):
    d = search(_params(Kind.SCHGDD, n=3, m=2, t=4))
    cache_put(d, tmp_path)
    victim = next(tmp_path.iterdir())
    text = victim.read_text().replace("[0,0]", "[0,1]", 1)
    victim.write_text(text)
    with pytest.warns(UserWarning, match="corrupt"):
        assert cache_get(d.params, tmp_path) is None
    assert not victim.exists()
