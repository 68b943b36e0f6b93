"""Verifier behavior: acceptance of known-good objects, rejection of
corruptions, and the bound arithmetic."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from designforge.core import Design, DesignParams, Kind, block
from designforge.families import FamilyId, build_family
from designforge.search import cdm, cdm_design
from designforge.verify import (
    johnson_bound,
    verify,
    verify_bsec1,
    verify_cdm,
    verify_quasi_skew_starter,
    verify_schgdd,
)


@pytest.fixture(scope="module")
def good_426():
    return build_family(FamilyId.F4_2T, 4, 2, 6)


def test_family_design_verifies(good_426):
    report = verify_schgdd(good_426)
    assert report.valid, report.summary()


def test_dispatcher_routes_by_kind(good_426):
    assert verify(good_426).valid


def test_wrong_block_count_rejected(good_426):
    d = Design(params=good_426.params,
               base_blocks=good_426.base_blocks[:-1],
               provenance="truncated")
    report = verify(d)
    assert not report.valid
    assert any(v.category in ("wrong-count", "missing-difference")
               for v in report.violations)


def test_duplicated_block_rejected(good_426):
    d = Design(params=good_426.params,
               base_blocks=good_426.base_blocks[:-1]
               + [good_426.base_blocks[0]],
               provenance="duplicated")
    assert not verify(d).valid


def test_moved_point_rejected(good_426):
    blocks = list(good_426.base_blocks)
    b = blocks[0]
    moved = block([(b[0].group, (b[0].coord + 1) % good_426.params.L)]
                  + [(p.group, p.coord) for p in b[1:]])
    blocks[0] = moved
    d = Design(params=good_426.params, base_blocks=blocks,
               provenance="moved")
    assert not verify(d).valid


def test_hole_hitting_block_rejected(good_426):
    # a block with two points in the same coordinate class mod t
    blocks = list(good_426.base_blocks)
    t = good_426.params.t
    blocks[0] = block([(0, 0), (1, t), (2, 1)])
    d = Design(params=good_426.params, base_blocks=blocks, provenance="hole")
    assert not verify(d).valid


def test_cdm_accepts_and_rejects():
    assert verify_cdm(cdm_design(5)).valid
    rows = cdm(3, 5)
    rows[2] = list(rows[2])
    rows[2][0] = (rows[2][0] + 1) % 5  # collide two column differences
    bad = Design(params=DesignParams(kind=Kind.CDM, n=3, m=5),
                 base_blocks=[block((r, v) for r, v in enumerate(col))
                              for col in zip(*rows)],
                 provenance="doctored")
    assert not verify_cdm(bad).valid


def test_starter_verifier_rejects_corruption():
    good = [(1, 5), (3, 4), (2, 8), (6, 7)]  # Z_9
    assert verify_quasi_skew_starter(good, 9).valid
    assert not verify_quasi_skew_starter(good[:-1], 9).valid
    swapped = [(1, 5), (3, 4), (2, 8), (6, 8)]
    assert not verify_quasi_skew_starter(swapped, 9).valid


def test_bsec1_verifier():
    d = Design(params=DesignParams(kind=Kind.CYCLIC_BSEC1, n=9),
               base_blocks=[block([(0, 0), (0, 2), (0, 5)])],
               provenance="")
    assert verify_bsec1(d, cyclic=True).valid
    contiguous = Design(params=d.params,
                        base_blocks=[block([(0, 0), (0, 1), (0, 5)])],
                        provenance="")
    assert not verify_bsec1(contiguous, cyclic=True).valid


def test_johnson_bound_values():
    assert johnson_bound(2, 4, 3, 1) == 2
    assert johnson_bound(8, 4, 3, 1) == 40
    assert johnson_bound(8, 16, 3, 1) == 168
    assert johnson_bound(16, 8, 3, 1) == 336


@given(st.integers(1, 40), st.integers(1, 40))
def test_johnson_bound_lambda1_closed_form(u, v):
    assert johnson_bound(u, v, 3, 1) == u * ((u * v - 1) // 2) // 3


def test_ooc_verifier_catches_correlation():
    words = [block([(0, 0), (0, 1), (1, 0)]),
             block([(1, 0), (1, 1), (0, 3)])]
    params = DesignParams(kind=Kind.OOC2D, n=2, m=4, k=(3,), lam=1)
    assert verify(Design(params=params, base_blocks=words,
                         provenance="")).valid
    # shifting the second word onto the first forces cross-correlation 3
    clash = [words[0], block([(0, 1), (0, 2), (1, 1)])]
    assert not verify(Design(params=params, base_blocks=clash,
                             provenance="")).valid
