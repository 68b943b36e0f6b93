"""Planner verdicts and routes, construction operators (including the
borrow-absorbing expansion), and executor outcomes."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from designforge.core import (
    Design,
    DesignParams,
    Kind,
    block,
    expected_base_block_count,
    necessary_conditions,
)
from designforge.engine import (
    ExecutionResult,
    PlanNotExecutable,
    Rule,
    Status,
    build,
    carry_balanced,
    execute_plan,
    from_scgdd_and_schgdd,
    plan,
    schgdd_to_scgdd,
)
from designforge.search import SearchBudget, search
from designforge.verify import verify


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

def test_plan_verdict_anchors():
    assert plan(5, 1, 4).status is Status.NOT_EXISTS
    assert plan(6, 1, 3).status is Status.NOT_EXISTS
    assert plan(3, 1, 4).status is Status.NOT_EXISTS   # n=3, odd width, even t
    assert plan(3, 3, 2).status is Status.NOT_EXISTS   # t < 3
    assert plan(8, 2, 7).status is Status.OPEN
    assert plan(7, 1, 8).status is Status.OPEN         # t=8 residue class
    assert plan(9, 1, 9).status is Status.EXISTS
    assert plan(5, 3, 6).status is Status.EXISTS       # settled: not open
    assert plan(11, 3, 6).status is Status.OPEN


@given(st.integers(-2, 35), st.integers(-2, 14), st.integers(-2, 35))
@settings(max_examples=300, deadline=None)
def test_plan_never_exists_against_necessity(n, m, t):
    node = plan(n, m, t)
    if not necessary_conditions(n, m, t).ok:
        assert node.status is Status.NOT_EXISTS
    if node.status is not Status.EXISTS:
        assert node.reason


@given(st.integers(3, 30), st.integers(1, 12), st.integers(3, 30))
@settings(max_examples=200, deadline=None)
def test_plan_is_deterministic(n, m, t):
    a, b = plan(n, m, t), plan(n, m, t)
    assert a.status == b.status and a.rule == b.rule
    assert a.to_dict() == b.to_dict()


def test_route_shapes():
    assert plan(4, 2, 6).rule is Rule.DIRECT
    assert plan(4, 8, 6).rule is Rule.SCGDD_EXPAND
    assert plan(5, 9, 6).rule is Rule.CDM_INFLATE
    assert plan(6, 2, 16).rule is Rule.COMPOSE_FILL
    assert plan(9, 2, 4).rule is Rule.PBD_EXPAND
    assert plan(5, 2, 10).rule is Rule.GDD_MGDD
    assert plan(5, 2, 10).children[0].rule is Rule.PDF_GDD
    assert plan(8, 6, 6).rule is Rule.SCGDD_EXPAND
    assert plan(7, 3, 12).rule is Rule.CDM_INFLATE
    assert plan(3, 2, 5).rule is Rule.SEARCH


def test_plan_serialization():
    node = plan(6, 2, 16)
    text = node.to_json()
    data = json.loads(text)
    assert data["goal"]["n"] == 6
    assert data["status"] == "exists"
    assert node.pretty().count("\n") >= 2


# ---------------------------------------------------------------------------
# the borrow-absorbing expansion
# ---------------------------------------------------------------------------

def test_carry_balanced_predicate():
    # triangle winding 2 with two long edges and one short edge: balanced
    assert carry_balanced(block([(0, 0), (1, 1), (2, 2)]), 8)
    # three long edges wind twice but borrow three times: unbalanced
    assert not carry_balanced(block([(0, 0), (1, 3), (2, 6)]), 8)


@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7),
       st.integers(1, 7))
def test_carry_balance_translation_invariant(a, b, c, s):
    coords = {a, b, c}
    if len(coords) < 3:
        return
    bb = block([(0, a), (1, b), (2, c)])
    shifted = block([(0, (a + s) % 8), (1, (b + s) % 8), (2, (c + s) % 8)])
    assert carry_balanced(bb, 8) == carry_balanced(shifted, 8)


def test_expansion_rejects_unbalanced_ingredient():
    outer = search(DesignParams(kind=Kind.SCGDD, n=4, m=2))
    assert isinstance(outer, Design)
    bad = Design(
        params=DesignParams(kind=Kind.SCHGDD, n=3, m=2, t=4),
        base_blocks=[block([(0, 0), (1, 3), (2, 6)])],
        provenance="unbalanced")
    with pytest.raises(ValueError, match="carry-balanced"):
        from_scgdd_and_schgdd(outer, {3: bad})


def test_expansion_with_balanced_ingredient_verifies():
    outer = search(DesignParams(kind=Kind.SCGDD, n=4, m=2))
    span = 2 * 6
    ing = search(DesignParams(kind=Kind.SCHGDD, n=3, m=2, t=6),
                 block_filter=lambda bb: carry_balanced(bb, span))
    assert isinstance(outer, Design) and isinstance(ing, Design)
    out = from_scgdd_and_schgdd(outer, {3: ing})
    assert out.params.m == 4 and out.params.t == 6
    assert len(out.base_blocks) == expected_base_block_count(4, 4, 6)
    assert verify(out).valid


def test_flatten_holes_operator():
    h = build(3, 3, 3).design
    s = search(DesignParams(kind=Kind.SCGDD, n=3, m=3))
    assert isinstance(s, Design)
    flat = schgdd_to_scgdd(h, s)
    assert flat.params.m == 9
    assert len(flat.base_blocks) == 9
    assert verify(flat).valid


# ---------------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------------

def test_execute_refuses_nonexistent():
    with pytest.raises(PlanNotExecutable, match="odd"):
        execute_plan(plan(8, 3, 4))
    with pytest.raises(PlanNotExecutable):
        execute_plan(plan(5, 1, 4))


def test_execute_skip_report_on_budget():
    node = plan(9, 1, 9)  # resolves by search; starve it
    result = execute_plan(node, budget=SearchBudget(max_nodes=5,
                                                    wall_s=60.0))
    assert isinstance(result, ExecutionResult)
    assert result.design is None and not result.ok
    assert any("budget" in line for line in result.skipped)


@pytest.mark.parametrize("n,m,t", [(4, 2, 6), (5, 3, 6), (6, 4, 8),
                                   (7, 1, 4), (3, 1, 3)])
def test_build_small_targets(n, m, t):
    result = build(n, m, t)
    assert result.ok
    assert len(result.design.base_blocks) == expected_base_block_count(n, m, t)
    assert verify(result.design).valid


def test_execute_uses_cache(tmp_path):
    first = build(3, 2, 4, cache_dir=tmp_path)
    assert first.ok
    again = build(3, 2, 4, cache_dir=tmp_path)
    assert again.ok
    assert any("cache hit" in line for line in again.log)
