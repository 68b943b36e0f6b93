"""Grid-point mechanics, parameter arithmetic, and JSON round-trips."""

from hypothesis import given
from hypothesis import strategies as st

from designforge.core import (
    Design,
    DesignParams,
    Kind,
    block,
    delta_of_block,
    develop_orbit,
    develop_rows,
    expected_base_block_count,
    necessary_conditions,
    orbit_rep,
)


def test_necessity_small_cases():
    assert necessary_conditions(3, 1, 3).ok
    assert necessary_conditions(9, 1, 9).ok
    assert not necessary_conditions(2, 1, 4).ok
    assert not necessary_conditions(4, 1, 2).ok
    # odd product of the three parity factors
    rep = necessary_conditions(8, 3, 4)
    assert not rep.ok
    assert any("odd" in f for f in rep.failures)
    # divisibility-by-six failure
    assert not necessary_conditions(5, 1, 6).ok


def test_expected_count_matches_formula():
    assert expected_base_block_count(4, 2, 6) == 20
    assert expected_base_block_count(9, 1, 9) == 96
    assert expected_base_block_count(5, 3, 6) == 50


@given(st.integers(3, 40), st.integers(1, 20), st.integers(3, 40))
def test_count_integral_whenever_admissible(n, m, t):
    rep = necessary_conditions(n, m, t)
    if rep.ok:
        assert ((t - 1) * n * (n - 1) * m) % 6 == 0
        assert expected_base_block_count(n, m, t) > 0


def test_block_is_sorted_and_hashable():
    b = block([(2, 5), (0, 1), (1, 3)])
    assert [p.group for p in b] == [0, 1, 2]
    assert len({b, block([(0, 1), (1, 3), (2, 5)])}) == 1


def test_develop_orbit_full_length():
    b = block([(0, 0), (1, 1), (2, 3)])
    orbit = develop_orbit(b, 8)
    assert len(orbit) == 8
    assert orbit_rep(b, 8) in orbit
    assert orbit_rep(b, 8) == orbit_rep(orbit[5], 8)


@given(st.integers(2, 24))
def test_orbit_rep_is_canonical(L):
    b = block([(0, 0), (1, L // 2), (2, 1 % L)])
    reps = {orbit_rep(shifted, L) for shifted in develop_orbit(b, L)}
    assert len(reps) == 1


def test_develop_rows_fixed_row_untouched():
    initial = [block([(0, 0), (1, 2), (4, 7)])]
    out = develop_rows(initial, row_modulus=4, fixed_rows={4})
    assert len(out) == 4
    for dev in out:
        assert any(p.group == 4 and p.coord == 7 for p in dev)


def test_delta_of_block_orientation():
    b = block([(0, 0), (1, 3)])
    d = delta_of_block(b, 8)
    assert d[(0, 1)] == [5]
    assert d[(1, 0)] == [3]


def test_params_modulus_by_kind():
    assert DesignParams(kind=Kind.SCHGDD, n=4, m=2, t=6).L == 12
    assert DesignParams(kind=Kind.SCGDD, n=5, m=4).L == 4
    assert DesignParams(kind=Kind.CYCLIC_GDD, n=6, m=2).L == 12


def test_design_json_round_trip():
    d = Design(params=DesignParams(kind=Kind.SCHGDD, n=4, m=2, t=6),
               base_blocks=[block([(0, 0), (1, 7), (2, 1)])],
               provenance="test")
    back = Design.from_json(d.to_json())
    assert back.params == d.params
    assert back.base_blocks == d.base_blocks
    assert back.provenance == "test"


def test_json_inf_marker_maps_to_last_row():
    text = ('{"kind":"SCHGDD","params":{"n":8,"m":1,"t":4,"k":[3],'
            '"lambda":1},"base_blocks":[[["inf",0],[0,1],[1,3]]],'
            '"provenance":""}')
    d = Design.from_json(text)
    assert {p.group for p in d.base_blocks[0]} == {0, 1, 7}
