import itertools

import pytest

from hhc.group import (
    MULTIPLICATION_TABLE,
    TABLE_ORDER,
    H,
    I,
    NEG_H,
    NEG_I,
    NEG_V,
    R,
    Rotation,
    V,
    element_order,
    matrix_mul,
    rot_inv,
    rot_mul,
    verify_group_structure,
)


@pytest.mark.parametrize("a,b,expected", [
    (I, V, V),
    (V, R, NEG_H),
    (V, V, NEG_I),
])
def test_rot_mul_examples(a, b, expected):
    assert rot_mul(a, b) is expected


@pytest.mark.parametrize("a", list(Rotation))
def test_table_row_matches_matrix_products(a):
    for b in Rotation:
        assert rot_mul(a, b) is matrix_mul(a, b)


def test_table_has_all_64_entries():
    assert len(MULTIPLICATION_TABLE) == 64
    assert set(TABLE_ORDER) == set(Rotation)


def test_matrices():
    assert I.matrix == ((1, 0), (0, 1))
    assert R.matrix == ((0, 1), (1, 0))
    assert V.matrix == ((0, -1), (1, 0))
    assert H.matrix == ((1, 0), (0, -1))
    assert NEG_V.matrix == ((0, 1), (-1, 0))
    assert {r.det for r in Rotation} == {1, -1}


@pytest.mark.parametrize("a,expected", [(I, I), (V, NEG_V), (R, R)])
def test_rot_inv_examples(a, expected):
    # oracle: search the table row of a for the identity entry
    row = [b for b in TABLE_ORDER if MULTIPLICATION_TABLE[a, b] is I]
    assert row == [expected]
    assert rot_inv(a) is expected


def test_symbols_roundtrip():
    for r in Rotation:
        assert Rotation.from_symbol(r.symbol) is r
    assert NEG_H.symbol == "-U_H"


def test_group_report_all_pass():
    rep = verify_group_structure()
    assert rep.passed, [c.line() for c in rep.checks if not c.passed]
    names = [c.name for c in rep.checks]
    assert "subgroup 4 {I,-I,V,-V}" in names
    assert sum(n.startswith("subgroup") for n in names) == 8


def test_cyclic_order4_subgroup():
    assert element_order(V) == 4
    assert {rot_mul(V, V), rot_mul(rot_mul(V, V), V)} == {NEG_I, NEG_V}


def test_non_abelian_witness():
    assert any(rot_mul(a, b) is not rot_mul(b, a) for a, b in itertools.product(Rotation, Rotation))
