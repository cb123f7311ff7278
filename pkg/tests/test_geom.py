import pytest
from hypothesis import given
from hypothesis import strategies as st

from hhc.curves import ALL_CURVES, IMPROPER_CURVES, Curve, affine_unapply, curve_table
from hhc.geom import (
    TABLE3,
    Cell,
    CellSequence,
    boundary_class,
    cell_address,
    check_adjacency,
    check_boundary_conditions,
    classify_properties,
    enumerate_curve,
    invert_point,
    is_permutation,
)
from hhc.mapping import compose_nested, level_tables, reversal_transform
from hhc.quaternary import quaternary_from_index


def d2xy(n, d):
    """Textbook Hilbert index-to-cell routine (bit twiddling, no tables)."""
    x = y = 0
    s, t = 1, d
    while s < n:
        rx = 1 & (t // 2)
        ry = 1 & (t ^ rx)
        if ry == 0:
            if rx == 1:
                x, y = s - 1 - x, s - 1 - y
            x, y = y, x
        x += s * rx
        y += s * ry
        t //= 4
        s *= 2
    return x, y


@pytest.mark.parametrize("k", range(1, 7))
def test_hilbert_matches_textbook_routine(k):
    n = 1 << k
    assert enumerate_curve(0, k).lattice() == [d2xy(n, d) for d in range(n * n)]


def test_small_sequences():
    assert enumerate_curve(0, 1).lattice() == [(0, 0), (0, 1), (1, 1), (1, 0)]
    assert enumerate_curve("moore", 2).lattice()[:4] == [(1, 0), (0, 0), (0, 1), (1, 1)]
    assert enumerate_curve(0, 2)[0].center().x.numerator == 1


@pytest.mark.parametrize("cell,expected", [((0, 0), [0, 0]), ((3, 0), [3, 3]), ((1, 0), [0, 3]), ((2, 3), [2, 1])])
def test_cell_address(cell, expected):
    assert cell_address(Cell(*cell, 2), 2) == expected
    assert Cell.from_address(expected) == Cell(*cell, 2)


@given(st.integers(1, 10).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, 2**k - 1), st.integers(0, 2**k - 1))))
def test_cell_roundtrips(kxy):
    k, x, y = kxy
    c = Cell(x, y, k)
    assert Cell.from_address(c.address()) == c
    assert Cell.from_point(c.center(), k) == c


def test_from_point_rejects_non_centres():
    with pytest.raises(ValueError):
        Cell.from_point(Cell(0, 0, 2).center(), 3)


@pytest.mark.parametrize("nu", ALL_CURVES)
@pytest.mark.parametrize("k", range(1, 6))
def test_adjacent_and_permutation(nu, k):
    seq = enumerate_curve(nu, k)
    assert check_adjacency(seq)
    assert is_permutation(seq)


def test_adjacency_negative_control():
    seq = enumerate_curve(0, 3)
    cells = list(seq.cells)
    cells[5], cells[9] = cells[9], cells[5]
    rep = check_adjacency(CellSequence(seq.curve, 3, tuple(cells)))
    assert not rep and rep.first_violation == 4
    assert not check_adjacency([(0, 0), (1, 1)])
    assert not is_permutation(CellSequence(seq.curve, 3, tuple(cells[:-1]) + (cells[0],)))


@pytest.mark.parametrize("nu,k,entry,exit_", [
    (1, 4, [0, 3, 3, 3], [3, 0, 0, 0]),
    (8, 4, [0, 0, 1, 1], [3, 3, 2, 2]),
    (0, 3, [0, 0, 0], [3, 3, 3]),
])
def test_boundary_examples(nu, k, entry, exit_):
    rep = check_boundary_conditions(nu, k)
    assert rep.passed
    assert rep.entry == entry and rep.exit == exit_


@pytest.mark.parametrize("nu", ALL_CURVES)
def test_boundaries_hold(nu):
    for k in range(2 if nu >= 6 else 3, 7):
        assert check_boundary_conditions(nu, k).passed


def test_table4_at_order2_differs_from_clone():
    # Composing I1's own maps over Liu4 at order 2 enters at 02, not 00.
    tables = level_tables(Curve.I1, 2)
    direct = [Cell.from_point(compose_nested(tables, reversal_transform(6, 2, quaternary_from_index(i, 2)).digits), 2)
              for i in range(16)]
    assert direct[0].address() == [0, 2]
    seq = enumerate_curve(6, 2)
    assert seq[0].address() == [0, 0]
    assert check_boundary_conditions(6, 2).matched == "liu3-order2"


@pytest.mark.parametrize("nu", ALL_CURVES)
def test_table3_properties(nu):
    for k in (3, 4, 5):
        assert classify_properties(nu, k) == TABLE3[nu]


def test_boundary_class():
    assert boundary_class(0, 0, 3) == "corner"
    assert boundary_class(3, 0, 3) == "edge"
    assert boundary_class(3, 4, 3) == "interior"


def _unmap_quadrant(seq, nu, d):
    # Pull quadrant d's cells back through its map and undo any reversion.
    k = seq.order
    p = curve_table(nu)[d]
    chunk = seq.cells[d * 4 ** (k - 1):(d + 1) * 4 ** (k - 1)]
    pulled = [Cell.from_point(affine_unapply(p, c.center()), k - 1) for c in chunk]
    return pulled[::-1] if p.reversed else pulled


@pytest.mark.parametrize("nu", ALL_CURVES)
def test_each_quadrant_is_a_copy_of_the_base(nu):
    k = 4
    seq = enumerate_curve(nu, k)
    base = enumerate_curve(Curve(nu).base, k - 1)
    for d in range(4):
        assert _unmap_quadrant(seq, nu, d) == list(base.cells)


@pytest.mark.parametrize("nu", ALL_CURVES)
@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_invert_roundtrip(nu, k):
    seq = enumerate_curve(nu, k)
    for i, cell in enumerate(seq):
        assert invert_point(nu, k, cell) == quaternary_from_index(i, k)


def test_invert_depth_mismatch():
    with pytest.raises(ValueError):
        invert_point(0, 3, Cell(0, 0, 2))


@pytest.mark.parametrize("nu", IMPROPER_CURVES)
def test_reversed_quadrants_run_backwards_in_parameter(nu):
    k = 4
    for d in range(4):
        q = quaternary_from_index(d * 4 ** (k - 1), k)
        flipped = reversal_transform(nu, k, q)
        assert (flipped != q) == curve_table(nu)[d].reversed


def test_enumerate_errors():
    with pytest.raises(ValueError):
        enumerate_curve(0, 0)
    with pytest.raises(ValueError):
        enumerate_curve("peano", 2)
