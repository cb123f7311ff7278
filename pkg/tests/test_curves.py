import random

import pytest
from hypothesis import given

from hhc.curves import (
    ALL_CURVES,
    AffineMap,
    Curve,
    OutsideQuadrantError,
    T,
    affine_apply,
    affine_unapply,
    curve_id,
    curve_table,
)
from hhc.dyadic import CENTER, Dyadic, DyadicVec2
from hhc.group import I, NEG_R, R

from conftest import unit_points


def P(nx, ny, e):
    return DyadicVec2(Dyadic(nx, e), Dyadic(ny, e))


def test_hilbert_row():
    maps = curve_table(0).maps
    assert [(m.rotation, m.translation) for m in maps] == [(R, T[0]), (I, T[1]), (I, T[3]), (NEG_R, T[4])]
    assert not any(m.reversed for m in maps)


@pytest.mark.parametrize("nu,reversed_quadrants", [
    (6, {1, 3}), (7, {1}), (8, {0, 1}), (9, {0, 2}), (10, {2, 3}), (11, {2}),
])
def test_improper_overbars(nu, reversed_quadrants):
    maps = curve_table(nu).maps
    assert {i for i, m in enumerate(maps) if m.reversed} == reversed_quadrants


def test_proper_have_no_reversion_and_bases():
    for c in ALL_CURVES:
        t = curve_table(c)
        if c.is_proper:
            assert not any(m.reversed for m in t.maps)
            assert t.base is Curve.HILBERT
        else:
            assert t.base is Curve.LIU4


def test_unknown_curve():
    with pytest.raises(ValueError):
        curve_table(12)
    with pytest.raises(ValueError):
        curve_id("liu5")


@pytest.mark.parametrize("text,expected", [
    ("hilbert", Curve.HILBERT), ("MOORE", Curve.MOORE), ("liu3", Curve.LIU3),
    ("Liu4", Curve.LIU4), ("i1", Curve.I1), ("I6", Curve.I6), ("7", Curve.I2), (11, Curve.I6),
])
def test_curve_id(text, expected):
    assert curve_id(text) is expected


def test_curve_kinds():
    assert [c.kind for c in ALL_CURVES] == ["proper"] * 6 + ["improper"] * 6


def test_affine_apply_examples():
    h = curve_table(0)
    assert affine_apply(h[0], CENTER) == P(1, 1, 2)
    assert affine_apply(h[3], CENTER) == P(3, 1, 2)
    ident = AffineMap(I, T[0])
    v = P(3, 5, 3)
    assert affine_apply(ident, v) == v.halve()


def test_affine_unapply_examples():
    h = curve_table(0)
    assert affine_unapply(h[0], P(1, 1, 2)) == CENTER
    assert affine_unapply(h[3], P(3, 1, 2)) == CENTER
    with pytest.raises(OutsideQuadrantError):
        affine_unapply(h[0], P(3, 3, 2))


@pytest.mark.parametrize("nu", list(range(12)))
def test_unapply_roundtrip_random(nu):
    rng = random.Random(nu)
    for p in curve_table(nu).maps:
        for _ in range(100):
            e = rng.randint(0, 10)
            v = P(rng.randint(0, 1 << e), rng.randint(0, 1 << e), e)
            assert affine_unapply(p, affine_apply(p, v)) == v


@given(unit_points)
def test_roundtrip_property(v):
    for c in ALL_CURVES:
        for p in curve_table(c).maps:
            w = affine_apply(p, v)
            assert p.image_contains(w)
            assert affine_unapply(p, w) == v


@pytest.mark.parametrize("nu", list(range(12)))
def test_quadrant_images_partition_square(nu):
    maps = curve_table(nu).maps
    # corners of the unit square land on the corners of exactly one quadrant
    quads = []
    for p in maps:
        corners = {affine_apply(p, DyadicVec2.of(x, y)) for x in (0, 1) for y in (0, 1)}
        xs = {c.x for c in corners}
        ys = {c.y for c in corners}
        assert len(xs) == 2 and len(ys) == 2
        assert max(xs) - min(xs) == Dyadic(1, 1) and max(ys) - min(ys) == Dyadic(1, 1)
        quads.append((min(xs), min(ys)))
    assert sorted(quads) == sorted(
        (Dyadic(a, 1), Dyadic(b, 1)) for a in (0, 1) for b in (0, 1))


@pytest.mark.parametrize("nu", list(range(12)))
def test_order1_sequence_is_common(nu):
    pts = [affine_apply(p, CENTER) for p in curve_table(nu).maps]
    assert pts == [P(1, 1, 2), P(1, 3, 2), P(3, 3, 2), P(3, 1, 2)]
    assert [p.quadrant for p in curve_table(nu).maps] == [0, 1, 2, 3]
