"""Affine maps ``[U, t]_1/2`` and the twelve curve tables.

Quadrant digits have a fixed absolute meaning at every level:
0 = lower-left, 1 = upper-left, 2 = upper-right, 3 = lower-right.
Translations are stored un-halved; the factor 1/2
is applied in :func:`affine_apply` only.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple, Union

from .dyadic import HALF, Dyadic, DyadicVec2
from .group import H, I, NEG_H, NEG_I, NEG_R, NEG_V, R, V, Rotation, rot_inv


class OutsideQuadrantError(ValueError):
    """A point handed to an inverse map is not in that map's image."""


class Translation(NamedTuple):
    tx: int
    ty: int


T = (
    Translation(0, 0),
    Translation(0, 1),
    Translation(1, 0),
    Translation(1, 1),
    Translation(2, 1),
    Translation(1, 2),
)

# Lower-left corner (in halves) of each quadrant digit.
QUADRANT_ORIGIN = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}
QUADRANT_OF_BITS = {v: k for k, v in QUADRANT_ORIGIN.items()}


def quadrant_of(v: DyadicVec2) -> int:
    """Quadrant digit containing ``v`` (points on x=1/2 or y=1/2 go up/right)."""
    return QUADRANT_OF_BITS[int(v.x >= HALF), int(v.y >= HALF)]


class Curve(IntEnum):
    HILBERT = 0
    MOORE = 1
    LIU1 = 2
    LIU2 = 3
    LIU3 = 4
    LIU4 = 5
    I1 = 6
    I2 = 7
    I3 = 8
    I4 = 9
    I5 = 10
    I6 = 11

    @property
    def nu(self) -> int:
        return int(self)

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def kind(self) -> str:
        return "proper" if self <= 5 else "improper"

    @property
    def is_proper(self) -> bool:
        return self <= 5

    @property
    def base(self) -> "Curve":
        """Curve whose order-(k-1) copies are placed in the quadrants."""
        return Curve.HILBERT if self.is_proper else Curve.LIU4

    def __str__(self) -> str:
        return f"{self.label} (nu={int(self)})"


_LABELS = {
    Curve.HILBERT: "Hilbert", Curve.MOORE: "Moore",
    Curve.LIU1: "Liu1", Curve.LIU2: "Liu2", Curve.LIU3: "Liu3", Curve.LIU4: "Liu4",
    Curve.I1: "I1", Curve.I2: "I2", Curve.I3: "I3",
    Curve.I4: "I4", Curve.I5: "I5", Curve.I6: "I6",
}

CurveLike = Union[Curve, int, str]


def curve_id(value: CurveLike) -> Curve:
    """Resolve an index 0..11 or a case-insensitive name (``"liu3"``, ``"i1"``)."""
    if isinstance(value, Curve):
        return value
    if isinstance(value, str):
        s = value.strip().lower()
        if s.isdigit():
            value = int(s)
        else:
            for c in Curve:
                if c.label.lower() == s:
                    return c
            raise ValueError(f"unknown curve name {value!r}")
    if isinstance(value, int) and 0 <= value <= 11:
        return Curve(value)
    raise ValueError(f"unknown curve {value!r}; expected 0..11")


@dataclass(frozen=True)
class AffineMap:
    """``v -> 1/2 U v + 1/2 t``; ``reversed`` marks a traversal-reversed quadrant."""

    rotation: Rotation
    translation: Translation
    reversed: bool = False

    def apply(self, v: DyadicVec2) -> DyadicVec2:
        return affine_apply(self, v)

    def unapply(self, w: DyadicVec2) -> DyadicVec2:
        return affine_unapply(self, w)

    @property
    def quadrant(self) -> int:
        """Digit of the quadrant that the unit square is mapped onto."""
        return quadrant_of(affine_apply(self, DyadicVec2(HALF, HALF)))

    def image_contains(self, w: DyadicVec2) -> bool:
        ox, oy = QUADRANT_ORIGIN[self.quadrant]
        lo_x, lo_y = Dyadic(ox, 1), Dyadic(oy, 1)
        return lo_x <= w.x <= lo_x + HALF and lo_y <= w.y <= lo_y + HALF

    def __str__(self) -> str:
        s = f"[{self.rotation.symbol}, t{T.index(self.translation)}]"
        return f"rev{s}" if self.reversed else s


def affine_apply(p: AffineMap, v: DyadicVec2) -> DyadicVec2:
    x, y = p.rotation.apply(v.x, v.y)
    return DyadicVec2((x + p.translation.tx).halve(), (y + p.translation.ty).halve())


def affine_unapply(p: AffineMap, w: DyadicVec2) -> DyadicVec2:
    if not p.image_contains(w):
        raise OutsideQuadrantError(f"{w} is outside the image of {p}")
    x, y = rot_inv(p.rotation).apply(w.x * 2 - p.translation.tx, w.y * 2 - p.translation.ty)
    return DyadicVec2(x, y)


@dataclass(frozen=True)
class CurveTable:
    id: Curve
    maps: tuple[AffineMap, AffineMap, AffineMap, AffineMap]

    @property
    def base(self) -> Curve:
        return self.id.base

    def __getitem__(self, digit: int) -> AffineMap:
        return self.maps[digit]


def _m(rot: Rotation, t: int, rev: bool = False) -> AffineMap:
    return AffineMap(rot, T[t], rev)


_TABLES = {
    Curve.HILBERT: (_m(R, 0), _m(I, 1), _m(I, 3), _m(NEG_R, 4)),
    Curve.MOORE: (_m(V, 2), _m(V, 3), _m(NEG_V, 5), _m(NEG_V, 3)),
    Curve.LIU1: (_m(NEG_I, 3), _m(I, 1), _m(I, 3), _m(NEG_I, 4)),
    Curve.LIU2: (_m(H, 1), _m(V, 3), _m(NEG_V, 5), _m(H, 3)),
    Curve.LIU3: (_m(R, 0), _m(I, 1), _m(I, 3), _m(NEG_I, 4)),
    Curve.LIU4: (_m(H, 1), _m(V, 3), _m(NEG_V, 5), _m(NEG_V, 3)),
    Curve.I1: (_m(NEG_I, 3), _m(NEG_H, 3, True), _m(I, 3), _m(H, 3, True)),
    Curve.I2: (_m(NEG_I, 3), _m(NEG_H, 3, True), _m(I, 3), _m(NEG_R, 4)),
    Curve.I3: (_m(NEG_V, 1, True), _m(NEG_H, 3, True), _m(I, 3), _m(NEG_R, 4)),
    Curve.I4: (_m(NEG_R, 3, True), _m(V, 3), _m(R, 3, True), _m(NEG_V, 3)),
    Curve.I5: (_m(H, 1), _m(V, 3), _m(R, 3, True), _m(NEG_I, 4, True)),
    Curve.I6: (_m(H, 1), _m(V, 3), _m(R, 3, True), _m(NEG_V, 3)),
}


def curve_table(nu: CurveLike) -> CurveTable:
    c = curve_id(nu)
    return CurveTable(c, _TABLES[c])


ALL_CURVES = tuple(Curve)
PROPER_CURVES = tuple(c for c in Curve if c.is_proper)
IMPROPER_CURVES = tuple(c for c in Curve if not c.is_proper)

__all__ = [
    "AffineMap", "Curve", "CurveTable", "OutsideQuadrantError", "T", "Translation",
    "affine_apply", "affine_unapply", "curve_id", "curve_table", "quadrant_of",
    "ALL_CURVES", "PROPER_CURVES", "IMPROPER_CURVES",
]
