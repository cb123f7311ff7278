"""Geometric enumeration of the curves and checks of their tabulated properties.

This module is the oracle for :mod:`hhc.mapping`: it never evaluates a
parameter. It builds the order-k cell sequence by placing (possibly
reversed) affine copies of the order-(k-1) base sequence into the four
quadrants, working entirely on integer lattice numerators.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .curves import (
    QUADRANT_OF_BITS,
    Curve,
    CurveLike,
    affine_unapply,
    curve_id,
    curve_table,
    quadrant_of,
)
from .dyadic import CENTER, Dyadic, DyadicVec2
from .mapping import level_tables, reversal_transform
from .quaternary import QuaternaryFraction


@dataclass(frozen=True, slots=True)
class Cell:
    ix: int
    iy: int
    depth: int

    def center(self) -> DyadicVec2:
        return DyadicVec2(Dyadic(2 * self.ix + 1, self.depth + 1), Dyadic(2 * self.iy + 1, self.depth + 1))

    def address(self) -> list[int]:
        return cell_address(self, self.depth)

    @classmethod
    def from_point(cls, v: DyadicVec2, k: int) -> "Cell":
        """Cell of order ``k`` whose centre is ``v``."""
        nx, ny = v.x.scale2(-(k + 1)), v.y.scale2(-(k + 1))
        if nx.exponent or ny.exponent or not (nx.numerator & 1 and ny.numerator & 1):
            raise ValueError(f"{v} is not an order-{k} cell centre")
        return cls(nx.numerator // 2, ny.numerator // 2, k)

    @classmethod
    def from_address(cls, digits: Sequence[int]) -> "Cell":
        ix = iy = 0
        for d in digits:
            bx, by = _BITS[d]
            ix, iy = 2 * ix + bx, 2 * iy + by
        return cls(ix, iy, len(digits))


_BITS = {v: k for k, v in QUADRANT_OF_BITS.items()}


@dataclass(frozen=True)
class CellSequence:
    curve: Curve
    order: int
    cells: tuple[Cell, ...]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __getitem__(self, i):
        return self.cells[i]

    def lattice(self) -> list[tuple[int, int]]:
        return [(c.ix, c.iy) for c in self.cells]


def cell_address(cell: Cell, k: int) -> list[int]:
    """Quadrant digits from the outermost level down."""
    return [QUADRANT_OF_BITS[(cell.ix >> s) & 1, (cell.iy >> s) & 1] for s in range(k - 1, -1, -1)]


@lru_cache(maxsize=None)
def _centers(nu: int, k: int) -> tuple[tuple[int, int], ...]:
    # Odd numerators (X, Y) of the cell centres over the denominator 2^(k+1).
    c = Curve(nu)
    if k == 0:
        return ((1, 1),)
    if not c.is_proper and k == 2:
        return _centers(Curve.LIU3, 2)
    base = _centers(c.base, k - 1)
    scale = 1 << k
    out: list[tuple[int, int]] = []
    for p in curve_table(c).maps:
        (a, b), (cc, d) = p.rotation.matrix
        tx, ty = p.translation.tx * scale, p.translation.ty * scale
        image = [(a * x + b * y + tx, cc * x + d * y + ty) for x, y in base]
        if p.reversed:
            image.reverse()
        out.extend(image)
    return tuple(out)


def enumerate_curve(nu: CurveLike, k: int) -> CellSequence:
    """Order-``k`` cell sequence of curve ``nu`` by recursive subdivision.

    Improper curves at order 2 take the Liu3 order-2 layout; otherwise
    each quadrant receives the affine image of the order-(k-1) Hilbert
    (proper) or Liu4 (improper) sequence, reversed where the map says so.
    """
    c = curve_id(nu)
    if k < 1:
        raise ValueError("order must be >= 1")
    cells = tuple(Cell(x >> 1, y >> 1, k) for x, y in _centers(int(c), k))
    return CellSequence(c, k, cells)


def _lattice(seq) -> list[tuple[int, int]]:
    if isinstance(seq, CellSequence):
        return seq.lattice()
    return [(c.ix, c.iy) if isinstance(c, Cell) else tuple(c) for c in seq]


@dataclass(frozen=True)
class AdjacencyReport:
    passed: bool
    first_violation: Optional[int] = None

    def __bool__(self) -> bool:
        return self.passed


def check_adjacency(seq: Iterable) -> AdjacencyReport:
    """Every consecutive pair must differ by 1 in exactly one lattice coordinate."""
    pts = _lattice(seq)
    for i in range(len(pts) - 1):
        (x0, y0), (x1, y1) = pts[i], pts[i + 1]
        if abs(x0 - x1) + abs(y0 - y1) != 1:
            return AdjacencyReport(False, i)
    return AdjacencyReport(True)


def is_permutation(seq: CellSequence) -> bool:
    n = 1 << seq.order
    pts = seq.lattice()
    return len(pts) == n * n and len(set(pts)) == n * n and all(0 <= x < n and 0 <= y < n for x, y in pts)


# -- boundary conditions -------------------------------------------------------

@dataclass(frozen=True)
class AddressPattern:
    """``0.<prefix><repeat><repeat>...``"""

    prefix: tuple[int, ...]
    repeat: int

    def matches(self, digits: Sequence[int]) -> bool:
        n = len(self.prefix)
        return tuple(digits[:n]) == self.prefix[: len(digits)] and all(d == self.repeat for d in digits[n:])

    def __str__(self) -> str:
        return "0." + "".join(map(str, self.prefix)) + f"({self.repeat})"


def _pat(text: str) -> AddressPattern:
    *prefix, rep = text
    return AddressPattern(tuple(int(d) for d in prefix), int(rep))


# (entry, exit) per curve; a second pair is the mirror-reflected alternative.
BOUNDARY_CONDITIONS: dict[Curve, tuple[tuple[AddressPattern, AddressPattern], ...]] = {
    c: tuple((_pat(a), _pat(b)) for a, b in rows)
    for c, rows in {
        Curve.HILBERT: [("00", "33")],
        Curve.MOORE: [("03", "30")],
        Curve.LIU1: [("02", "31")],
        Curve.LIU2: [("01", "32")],
        Curve.LIU3: [("00", "31"), ("02", "33")],
        Curve.LIU4: [("01", "30"), ("03", "32")],
        Curve.I1: [("023", "310")],
        Curve.I2: [("023", "332"), ("001", "310")],
        Curve.I3: [("001", "332")],
        Curve.I4: [("032", "301")],
        Curve.I5: [("010", "323")],
        Curve.I6: [("010", "301"), ("032", "323")],
    }.items()
}


@dataclass(frozen=True)
class BoundaryReport:
    curve: Curve
    order: int
    entry: list[int]
    exit: list[int]
    passed: bool
    matched: str  # "primary", "mirror", "liu3-order2" or ""

    def describe(self) -> str:
        e = "".join(map(str, self.entry))
        x = "".join(map(str, self.exit))
        return f"{self.curve.label} k={self.order}: entry 0.{e} exit 0.{x} ({self.matched or 'no match'})"


def check_boundary_conditions(nu: CurveLike, k: int) -> BoundaryReport:
    c = curve_id(nu)
    seq = enumerate_curve(c, k)
    entry, exit_ = seq[0].address(), seq[-1].address()
    if not c.is_proper and k == 2:
        pe, px = BOUNDARY_CONDITIONS[Curve.LIU3][0]
        ok = (seq.lattice() == enumerate_curve(Curve.LIU3, 2).lattice()
              and pe.matches(entry) and px.matches(exit_))
        return BoundaryReport(c, k, entry, exit_, ok, "liu3-order2" if ok else "")
    for label, (pe, px) in zip(("primary", "mirror"), BOUNDARY_CONDITIONS[c]):
        if pe.matches(entry) and px.matches(exit_):
            return BoundaryReport(c, k, entry, exit_, True, label)
    return BoundaryReport(c, k, entry, exit_, False, "")


# -- geometric properties --------------------------------------------------------

@dataclass(frozen=True)
class CurveProperties:
    mirror_symmetric: bool
    entry_class: str
    exit_class: str
    closed: bool

    def row(self) -> tuple[str, str, str, bool]:
        return ("m" if self.mirror_symmetric else "1", self.entry_class, self.exit_class, self.closed)


TABLE3: dict[Curve, CurveProperties] = {
    Curve.HILBERT: CurveProperties(True, "corner", "corner", False),
    Curve.MOORE: CurveProperties(True, "edge", "edge", True),
    Curve.LIU1: CurveProperties(True, "interior", "interior", True),
    Curve.LIU2: CurveProperties(True, "edge", "edge", False),
    Curve.LIU3: CurveProperties(False, "corner", "interior", False),
    Curve.LIU4: CurveProperties(False, "edge", "edge", False),
    Curve.I1: CurveProperties(True, "interior", "interior", True),
    Curve.I2: CurveProperties(False, "interior", "edge", False),
    Curve.I3: CurveProperties(True, "edge", "edge", False),
    Curve.I4: CurveProperties(True, "interior", "interior", True),
    Curve.I5: CurveProperties(True, "edge", "edge", False),
    Curve.I6: CurveProperties(False, "edge", "interior", False),
}


def boundary_class(ix: int, iy: int, k: int) -> str:
    n = (1 << k) - 1
    touching = (ix == 0) + (ix == n) + (iy == 0) + (iy == n)
    return {0: "interior", 1: "edge"}.get(touching, "corner")


def classify_properties(nu: CurveLike, k: int) -> CurveProperties:
    seq = enumerate_curve(nu, k).lattice()
    n = (1 << k) - 1
    mirrored = [(n - x, y) for x, y in reversed(seq)]
    (x0, y0), (x1, y1) = seq[0], seq[-1]
    return CurveProperties(
        mirror_symmetric=mirrored == seq,
        entry_class=boundary_class(x0, y0, k),
        exit_class=boundary_class(x1, y1, k),
        closed=abs(x0 - x1) + abs(y0 - y1) == 1,
    )


# -- inversion --------------------------------------------------------------------

def invert_point(nu: CurveLike, k: int, cell: Cell) -> QuaternaryFraction:
    """Parameter digits whose image is the centre of ``cell``, by quadrant descent."""
    c = curve_id(nu)
    if cell.depth != k:
        raise ValueError(f"cell depth {cell.depth} does not match order {k}")
    clone = not c.is_proper and k == 2
    tables = level_tables(Curve.LIU3 if clone else c, k)
    w = cell.center()
    digits = []
    for table in tables:
        quad = quadrant_of(w)
        d = next(i for i, p in enumerate(table.maps) if p.quadrant == quad)
        digits.append(d)
        w = affine_unapply(table[d], w)
    if w != CENTER:
        raise AssertionError(f"descent ended at {w}, not the centre")
    q = QuaternaryFraction(tuple(digits))
    if not c.is_proper and not clone:
        q = reversal_transform(c, k, q)  # involution
    return q
