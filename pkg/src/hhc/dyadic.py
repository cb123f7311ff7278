"""Exact dyadic rationals (integer / 2**e) and 2-vectors built from them.

Every coordinate produced by the curve maps is a dyadic rational, so no
general-purpose rational type is needed. Values are kept canonical
(odd numerator, or zero with exponent zero) so equality and hashing are
structural.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

_TEXT = re.compile(r"^\s*(-?\d+)\s*/\s*2\^(\d+)\s*$")


@total_ordering
class Dyadic:
    """Exact value ``numerator / 2**exponent`` in canonical form."""

    __slots__ = ("_num", "_exp")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if exponent < 0:
            numerator <<= -exponent
            exponent = 0
        if numerator == 0:
            exponent = 0
        elif exponent and not numerator & 1:
            tz = (numerator & -numerator).bit_length() - 1
            shift = min(tz, exponent)
            numerator >>= shift
            exponent -= shift
        object.__setattr__(self, "_num", numerator)
        object.__setattr__(self, "_exp", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @property
    def numerator(self) -> int:
        return self._num

    @property
    def exponent(self) -> int:
        return self._exp

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Inverse of ``str``: accepts ``"n/2^e"`` or a bare integer."""
        m = _TEXT.match(text)
        if m:
            return cls(int(m.group(1)), int(m.group(2)))
        try:
            return cls(int(text))
        except ValueError:
            raise ValueError(f"not a dyadic literal: {text!r}") from None

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Dyadic":
        den = value.denominator
        if den & (den - 1):
            raise ValueError(f"{value} has a non power-of-two denominator")
        return cls(value.numerator, den.bit_length() - 1)

    def _align(self, other: "Dyadic") -> tuple[int, int, int]:
        e = max(self._exp, other._exp)
        return self._num << (e - self._exp), other._num << (e - other._exp), e

    def __add__(self, other: DyadicLike) -> "Dyadic":
        other = _coerce(other)
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other: DyadicLike) -> "Dyadic":
        other = _coerce(other)
        a, b, e = self._align(other)
        return Dyadic(a - b, e)

    def __rsub__(self, other: DyadicLike) -> "Dyadic":
        return _coerce(other) - self

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self._num, self._exp)

    def __mul__(self, other: DyadicLike) -> "Dyadic":
        if isinstance(other, int):
            return Dyadic(self._num * other, self._exp)
        other = _coerce(other)
        return Dyadic(self._num * other._num, self._exp + other._exp)

    __rmul__ = __mul__

    def halve(self) -> "Dyadic":
        return Dyadic(self._num, self._exp + 1)

    def scale2(self, e: int) -> "Dyadic":
        """Multiply by ``2**-e`` (``e`` may be negative)."""
        return Dyadic(self._num, self._exp + e)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self._num == other._num and self._exp == other._exp

    def __lt__(self, other: DyadicLike) -> bool:
        a, b, _ = self._align(_coerce(other))
        return a < b

    def __hash__(self) -> int:
        return hash((self._num, self._exp))

    def __float__(self) -> float:
        return self._num / (1 << self._exp)

    def to_fraction(self) -> Fraction:
        return Fraction(self._num, 1 << self._exp)

    def __str__(self) -> str:
        return f"{self._num}/2^{self._exp}"

    def __repr__(self) -> str:
        return f"Dyadic({self._num}, {self._exp})"


DyadicLike = Union[Dyadic, int]

ZERO = Dyadic(0)
HALF = Dyadic(1, 1)
ONE = Dyadic(1)


def _coerce(v: DyadicLike) -> Dyadic:
    if isinstance(v, Dyadic):
        return v
    if isinstance(v, int):
        return Dyadic(v)
    raise TypeError(f"cannot use {type(v).__name__} as a dyadic value")


@dataclass(frozen=True, slots=True)
class DyadicVec2:
    x: Dyadic
    y: Dyadic

    @classmethod
    def of(cls, x: DyadicLike, y: DyadicLike) -> "DyadicVec2":
        return cls(_coerce(x), _coerce(y))

    def __add__(self, other: "DyadicVec2") -> "DyadicVec2":
        return DyadicVec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "DyadicVec2") -> "DyadicVec2":
        return DyadicVec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "DyadicVec2":
        return DyadicVec2(-self.x, -self.y)

    def __mul__(self, c: DyadicLike) -> "DyadicVec2":
        return DyadicVec2(self.x * c, self.y * c)

    __rmul__ = __mul__

    def halve(self) -> "DyadicVec2":
        return DyadicVec2(self.x.halve(), self.y.halve())

    def scale2(self, e: int) -> "DyadicVec2":
        return DyadicVec2(self.x.scale2(e), self.y.scale2(e))

    def norm2(self) -> Dyadic:
        """Squared Euclidean length, exact."""
        return self.x * self.x + self.y * self.y

    def in_unit_square(self) -> bool:
        return ZERO <= self.x <= ONE and ZERO <= self.y <= ONE

    def __iter__(self):
        yield self.x
        yield self.y

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


CENTER = DyadicVec2(HALF, HALF)
