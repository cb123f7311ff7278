"""Finite quaternary fractions ``0.q1 q2 ... qk`` used as curve parameters."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .dyadic import Dyadic

_INDEX_FORM = re.compile(r"^\s*(\d+)\s*/\s*4\^(\d+)\s*$")


@dataclass(frozen=True)
class QuaternaryFraction:
    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise ValueError("a quaternary fraction needs at least one digit")
        if any(d not in (0, 1, 2, 3) for d in self.digits):
            raise ValueError(f"digits must be in 0..3, got {self.digits}")

    @property
    def order(self) -> int:
        return len(self.digits)

    @property
    def index(self) -> int:
        """Integer ``i`` with value ``i / 4**k``."""
        i = 0
        for d in self.digits:
            i = 4 * i + d
        return i

    @property
    def value(self) -> Dyadic:
        return Dyadic(self.index, 2 * self.order)

    def __getitem__(self, s):
        return self.digits[s]

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def prepend_zeros(self, m: int) -> "QuaternaryFraction":
        """Digits of ``t / 4**m``."""
        return QuaternaryFraction((0,) * m + self.digits)

    def __str__(self) -> str:
        return "".join(map(str, self.digits))


def quaternary_parse(text: str) -> QuaternaryFraction:
    """Parse a digit string, optionally written as ``0.123``."""
    s = text.strip()
    if s.startswith("0."):
        s = s[2:]
    if not s or any(ch not in "0123" for ch in s):
        raise ValueError(f"invalid quaternary digits: {text!r}")
    return QuaternaryFraction(tuple(int(ch) for ch in s))


def quaternary_value(q: QuaternaryFraction) -> Dyadic:
    return q.value


def quaternary_from_index(i: int, k: int) -> QuaternaryFraction:
    if k < 1 or not 0 <= i < 4**k:
        raise ValueError(f"index {i} out of range for order {k}")
    digits = []
    for _ in range(k):
        i, d = divmod(i, 4)
        digits.append(d)
    return QuaternaryFraction(tuple(reversed(digits)))


def parse_parameter(text: str, k: int) -> QuaternaryFraction:
    """Accept either ``k`` raw digits or the index form ``i/4^k``."""
    m = _INDEX_FORM.match(text)
    if m:
        i, e = int(m.group(1)), int(m.group(2))
        if e != k:
            raise ValueError(f"index form denominator 4^{e} does not match order {k}")
        return quaternary_from_index(i, k)
    q = quaternary_parse(text)
    if q.order != k:
        raise ValueError(f"expected {k} digits, got {q.order}")
    return q
