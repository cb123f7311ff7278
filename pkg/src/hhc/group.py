"""The eight orthogonal rotation/reflection parts of the curve maps.

``rot_mul`` reads the transcribed multiplication table; ``matrix_mul`` is the
independent integer-matrix route. ``verify_group_structure`` checks the two
against each other and inspects the group (dihedral of order 8, 4mm).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

Matrix = tuple[tuple[int, int], tuple[int, int]]


class Rotation(Enum):
    I = "I"
    R = "R"
    NEG_I = "negI"
    NEG_R = "negR"
    V = "V"
    H = "H"
    NEG_V = "negV"
    NEG_H = "negH"

    @property
    def matrix(self) -> Matrix:
        return _MATRICES[self]

    @property
    def symbol(self) -> str:
        base = self.value.removeprefix("neg")
        return ("-" if self.value.startswith("neg") else "") + "U_" + base

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    @classmethod
    def from_matrix(cls, m: Matrix) -> "Rotation":
        try:
            return _BY_MATRIX[m]
        except KeyError:
            raise ValueError(f"{m} is not one of the eight curve rotations") from None

    @classmethod
    def from_symbol(cls, s: str) -> "Rotation":
        neg = s.startswith("-")
        label = s.lstrip("-").removeprefix("U_")
        return cls(("neg" if neg else "") + label)

    def apply(self, x, y):
        """Matrix-vector product on any ring supporting ``*int`` and ``+``."""
        (a, b), (c, d) = self.matrix
        return _lin(a, x, b, y), _lin(c, x, d, y)

    def __mul__(self, other: "Rotation") -> "Rotation":
        return rot_mul(self, other)

    def __repr__(self) -> str:
        return self.symbol


def _lin(a: int, x, b: int, y):
    # entries are in {-1, 0, 1}; avoid multiplications where possible
    if a == 0:
        return y if b == 1 else -y
    if b == 0:
        return x if a == 1 else -x
    return x * a + y * b


def _neg(m: Matrix) -> Matrix:
    return tuple(tuple(-e for e in row) for row in m)  # type: ignore[return-value]


_BASE: dict[str, Matrix] = {
    "I": ((1, 0), (0, 1)),
    "R": ((0, 1), (1, 0)),
    "V": ((0, -1), (1, 0)),
    "H": ((1, 0), (0, -1)),
}
_MATRICES: dict[Rotation, Matrix] = {}
for _r in Rotation:
    _label = _r.value.removeprefix("neg")
    _MATRICES[_r] = _neg(_BASE[_label]) if _r.value.startswith("neg") else _BASE[_label]
_BY_MATRIX = {m: r for r, m in _MATRICES.items()}

I, R, NEG_I, NEG_R = Rotation.I, Rotation.R, Rotation.NEG_I, Rotation.NEG_R
V, H, NEG_V, NEG_H = Rotation.V, Rotation.H, Rotation.NEG_V, Rotation.NEG_H

# Row/column order of the reference table.
TABLE_ORDER = (I, R, NEG_I, NEG_R, V, H, NEG_V, NEG_H)

# Reference multiplication table, row a times column b.
_TABLE5_ROWS = (
    "U_I   U_R   -U_I  -U_R  U_V   U_H   -U_V  -U_H",
    "U_R   U_I   -U_R  -U_I  U_H   U_V   -U_H  -U_V",
    "-U_I  -U_R  U_I   U_R   -U_V  -U_H  U_V   U_H",
    "-U_R  -U_I  U_R   U_I   -U_H  -U_V  U_H   U_V",
    "U_V   -U_H  -U_V  U_H   -U_I  U_R   U_I   -U_R",
    "U_H   -U_V  -U_H  U_V   -U_R  U_I   U_R   -U_I",
    "-U_V  U_H   U_V   -U_H  U_I   -U_R  -U_I  U_R",
    "-U_H  U_V   U_H   -U_V  U_R   -U_I  -U_R  U_I",
)
MULTIPLICATION_TABLE: dict[tuple[Rotation, Rotation], Rotation] = {
    (a, b): Rotation.from_symbol(sym)
    for a, row in zip(TABLE_ORDER, _TABLE5_ROWS)
    for b, sym in zip(TABLE_ORDER, row.split())
}


def rot_mul(a: Rotation, b: Rotation) -> Rotation:
    """Product ``a . b`` looked up in the reference table."""
    return MULTIPLICATION_TABLE[a, b]


def matrix_mul(a: Rotation, b: Rotation) -> Rotation:
    """Product ``a . b`` by explicit integer matrix multiplication."""
    (a11, a12), (a21, a22) = a.matrix
    (b11, b12), (b21, b22) = b.matrix
    return Rotation.from_matrix(
        ((a11 * b11 + a12 * b21, a11 * b12 + a12 * b22),
         (a21 * b11 + a22 * b21, a21 * b12 + a22 * b22))
    )


def rot_inv(a: Rotation) -> Rotation:
    for b in Rotation:
        if rot_mul(a, b) is I:
            return b
    raise AssertionError(f"no inverse for {a!r}")  # unreachable for a group


def rot_pow(a: Rotation, n: int) -> Rotation:
    out = I
    base = a if n >= 0 else rot_inv(a)
    for _ in range(abs(n)):
        out = rot_mul(out, base)
    return out


def element_order(a: Rotation) -> int:
    n, cur = 1, a
    while cur is not I:
        cur = rot_mul(cur, a)
        n += 1
    return n


def is_closed(subset) -> bool:
    s = set(subset)
    return all(rot_mul(a, b) in s for a in s for b in s)


# Subgroups named in the group-structure discussion.
ORDER4_SUBGROUPS = {
    "2mm {I,-I,R,-R}": (I, NEG_I, R, NEG_R),
    "2mm {I,-I,H,-H}": (I, NEG_I, H, NEG_H),
    "4 {I,-I,V,-V}": (I, NEG_I, V, NEG_V),
}
ORDER2_SUBGROUPS = {
    "{I,R}": (I, R),
    "{I,-R}": (I, NEG_R),
    "{I,-I}": (I, NEG_I),
    "{I,H}": (I, H),
    "{I,-H}": (I, NEG_H),
}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  [{self.detail}]" if self.detail else "")


@dataclass
class GroupReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))


def verify_group_structure() -> GroupReport:
    rep = GroupReport()
    elems = list(Rotation)
    pairs = list(itertools.product(elems, elems))

    for r in elems:
        (a, b), (c, d) = r.matrix
        orth = (a * a + c * c, b * b + d * d, a * b + c * d) == (1, 1, 0)
        rep.add(f"orthogonal {r.symbol}", orth and r.det in (-1, 1), f"det={r.det}")

    agree = [(a, b) for a, b in pairs if rot_mul(a, b) is matrix_mul(a, b)]
    rep.add("table matches matrix products", len(agree) == 64, f"{len(agree)}/64")
    closed = sum(rot_mul(a, b) in elems for a, b in pairs)
    rep.add("closure", closed == 64, f"{closed}/64")

    ids = [e for e in elems if all(rot_mul(e, x) is x and rot_mul(x, e) is x for x in elems)]
    rep.add("unique identity", ids == [I], ",".join(e.symbol for e in ids))
    rep.add("inverses", all(rot_mul(a, rot_inv(a)) is I and rot_mul(rot_inv(a), a) is I for a in elems))
    assoc = all(rot_mul(rot_mul(a, b), c) is rot_mul(a, rot_mul(b, c))
                for a, b, c in itertools.product(elems, repeat=3))
    rep.add("associativity", assoc, "512 triples")

    witness = next(((a, b) for a, b in pairs if rot_mul(a, b) is not rot_mul(b, a)), None)
    rep.add("non-abelian", witness is not None,
            f"{witness[0].symbol}.{witness[1].symbol} != {witness[1].symbol}.{witness[0].symbol}" if witness else "")

    profile: dict[int, int] = {}
    for e in elems:
        profile[element_order(e)] = profile.get(element_order(e), 0) + 1
    rep.add("order-8 element profile {1:1, 2:5, 4:2}",
            len(elems) == 8 and profile == {1: 1, 2: 5, 4: 2}, str(dict(sorted(profile.items()))))
    gen = {I}
    while True:
        grown = gen | {rot_mul(a, b) for a in gen | {R, H} for b in gen | {R, H}}
        if grown == gen:
            break
        gen = grown
    rep.add("generated by {U_R, U_H}", gen == set(elems), f"{len(gen)} elements")

    for name, sub in ORDER4_SUBGROUPS.items():
        cyclic = any(element_order(e) == 4 for e in sub)
        ok = is_closed(sub) and (cyclic == name.startswith("4 "))
        rep.add(f"subgroup {name}", ok, "cyclic" if cyclic else "klein")
    for name, sub in ORDER2_SUBGROUPS.items():
        rep.add(f"subgroup {name}", is_closed(sub))
    return rep
