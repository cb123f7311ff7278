"""Closed-form evaluation of the twelve curves at finite order.

A parameter ``t = 0.q1...qk`` is mapped to the centre of an order-k cell by
composing one affine map per digit and applying the result to the square's
centre ``(1/2, 1/2)``::

    proper:    nu_p[q1] . 0_p[q2] . 0_p[q3] ... 0_p[qk] (centre)
    improper:  nu_p[q1] . 5_p[q2] . 0_p[q3] ... 0_p[qk] (centre)

The improper curves first reverse the parameter inside some quadrants
(:func:`reversal_transform`). The geometric enumerator in :mod:`hhc.geom`
is the independent check for everything here.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .curves import (
    Curve,
    CurveLike,
    CurveTable,
    affine_apply,
    affine_unapply,
    curve_id,
    curve_table,
)
from .dyadic import CENTER, Dyadic, DyadicVec2
from .group import R, Rotation, rot_mul
from .quaternary import QuaternaryFraction, quaternary_from_index


class UnsupportedCurveError(ValueError):
    """The requested operation is not defined for this curve kind."""


def _as_q(q) -> QuaternaryFraction:
    if isinstance(q, QuaternaryFraction):
        return q
    return QuaternaryFraction(tuple(q))


def _check(nu: CurveLike, k: int, q, proper: bool) -> tuple[Curve, QuaternaryFraction]:
    c = curve_id(nu)
    if c.is_proper != proper:
        raise UnsupportedCurveError(f"{c} is {c.kind}; expected a {'proper' if proper else 'improper'} curve")
    q = _as_q(q)
    if k < 1:
        raise ValueError("order must be >= 1")
    if len(q) != k:
        raise ValueError(f"order {k} needs {k} digits, got {len(q)}")
    return c, q


def level_tables(c: Curve, k: int) -> list[CurveTable]:
    """Map table used at each recursion level, outermost first."""
    inner = curve_table(Curve.HILBERT)
    if c.is_proper:
        return [curve_table(c)] + [inner] * (k - 1)
    return ([curve_table(c), curve_table(Curve.LIU4)] + [inner] * (k - 2))[:k]


def _expanded_sum(tables: Sequence[CurveTable], digits: Sequence[int]) -> DyadicVec2:
    # f = 2^-k U1..Uk . centre + sum_{j>=2} 2^-j U1..U(j-1) . t_j + 1/2 t_1,
    # accumulated as integer numerators over the common denominator 2^(k+1).
    k = len(digits)
    first = tables[0][digits[0]]
    nx = first.translation.tx << k
    ny = first.translation.ty << k
    prod = first.rotation
    for j in range(2, k + 1):
        p = tables[j - 1][digits[j - 1]]
        ax, ay = prod.apply(p.translation.tx, p.translation.ty)
        nx += ax << (k + 1 - j)
        ny += ay << (k + 1 - j)
        prod = rot_mul(prod, p.rotation)
    cx, cy = prod.apply(1, 1)
    return DyadicVec2(Dyadic(nx + cx, k + 1), Dyadic(ny + cy, k + 1))


def compose_nested(tables: Sequence[CurveTable], digits: Sequence[int]) -> DyadicVec2:
    """Apply the per-digit maps innermost first, starting from the centre."""
    v = CENTER
    for table, d in zip(reversed(tables), reversed(digits)):
        v = affine_apply(table[d], v)
    return v


def eval_proper(nu: CurveLike, k: int, q) -> DyadicVec2:
    """Point of the order-``k`` proper curve ``nu`` at ``t = 0.q1...qk``.

    Uses the expanded sum where the j-th translation is rotated by the
    partial product of the rotations of digits 1..j-1.
    """
    c, q = _check(nu, k, q, proper=True)
    return _expanded_sum(level_tables(c, k), q.digits)


def eval_nested(nu: CurveLike, k: int, q) -> DyadicVec2:
    """Same map as :func:`eval_proper`/:func:`eval_improper` by literal composition."""
    c = curve_id(nu)
    q = _as_q(q)
    if not c.is_proper:
        if k == 2:
            return compose_nested(level_tables(Curve.LIU3, 2), q.digits)
        q = reversal_transform(c, k, q)
    return compose_nested(level_tables(c, k), q.digits)


# -- digit counts ----------------------------------------------------------

def _range_check(q, s: int, t: int) -> Sequence[int]:
    digits = _as_q(q).digits
    if not 1 <= s <= t <= len(digits):
        raise ValueError(f"range [{s}, {t}] outside 1..{len(digits)}")
    return digits[s - 1:t]


def count3(q, s: int, t: int) -> int:
    """Number of digits equal to 3 among ``q_s..q_t`` (1-based, inclusive)."""
    return sum(d == 3 for d in _range_check(q, s, t))


def count03(q, s: int, t: int) -> int:
    """Number of digits equal to 0 or 3 among ``q_s..q_t``."""
    return sum(d in (0, 3) for d in _range_check(q, s, t))


def count3_poly(q, s: int, t: int) -> int:
    """Polynomial form ``1/6 sum q(q-2)(q-1)``; valid for every range."""
    total = sum(d * (d - 2) * (d - 1) for d in _range_check(q, s, t))
    return total // 6


def count03_poly(q, s: int, t: int) -> int:
    """Polynomial form ``t + 1/2 sum q(q-3)``.

    Only correct for ``s == 1``: the additive term is the upper index, not
    the range length.
    """
    total = sum(d * (d - 3) for d in _range_check(q, s, t))
    return t + total // 2


def _prefix_counts(digits: Sequence[int], s: int, t: int) -> tuple[int, int]:
    # (#3, #03) over q_s..q_t; empty when t < s
    seg = digits[s - 1:t] if t >= s else ()
    return sum(d == 3 for d in seg), sum(d in (0, 3) for d in seg)


def eval_proper_fast(nu: CurveLike, k: int, q) -> DyadicVec2:
    """:func:`eval_proper` with the rotation products replaced by counts.

    The Hilbert rotations per digit are ``U_R, U_I, U_I, -U_R``, which all
    commute, so ``0_U[q2]...0_U[qj]`` is ``(-1)^#3 U_R^#03``; and
    ``U_R (1/2, 1/2) = (1/2, 1/2)``.
    """
    c, q = _check(nu, k, q, proper=True)
    digits = q.digits
    first = curve_table(c)[digits[0]]
    hil = curve_table(Curve.HILBERT)
    u1 = first.rotation
    nx = first.translation.tx << k
    ny = first.translation.ty << k
    for j in range(2, k + 1):
        n3, n03 = _prefix_counts(digits, 2, j - 1)
        rot = rot_mul(u1, R) if n03 % 2 else u1
        tx, ty = hil[digits[j - 1]].translation
        ax, ay = rot.apply(tx, ty)
        sign = -1 if n3 % 2 else 1
        nx += sign * ax << (k + 1 - j)
        ny += sign * ay << (k + 1 - j)
    n3, _ = _prefix_counts(digits, 2, k)
    sign = -1 if n3 % 2 else 1
    cx, cy = u1.apply(1, 1)
    return DyadicVec2(Dyadic(nx + sign * cx, k + 1), Dyadic(ny + sign * cy, k + 1))


# -- improper curves ---------------------------------------------------------

# Constants c of t' = c - 1/4^k - t per quadrant (None: t unchanged), in quarters.
REVERSAL_CONSTANTS: dict[Curve, tuple[Optional[int], ...]] = {
    Curve.I1: (None, 3, None, 7),
    Curve.I2: (None, 3, None, None),
    Curve.I3: (1, 3, None, None),
    Curve.I4: (1, None, 5, None),
    Curve.I5: (None, None, 5, 7),
    Curve.I6: (None, None, 5, None),
}


def reversal_transform(nu: CurveLike, k: int, q) -> QuaternaryFraction:
    """Reverse the parameter inside the quadrants the curve traverses backwards.

    Done in digit space: inside a reversed quadrant every digit after the
    first is replaced by ``3 - d``, i.e. ``i -> 4^(k-1) - 1 - i``.
    """
    c, q = _check(nu, k, q, proper=False)
    if REVERSAL_CONSTANTS[c][q[0]] is None:
        return q
    return QuaternaryFraction((q[0],) + tuple(3 - d for d in q.digits[1:]))


def reversal_transform_rational(nu: CurveLike, k: int, q) -> QuaternaryFraction:
    """Same transform evaluated as ``t' = c - 1/4^k - t`` in exact arithmetic."""
    c, q = _check(nu, k, q, proper=False)
    const = REVERSAL_CONSTANTS[c][q[0]]
    if const is None:
        return q
    tp = Dyadic(const, 2) - Dyadic(1, 2 * k) - q.value
    scaled = tp.scale2(-2 * k)
    if scaled.exponent != 0 or not 0 <= scaled.numerator < 4**k:
        raise ArithmeticError(f"t' = {tp} is not a {k}-digit quaternary fraction")
    out = quaternary_from_index(scaled.numerator, k)
    if out[0] != q[0]:
        raise ArithmeticError(f"t' = {tp} left quadrant {q[0]}")
    return out


def eval_improper(nu: CurveLike, k: int, q) -> DyadicVec2:
    """Point of the order-``k`` improper curve ``nu``.

    Order 2 is the Liu3 order-2 layout for all six improper curves; at
    every other order the parameter is reversion-transformed and composed
    over Liu4 (at order 1 this is just the four quadrant centres).
    """
    c, q = _check(nu, k, q, proper=False)
    if k == 2:
        return _expanded_sum(level_tables(Curve.LIU3, 2), q.digits)
    qp = reversal_transform(c, k, q)
    return _expanded_sum(level_tables(c, k), qp.digits)


def evaluate(nu: CurveLike, k: int, q) -> DyadicVec2:
    c = curve_id(nu)
    return eval_proper(c, k, q) if c.is_proper else eval_improper(c, k, q)


@dataclass(frozen=True)
class EvalResult:
    point: DyadicVec2
    curve: Curve
    order: int
    parameter: QuaternaryFraction
    transformed: Optional[QuaternaryFraction] = None


def eval_result(nu: CurveLike, k: int, q) -> EvalResult:
    c = curve_id(nu)
    q = _as_q(q)
    qp = reversal_transform(c, k, q) if not c.is_proper else None
    return EvalResult(evaluate(c, k, q), c, k, q, qp)


# -- transfer between proper curves -----------------------------------------

def _require_proper(*curves: CurveLike) -> list[Curve]:
    out = [curve_id(c) for c in curves]
    for c in out:
        if not c.is_proper:
            raise UnsupportedCurveError(f"transfer is only defined between proper curves; got {c}")
    return out


def transfer_point(nu: CurveLike, nu_prime: CurveLike, q1: int, w: DyadicVec2) -> DyadicVec2:
    """Carry a point of curve ``nu_prime`` in quadrant ``q1`` to curve ``nu``.

    ``nu_p[q1] . nu'_p[q1]^-1``; raises ``OutsideQuadrantError`` when ``w``
    is not in that quadrant.
    """
    a, b = _require_proper(nu, nu_prime)
    return affine_apply(curve_table(a)[q1], affine_unapply(curve_table(b)[q1], w))


def transfer_distance_check(nu: CurveLike, nu_prime: CurveLike, t, t1) -> bool:
    a, b = _require_proper(nu, nu_prime)
    t, t1 = _as_q(t), _as_q(t1)
    if t[0] != t1[0]:
        raise ValueError("parameters must share their first digit")
    if len(t) != len(t1):
        raise ValueError("parameters must have the same order")
    k = len(t)
    d_a = (eval_proper(a, k, t) - eval_proper(a, k, t1)).norm2()
    d_b = (eval_proper(b, k, t) - eval_proper(b, k, t1)).norm2()
    return d_a == d_b


# -- recursion in the parameter ------------------------------------------------

def recurse_shift(nu: CurveLike, k: int, m: int, q) -> DyadicVec2:
    """``f_nu^(k+m)(t / 4^m) = nu_p[0] . (0_p[0])^(m-1) . f_0^(k)(t)``."""
    c, q = _check(nu, k, q, proper=True)
    if m < 1:
        raise ValueError("m must be >= 1")
    hil0 = curve_table(Curve.HILBERT)[0]
    w = eval_proper(Curve.HILBERT, k, q)
    for _ in range(m - 1):
        w = affine_apply(hil0, w)
    return affine_apply(curve_table(c)[0], w)


def _rot(rot: Rotation, v: DyadicVec2) -> DyadicVec2:
    x, y = rot.apply(v.x, v.y)
    return DyadicVec2(x, y)


def recurse_closed_form(nu: CurveLike, k: int, r: int, parity: str, q, subscript: str = "nu") -> DyadicVec2:
    """Closed forms for ``f_nu^(k+m)(t/4^m)`` with ``m = 2r+1`` or ``m = 2r``.

    odd:  4^-r g + (4^r - 1) / 2^(2r+1) t0
    even: (-1)^nu / 2^(2r-1) U_R g + t0/2 - (-1)^nu / 4^r U_R t0

    with ``t0`` the quadrant-0 translation of ``nu`` and ``g = f^(k+1)(t/4)``.
    ``subscript="nu"`` takes ``g`` on curve ``nu``; ``subscript="0"`` on the
    Hilbert curve, which only agrees with :func:`recurse_shift` when the
    two coincide.
    """
    c, q = _check(nu, k, q, proper=True)
    if subscript not in ("nu", "0"):
        raise ValueError("subscript must be 'nu' or '0'")
    g_curve = c if subscript == "nu" else Curve.HILBERT
    g = eval_proper(g_curve, k + 1, q.prepend_zeros(1))
    tx, ty = curve_table(c)[0].translation
    t0 = DyadicVec2(Dyadic(tx), Dyadic(ty))
    if parity == "odd":
        if r < 0:
            raise ValueError("r must be >= 0 for odd m")
        return g.scale2(2 * r) + (t0 * (4**r - 1)).scale2(2 * r + 1)
    if parity == "even":
        if r < 1:
            raise ValueError("r must be >= 1 for even m")
        sign = -1 if c.nu % 2 else 1
        return (_rot(R, g) * sign).scale2(2 * r - 1) + t0.halve() - (_rot(R, t0) * sign).scale2(2 * r)
    raise ValueError("parity must be 'odd' or 'even'")


def recurse_closed_form_m(nu: CurveLike, k: int, m: int, q, subscript: str = "nu") -> DyadicVec2:
    r, odd = divmod(m, 2)
    return recurse_closed_form(nu, k, r, "odd" if odd else "even", q, subscript)


RECURSIVE_IMPROPER = tuple(c for c in REVERSAL_CONSTANTS if REVERSAL_CONSTANTS[c][0] is None)


def recurse_improper(nu: CurveLike, k: int, m: int, q) -> DyadicVec2:
    """``f_nu^(k+m)(t/4^m) = nu_p[0] f_5^(k+m-1)(t/4^(m-1))`` for improper ``nu``.

    Refused for I3 and I4, whose quadrant 0 is traversed in reverse so the
    prepended zeros do not survive the parameter transform.
    """
    c, q = _check(nu, k, q, proper=False)
    if c not in RECURSIVE_IMPROPER:
        raise UnsupportedCurveError(
            f"{c} reverses quadrant 0, so t/4^m is mapped to a different parameter "
            "before composition; the quadrant-0 recursion does not apply"
        )
    if m < 1:
        raise ValueError("m must be >= 1")
    if k + m < 3:
        raise ValueError("order k+m must be >= 3 (order 2 uses the Liu3 layout)")
    inner = recurse_shift(Curve.LIU4, k, m - 1, q) if m > 1 else eval_proper(Curve.LIU4, k, q)
    return affine_apply(curve_table(c)[0], inner)
