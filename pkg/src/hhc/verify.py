"""Verification suites shared by ``hhc verify`` and the acceptance tests.

Each suite returns a list of :class:`~hhc.group.Check`; a suite passes when
every check passes.
"""
from __future__ import annotations

import itertools
import random
from typing import Callable

from .curves import ALL_CURVES, IMPROPER_CURVES, PROPER_CURVES, Curve, curve_table, quadrant_of
from .dyadic import CENTER
from .geom import (
    TABLE3,
    check_adjacency,
    check_boundary_conditions,
    classify_properties,
    enumerate_curve,
    is_permutation,
)
from .group import Check, verify_group_structure
from .mapping import (
    REVERSAL_CONSTANTS,
    RECURSIVE_IMPROPER,
    UnsupportedCurveError,
    count03,
    count03_poly,
    count3,
    count3_poly,
    eval_proper,
    eval_proper_fast,
    evaluate,
    recurse_closed_form_m,
    recurse_improper,
    recurse_shift,
    transfer_point,
)
from .quaternary import QuaternaryFraction, quaternary_from_index

SEED = 20130501


def _all_q(k: int):
    return (quaternary_from_index(i, k) for i in range(4**k))


def _random_q(rng: random.Random, k: int) -> QuaternaryFraction:
    return QuaternaryFraction(tuple(rng.randrange(4) for _ in range(k)))


def suite_group() -> list[Check]:
    return verify_group_structure().checks


def suite_tables(max_boundary_order: int = 7, max_class_order: int = 6) -> list[Check]:
    out = []
    order1 = [(1, 1), (1, 3), (3, 3), (3, 1)]
    for c in ALL_CURVES:
        maps = curve_table(c).maps
        pts = [p.apply(CENTER) for p in maps]
        ok = [(int(v.x.numerator), int(v.y.numerator)) for v in pts] == order1 and all(
            v.x.exponent == 2 and v.y.exponent == 2 for v in pts)
        out.append(Check(f"order-1 quadrant order {c.label}", ok))
        out.append(Check(f"quadrants partition square {c.label}",
                         sorted(quadrant_of(v) for v in pts) == [0, 1, 2, 3]))
        flags = tuple(p.reversed for p in maps)
        if c.is_proper:
            out.append(Check(f"no reversion in proper {c.label}", not any(flags)))
        else:
            expected = tuple(x is not None for x in REVERSAL_CONSTANTS[c])
            out.append(Check(f"reversed quadrants match parameter table {c.label}", flags == expected))
    for c in ALL_CURVES:
        lo = 3 if c.is_proper else 2
        for k in range(lo, max_boundary_order + 1):
            rep = check_boundary_conditions(c, k)
            out.append(Check(f"boundary {c.label} k={k}", rep.passed, rep.describe()))
    for c in ALL_CURVES:
        for k in range(3, max_class_order + 1):
            got = classify_properties(c, k)
            out.append(Check(f"properties {c.label} k={k}", got == TABLE3[c], str(got.row())))
    return out


def suite_adjacency(max_order: int = 6) -> list[Check]:
    out = []
    for c in ALL_CURVES:
        for k in range(1, max_order + 1):
            seq = enumerate_curve(c, k)
            rep = check_adjacency(seq)
            out.append(Check(f"adjacency {c.label} k={k}", rep.passed and is_permutation(seq),
                             "" if rep.passed else f"violation at {rep.first_violation}"))
    return out


def suite_equivalence(max_order: int = 6) -> list[Check]:
    out = []
    for c in ALL_CURVES:
        for k in range(1 if c.is_proper else 2, max_order + 1):
            seq = enumerate_curve(c, k)
            bad = [i for i, cell in enumerate(seq) if evaluate(c, k, quaternary_from_index(i, k)) != cell.center()]
            out.append(Check(f"arithmetic == geometric {c.label} k={k}", not bad,
                             f"{4**k - len(bad)}/{4**k}" + (f", first mismatch {bad[0]}" if bad else "")))
    return out


def suite_transfer(k: int = 8, pairs: int = 1000, seed: int = SEED) -> list[Check]:
    rng = random.Random(seed)
    samples = []
    for _ in range(pairs):
        t = _random_q(rng, k)
        t1 = QuaternaryFraction((t[0],) + _random_q(rng, k - 1).digits)
        samples.append((t, t1))
    pts = {(c, t): eval_proper(c, k, t) for c in PROPER_CURVES for pair in samples for t in pair}
    out = []
    for a, b in itertools.permutations(PROPER_CURVES, 2):
        mapped = dist = trip = 0
        for t, t1 in samples:
            w, w1 = pts[b, t], pts[b, t1]
            img = transfer_point(a, b, t[0], w)
            mapped += img == pts[a, t]
            dist += (pts[a, t] - pts[a, t1]).norm2() == (w - w1).norm2()
            trip += transfer_point(b, a, t[0], img) == w
        n = len(samples)
        out.append(Check(f"transfer {b.label}->{a.label}", mapped == dist == trip == n,
                         f"map {mapped}/{n}, dist {dist}/{n}, round-trip {trip}/{n}"))
    return out


def suite_recursion(max_k: int = 5, max_m: int = 5, exhaustive_k: int = 5, random_q: int = 64,
                    seed: int = SEED) -> list[Check]:
    rng = random.Random(seed)

    def grid(k):
        return list(_all_q(k)) if k <= exhaustive_k else [_random_q(rng, k) for _ in range(random_q)]

    out = []
    counterexample = None
    for c in PROPER_CURVES:
        shift_ok = form_ok = total = 0
        for k in range(1, max_k + 1):
            qs = grid(k)
            for m in range(1, max_m + 1):
                for q in qs:
                    direct = eval_proper(c, k + m, q.prepend_zeros(m))
                    shifted = recurse_shift(c, k, m, q)
                    shift_ok += shifted == direct
                    form_ok += recurse_closed_form_m(c, k, m, q, "nu") == shifted
                    total += 1
                    if counterexample is None and c.nu >= 1 and m % 2 == 0:
                        if recurse_closed_form_m(c, k, m, q, "0") != shifted:
                            counterexample = (c, k, m, q)
        out.append(Check(f"shift == prepended eval {c.label}", shift_ok == total, f"{shift_ok}/{total}"))
        out.append(Check(f"closed form (subscript nu) == shift {c.label}", form_ok == total, f"{form_ok}/{total}"))
    out.append(Check(
        "closed form with subscript 0 fails for some nu>=1, even m", counterexample is not None,
        f"{counterexample[0].label} k={counterexample[1]} m={counterexample[2]} q={counterexample[3]}"
        if counterexample else "no counterexample"))
    for c in RECURSIVE_IMPROPER:
        ok = total = 0
        for k in range(2, 5):
            qs = grid(k)
            for m in range(1, 4):
                for q in qs:
                    ok += recurse_improper(c, k, m, q) == evaluate(c, k + m, q.prepend_zeros(m))
                    total += 1
        out.append(Check(f"improper recursion {c.label}", ok == total, f"{ok}/{total}"))
    for c in sorted(set(IMPROPER_CURVES) - set(RECURSIVE_IMPROPER)):
        try:
            recurse_improper(c, 2, 1, (0, 0))
            refused = False
        except UnsupportedCurveError:
            refused = True
        out.append(Check(f"improper recursion refused {Curve(c).label}", refused))
    return out


def suite_counts(max_order: int = 6, random_n: int = 10_000, max_random_order: int = 12,
                 seed: int = SEED) -> list[Check]:
    out = []
    agree3 = agree03 = n = 0
    for k in range(1, max_order + 1):
        for q in _all_q(k):
            for t in range(1, k + 1):
                agree3 += count3(q, 1, t) == count3_poly(q, 1, t)
                agree03 += count03(q, 1, t) == count03_poly(q, 1, t)
                n += 1
    out.append(Check("count3 polynomial == direct (s=1)", agree3 == n, f"{agree3}/{n}"))
    out.append(Check("count03 polynomial == direct (s=1)", agree03 == n, f"{agree03}/{n}"))
    off = count03((1, 0, 3), 2, 3) != count03_poly((1, 0, 3), 2, 3)
    out.append(Check("count03 polynomial is off for s>1 (documented)", off,
                     f"direct {count03((1, 0, 3), 2, 3)}, polynomial {count03_poly((1, 0, 3), 2, 3)}"))
    for c in PROPER_CURVES:
        ok = total = 0
        for k in range(1, max_order + 1):
            for q in _all_q(k):
                ok += eval_proper_fast(c, k, q) == eval_proper(c, k, q)
                total += 1
        out.append(Check(f"fast path exhaustive {c.label}", ok == total, f"{ok}/{total}"))
    rng = random.Random(seed)
    ok = 0
    for _ in range(random_n):
        c = rng.choice(PROPER_CURVES)
        k = rng.randint(1, max_random_order)
        q = _random_q(rng, k)
        ok += eval_proper_fast(c, k, q) == eval_proper(c, k, q)
    out.append(Check("fast path randomized", ok == random_n, f"{ok}/{random_n}"))
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "group": suite_group,
    "tables": suite_tables,
    "adjacency": suite_adjacency,
    "equivalence": suite_equivalence,
    "transfer": suite_transfer,
    "recursion": suite_recursion,
    "counts": suite_counts,
}


def run_suite(name: str) -> list[tuple[str, list[Check]]]:
    names = list(SUITES) if name == "all" else [name]
    return [(n, SUITES[n]()) for n in names]
