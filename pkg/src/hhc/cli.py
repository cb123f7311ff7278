"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from .curves import Curve, curve_id
from .geom import Cell, enumerate_curve, invert_point
from .mapping import UnsupportedCurveError, eval_nested, eval_proper, eval_result, transfer_point
from .metrics import EXHAUSTIVE, Sampled, dilation_estimate, dilation_survey, parse_mode
from .quaternary import parse_parameter, quaternary_from_index
from .svg import exact_decimal, render_svg
from .verify import SUITES, run_suite

MAX_MAP_ORDER = 30
MAX_CURVE_ORDER = 12
MAX_SVG_ORDER = 9
MAX_EXHAUSTIVE_ORDER = 7
CSV_HEADER = ["index", "digits", "ix", "iy", "x", "y"]


class UsageError(Exception):
    pass


def _curve(text: str) -> Curve:
    try:
        return curve_id(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _order(k: int, lo: int, hi: int, what: str) -> int:
    if not lo <= k <= hi:
        raise UsageError(f"{what} order must be in {lo}..{hi}, got {k}")
    return k


def _write(text: str, dest: Optional[str]) -> None:
    if dest in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(dest, "w", newline="") as f:
            f.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {dest}: {e.strerror}") from None


def _dec(v) -> str:
    return exact_decimal(v.numerator, v.exponent)


def cmd_map(args) -> int:
    c = _curve(args.curve)
    k = _order(args.order, 1, MAX_MAP_ORDER, "map")
    try:
        q = parse_parameter(args.t, k)
    except ValueError as e:
        raise UsageError(str(e)) from None
    res = eval_result(c, k, q)
    p = res.point
    consistent = eval_nested(c, k, q) == p
    if args.format == "json":
        rec = {
            "curve": c.label, "nu": int(c), "order": k, "t": str(q),
            "t_transformed": str(res.transformed) if res.transformed is not None else None,
            "x": str(p.x), "y": str(p.y), "x_decimal": _dec(p.x), "y_decimal": _dec(p.y),
        }
        _write(json.dumps(rec, indent=2) + "\n", None)
    else:
        out = [f"curve: {c}", f"order: {k}", f"t: 0.{q}"]
        if res.transformed is not None:
            out.append(f"t': 0.{res.transformed}")
        out += [f"point: ({p.x}, {p.y})", f"x: {p.x} = {_dec(p.x)}", f"y: {p.y} = {_dec(p.y)}"]
        _write("\n".join(out) + "\n", None)
    if not consistent:
        print("internal check failed: nested composition disagrees", file=sys.stderr)
        return 1
    return 0


def _records(c: Curve, k: int):
    for i, cell in enumerate(enumerate_curve(c, k)):
        v = cell.center()
        yield i, str(quaternary_from_index(i, k)), cell.ix, cell.iy, v


def cmd_curve(args) -> int:
    c = _curve(args.curve)
    k = _order(args.order, 1, MAX_CURVE_ORDER, "curve")
    if args.format == "svg":
        raise UsageError("use the svg command for SVG output")
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for i, digits, ix, iy, v in _records(c, k):
            w.writerow([i, digits, ix, iy, str(v.x), str(v.y)])
        text = buf.getvalue()
    else:
        points = [
            {"index": i, "digits": digits, "ix": ix, "iy": iy, "x": str(v.x), "y": str(v.y),
             "x_decimal": _dec(v.x), "y_decimal": _dec(v.y)}
            for i, digits, ix, iy, v in _records(c, k)
        ]
        text = json.dumps({"curve": c.label, "nu": int(c), "order": k, "points": points}, indent=1) + "\n"
    _write(text, args.output)
    return 0


def cmd_svg(args) -> int:
    c = _curve(args.curve)
    k = _order(args.order, 1, MAX_SVG_ORDER, "svg")
    _write(render_svg(enumerate_curve(c, k)), args.output)
    return 0


def cmd_verify(args) -> int:
    failed = 0
    for name, checks in run_suite(args.suite):
        bad = sum(not ch.passed for ch in checks)
        failed += bad
        print(f"== {name}: {len(checks) - bad}/{len(checks)} passed")
        for ch in checks:
            if args.verbose or not ch.passed:
                print("  " + ch.line())
    print("ALL PASS" if not failed else f"{failed} FAILED")
    return 0 if not failed else 1


def cmd_transfer(args) -> int:
    src, dst = _curve(args.from_), _curve(args.to)
    for c in (src, dst):
        if not c.is_proper:
            raise UsageError(f"{c} is improper; the transfer map is only defined between proper curves")
    k = _order(args.order, 1, MAX_MAP_ORDER, "transfer")
    try:
        q = parse_parameter(args.t, k)
    except ValueError as e:
        raise UsageError(str(e)) from None
    w = eval_proper(src, k, q)
    try:
        img = transfer_point(dst, src, q[0], w)
    except UnsupportedCurveError as e:
        raise UsageError(str(e)) from None
    direct = eval_proper(dst, k, q)
    ok = img == direct
    print(f"t: 0.{q}")
    print(f"{src.label}: ({w.x}, {w.y})")
    print(f"transfer -> {dst.label}: ({img.x}, {img.y})")
    print(f"{dst.label} direct: ({direct.x}, {direct.y})")
    print(f"equal: {'yes' if ok else 'NO'}")
    return 0 if ok else 1


def cmd_dilation(args) -> int:
    k = args.order
    try:
        mode = parse_mode(args.mode, args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if mode == EXHAUSTIVE:
        _order(k, 1, MAX_EXHAUSTIVE_ORDER, "exhaustive dilation")
    else:
        _order(k, 1, MAX_CURVE_ORDER, "sampled dilation")
        if not isinstance(mode, Sampled) or mode.n < 1:
            raise UsageError("sample count must be positive")
    if args.all:
        payload = dilation_survey(k, mode).to_dict()
    else:
        if args.curve is None:
            raise UsageError("give --curve or --all")
        payload = dilation_estimate(_curve(args.curve), k, mode).to_dict()
    _write(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def cmd_invert(args) -> int:
    c = _curve(args.curve)
    k = _order(args.order, 1, MAX_MAP_ORDER, "invert")
    n = 1 << k
    if not (0 <= args.ix < n and 0 <= args.iy < n):
        raise UsageError(f"cell must lie in the {n}x{n} grid")
    q = invert_point(c, k, Cell(args.ix, args.iy, k))
    print(f"0.{q}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hhc", description="Homogeneous Hilbert curves in exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("map", help="evaluate one curve point")
    m.add_argument("--curve", required=True, help="index 0-11 or name (hilbert, moore, liu1..liu4, i1..i6)")
    m.add_argument("--order", type=int, required=True)
    m.add_argument("--t", required=True, help="k quaternary digits, or i/4^k")
    m.add_argument("--format", choices=["text", "json"], default="text")
    m.set_defaults(func=cmd_map)

    c = sub.add_parser("curve", help="dump all 4^k points in traversal order")
    c.add_argument("--curve", required=True)
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--format", choices=["csv", "json", "svg"], default="csv")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_curve)

    s = sub.add_parser("svg", help="plot a curve as SVG")
    s.add_argument("--curve", required=True)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_svg)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    v.add_argument("-v", "--verbose", action="store_true", help="print passing checks too")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("transfer", help="carry a point between two proper curves")
    t.add_argument("--from", dest="from_", required=True)
    t.add_argument("--to", required=True)
    t.add_argument("--order", type=int, required=True)
    t.add_argument("--t", required=True)
    t.set_defaults(func=cmd_transfer)

    d = sub.add_parser("dilation", help="squared dilation estimate(s) as JSON")
    g = d.add_mutually_exclusive_group(required=True)
    g.add_argument("--curve")
    g.add_argument("--all", action="store_true")
    d.add_argument("--order", type=int, required=True)
    d.add_argument("--mode", default="exhaustive", help="exhaustive | sampled:N")
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_dilation)

    i = sub.add_parser("invert", help="parameter digits of a lattice cell")
    i.add_argument("--curve", required=True)
    i.add_argument("--order", type=int, required=True)
    i.add_argument("ix", type=int)
    i.add_argument("iy", type=int)
    i.set_defaults(func=cmd_invert)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"hhc {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
