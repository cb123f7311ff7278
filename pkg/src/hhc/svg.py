"""SVG plots of a curve's cell-centre polyline.

Entry is marked with a circle and exit with an arrowhead. The drawing uses
the unit viewBox with y pointing up, so it reads like the usual plots of
these curves. Output is byte-identical for identical input.
"""
from __future__ import annotations

from .geom import CellSequence


def exact_decimal(num: int, exp: int) -> str:
    """Finite decimal expansion of ``num / 2**exp``."""
    if exp == 0:
        return str(num)
    sign = "-" if num < 0 else ""
    digits = str(abs(num) * 5**exp).rjust(exp + 1, "0")
    whole, frac = digits[:-exp], digits[-exp:].rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def _fmt(v: float) -> str:
    return f"{v:.6f}".rstrip("0").rstrip(".")


def render_svg(seq: CellSequence) -> str:
    k = seq.order
    den = k + 1  # centres are (2i+1) / 2^(k+1)
    coords = [(exact_decimal(2 * c.ix + 1, den), exact_decimal(2 * c.iy + 1, den)) for c in seq]
    stroke = exact_decimal(1, k + 1)
    cell = 1.0 / (1 << k)

    (x0, y0), (x1, y1) = (float(a) for a in coords[0]), (float(a) for a in coords[-1])
    px, py = (float(a) for a in coords[-2]) if len(coords) > 1 else (x1 - cell, y1)
    dx, dy = (x1 - px) / cell, (y1 - py) / cell
    s = 0.3 * cell
    tip = (x1 + dx * s, y1 + dy * s)
    left = (x1 - dx * s - dy * s, y1 - dy * s + dx * s)
    right = (x1 - dx * s + dy * s, y1 - dy * s - dx * s)
    arrow = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in (tip, left, right))

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1 1" width="512" height="512">',
        f"<title>{seq.curve.label} order {k}</title>",
        '<rect x="0" y="0" width="1" height="1" fill="white" stroke="none"/>',
        '<g transform="matrix(1 0 0 -1 0 1)">',
        f'<polyline fill="none" stroke="black" stroke-width="{stroke}" stroke-linejoin="round" '
        f'points="{" ".join(f"{x},{y}" for x, y in coords)}"/>',
        f'<circle cx="{_fmt(x0)}" cy="{_fmt(y0)}" r="{_fmt(0.3 * cell)}" fill="none" stroke="red" '
        f'stroke-width="{stroke}"/>',
        f'<polygon points="{arrow}" fill="red"/>',
        "</g>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
