"""Squared dilation ``sup |f(s) - f(t)|^2 / |s - t|`` on order-k midpoint grids.

Parameters sit at cell midpoints ``t_i = (i + 1/2) / 4^k``, so for cells
``i < j`` the ratio is ``(dx^2 + dy^2) / (j - i)`` in lattice units, an
exact rational. Comparisons are done on integers; the float appears only
in the reported estimate.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .curves import ALL_CURVES, Curve, CurveLike, curve_id
from .dyadic import Dyadic
from .geom import enumerate_curve

CONVENTION = "squared: max |f(t_i) - f(t_j)|^2 / |t_i - t_j|, t_i = (i + 1/2) / 4^k"
EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class Sampled:
    n: int
    seed: int

    def __str__(self) -> str:
        return f"sampled:{self.n}"


Mode = Union[str, Sampled]


def worker_count() -> int:
    """Worker cap from ``HHC_THREADS`` (positive integer), else the CPU count."""
    raw = os.environ.get("HHC_THREADS")
    if raw:
        n = int(raw)
        if n < 1:
            raise ValueError("HHC_THREADS must be a positive integer")
        return n
    return os.cpu_count() or 1


@dataclass(frozen=True)
class DilationReport:
    curve: Curve
    order: int
    num: int  # lattice squared distance of the maximising pair
    gap: int  # index gap j - i of the maximising pair
    argmax: tuple[int, int]
    mode: Mode

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.num, self.gap) if self.gap else Fraction(0)

    @property
    def estimate(self) -> float:
        return self.num / self.gap if self.gap else 0.0

    @property
    def squared_distance(self) -> Dyadic:
        return Dyadic(self.num, 2 * self.order)

    @property
    def parameter_gap(self) -> Dyadic:
        return Dyadic(self.gap, 2 * self.order)

    def to_dict(self) -> dict:
        if isinstance(self.mode, Sampled):
            mode = {"kind": "sampled", "n": self.mode.n, "seed": self.mode.seed}
        else:
            mode = {"kind": "exhaustive"}
        return {
            "curve": self.curve.label,
            "nu": int(self.curve),
            "order": self.order,
            "convention": CONVENTION,
            "mode": mode,
            "estimate": format_estimate(self.estimate),
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "argmax": list(self.argmax),
            "squared_distance": str(self.squared_distance),
            "parameter_gap": str(self.parameter_gap),
        }


def format_estimate(x: float) -> str:
    """Decimal string with 12 significant digits."""
    return format(x, "#.12g")


def _better(a: tuple[int, int, int, int], b: tuple[int, int, int, int]) -> bool:
    # (num, gap, i, j): larger num/gap wins; ties go to the smaller (i, j)
    lhs, rhs = a[0] * b[1], b[0] * a[1]
    if lhs != rhs:
        return lhs > rhs
    return (a[2], a[3]) < (b[2], b[3])


def _scan_offsets(x: np.ndarray, y: np.ndarray, offsets: range) -> tuple[int, int, int, int]:
    best = (0, 1, 0, 0)
    for d in offsets:
        dist = (x[d:] - x[:-d]) ** 2 + (y[d:] - y[:-d]) ** 2
        i = int(np.argmax(dist))
        cand = (int(dist[i]), d, i, i + d)
        if _better(cand, best):
            best = cand
    return best


def _lattice_arrays(nu: Curve, k: int) -> tuple[np.ndarray, np.ndarray]:
    pts = np.array(enumerate_curve(nu, k).lattice(), dtype=np.int64)
    return pts[:, 0].copy(), pts[:, 1].copy()


def _exhaustive(x: np.ndarray, y: np.ndarray, workers: int) -> tuple[int, int, int, int]:
    n = len(x)
    if n < 2:
        return (0, 1, 0, 0)
    blocks = max(1, min(workers, (n - 1) // 256))
    edges = [1 + (n - 1) * b // blocks for b in range(blocks + 1)]
    ranges = [range(edges[b], edges[b + 1]) for b in range(blocks)]
    if blocks == 1:
        parts = [_scan_offsets(x, y, ranges[0])]
    else:
        with ThreadPoolExecutor(max_workers=blocks) as ex:
            parts = list(ex.map(lambda r: _scan_offsets(x, y, r), ranges))
    best = parts[0]
    for p in parts[1:]:
        if _better(p, best):
            best = p
    return best


def _sampled(x: np.ndarray, y: np.ndarray, mode: Sampled) -> tuple[int, int, int, int]:
    n = len(x)
    rng = np.random.default_rng(mode.seed)
    a = rng.integers(0, n, size=mode.n)
    b = rng.integers(0, n, size=mode.n)
    keep = a != b
    i, j = np.minimum(a, b)[keep], np.maximum(a, b)[keep]
    if len(i) == 0:
        return (0, 1, 0, 0)
    num = (x[j] - x[i]) ** 2 + (y[j] - y[i]) ** 2
    gap = j - i
    r = num / gap
    top = np.flatnonzero(r >= r.max() * (1 - 1e-12))
    best = (0, 1, 0, 0)
    for t in top:
        cand = (int(num[t]), int(gap[t]), int(i[t]), int(j[t]))
        if _better(cand, best):
            best = cand
    return best


def dilation_estimate(nu: CurveLike, k: int, mode: Mode = EXHAUSTIVE, workers: int | None = None) -> DilationReport:
    c = curve_id(nu)
    if k < 1:
        raise ValueError("order must be >= 1")
    x, y = _lattice_arrays(c, k)
    if isinstance(mode, Sampled):
        if mode.n < 1:
            raise ValueError("sample count must be positive")
        best = _sampled(x, y, mode)
    elif mode == EXHAUSTIVE:
        best = _exhaustive(x, y, workers or worker_count())
    else:
        raise ValueError(f"unknown mode {mode!r}")
    num, gap, i, j = best
    return DilationReport(c, k, num, gap, (i, j), mode)


@dataclass(frozen=True)
class SurveyReport:
    order: int
    reports: tuple[DilationReport, ...]

    @property
    def spread(self) -> Fraction:
        """``(max - min) / max`` of the estimates; informational only."""
        ratios = [r.ratio for r in self.reports]
        hi = max(ratios)
        return (hi - min(ratios)) / hi if hi else Fraction(0)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "convention": CONVENTION,
            "reports": [r.to_dict() for r in self.reports],
            "spread": format_estimate(float(self.spread)),
        }


def dilation_survey(k: int, mode: Mode = EXHAUSTIVE, workers: int | None = None) -> SurveyReport:
    return SurveyReport(k, tuple(dilation_estimate(c, k, mode, workers) for c in ALL_CURVES))


def parse_mode(text: str, seed: int = 0) -> Mode:
    """``"exhaustive"`` or ``"sampled:N"``."""
    if text == EXHAUSTIVE:
        return EXHAUSTIVE
    if text.startswith("sampled:"):
        return Sampled(int(text.split(":", 1)[1]), seed)
    raise ValueError(f"unknown mode {text!r}")
