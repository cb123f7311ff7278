import json
from fractions import Fraction
from itertools import combinations

import pytest

from hhc.curves import ALL_CURVES
from hhc.mapping import evaluate
from hhc.metrics import (
    EXHAUSTIVE,
    Sampled,
    dilation_estimate,
    dilation_survey,
    format_estimate,
    parse_mode,
    worker_count,
)
from hhc.quaternary import quaternary_from_index


def brute_force(nu, k):
    """Max of |f(t_i) - f(t_j)|^2 / |t_i - t_j| over all pairs, in exact rationals."""
    pts = []
    for i in range(4**k):
        v = evaluate(nu, k, quaternary_from_index(i, k))
        pts.append((v.x.to_fraction(), v.y.to_fraction()))
    best, arg = Fraction(0), None
    for i, j in combinations(range(len(pts)), 2):
        dx, dy = pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]
        r = (dx * dx + dy * dy) / Fraction(j - i, 4**k)
        if r > best:
            best, arg = r, (i, j)
    return best, arg


@pytest.mark.parametrize("nu", ALL_CURVES)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_exhaustive_matches_brute_force(nu, k):
    expected, arg = brute_force(nu, k)
    rep = dilation_estimate(nu, k)
    assert rep.ratio == expected
    assert rep.argmax == arg


def test_improper_order1_is_the_quadrant_square():
    for nu in range(6, 12):
        assert dilation_estimate(nu, 1).ratio == 1


@pytest.mark.parametrize("k,ratio", [(1, Fraction(1)), (2, Fraction(5, 2)), (3, Fraction(29, 8)),
                                     (4, Fraction(121, 27)), (5, Fraction(225, 43)), (6, Fraction(961, 171))])
def test_hilbert_ladder(k, ratio):
    assert dilation_estimate(0, k).ratio == ratio


def test_hilbert_order6_regression():
    assert dilation_estimate(0, 6).estimate == pytest.approx(5.6199, abs=1e-4)


@pytest.mark.parametrize("nu", ALL_CURVES)
def test_monotone_in_order(nu):
    ratios = [dilation_estimate(nu, k).ratio for k in range(1, 7)]
    assert ratios == sorted(ratios)


def test_workers_do_not_change_answer():
    for nu in (0, 5, 9):
        a = dilation_estimate(nu, 6, workers=1)
        b = dilation_estimate(nu, 6, workers=7)
        assert (a.num, a.gap, a.argmax) == (b.num, b.gap, b.argmax)


def test_sampled_is_a_lower_bound_and_deterministic():
    full = dilation_estimate(3, 5)
    s1 = dilation_estimate(3, 5, Sampled(2000, 11))
    s2 = dilation_estimate(3, 5, Sampled(2000, 11))
    assert s1.ratio <= full.ratio
    assert s1.to_dict() == s2.to_dict()
    i, j = s1.argmax
    assert i < j


def test_sampled_degenerate():
    assert dilation_estimate(0, 1, Sampled(1, 0)).ratio in (0, 1)
    with pytest.raises(ValueError):
        dilation_estimate(0, 2, Sampled(0, 0))


def test_report_json_shape():
    d = dilation_estimate(0, 3).to_dict()
    json.dumps(d)
    assert d["ratio"] == "29/8"
    assert d["estimate"] == format_estimate(29 / 8) == "3.62500000000"
    assert d["mode"] == {"kind": "exhaustive"}
    rep = dilation_estimate(0, 3)
    assert rep.squared_distance.to_fraction() / rep.parameter_gap.to_fraction() == Fraction(29, 8)
    assert set(d) >= {"curve", "nu", "order", "convention", "argmax", "parameter_gap"}


def test_survey():
    s = dilation_survey(4)
    assert [int(r.curve) for r in s.reports] == list(range(12))
    assert 0 <= s.spread < 1
    d = s.to_dict()
    assert len(d["reports"]) == 12
    assert all(r.ratio == 1 for r in dilation_survey(1).reports)


def test_parse_mode():
    assert parse_mode("exhaustive") == EXHAUSTIVE
    assert parse_mode("sampled:50", 3) == Sampled(50, 3)
    with pytest.raises(ValueError):
        parse_mode("random")


def test_worker_count(monkeypatch):
    monkeypatch.setenv("HHC_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("HHC_THREADS", "0")
    with pytest.raises(ValueError):
        worker_count()
    monkeypatch.delenv("HHC_THREADS")
    assert worker_count() >= 1


def test_order_must_be_positive():
    with pytest.raises(ValueError):
        dilation_estimate(0, 0)
