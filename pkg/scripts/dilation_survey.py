"""Exhaustive squared-dilation table for all twelve curves, k = 1..K.

    python scripts/dilation_survey.py --max-order 7 [--json out.json]
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass

from hhc.curves import ALL_CURVES
from hhc.metrics import dilation_estimate


@dataclass
class SurveyConfig:
    max_order: int = 6
    json_path: str | None = None


def main(cfg: SurveyConfig) -> None:
    table = {}
    t0 = time.perf_counter()
    print("curve      " + "".join(f"{'k=' + str(k):>14}" for k in range(1, cfg.max_order + 1)))
    for c in ALL_CURVES:
        reps = [dilation_estimate(c, k) for k in range(1, cfg.max_order + 1)]
        table[c.label] = [str(r.ratio) for r in reps]
        cells = "".join(f"{str(r.ratio) + ' ':>14}" for r in reps)
        print(f"{c.label:<11}{cells}")
    print(f"\n{time.perf_counter() - t0:.2f}s")
    if cfg.json_path:
        with open(cfg.json_path, "w") as f:
            json.dump(table, f, indent=2)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=6)
    ap.add_argument("--json", dest="json_path")
    main(SurveyConfig(**vars(ap.parse_args())))
