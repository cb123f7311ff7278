"""Compare the two readings of the even-m recursion closed form.

For every proper curve this counts, over all order-k parameters, how often
the closed form agrees with the shifted evaluation when the inner curve is
read as f_nu versus f_0.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from hhc.curves import PROPER_CURVES
from hhc.mapping import recurse_closed_form_m, recurse_shift
from hhc.quaternary import quaternary_from_index


@dataclass
class ReadingsConfig:
    max_k: int = 3
    max_m: int = 4


def main(cfg: ReadingsConfig) -> None:
    print(f"{'curve':<9}{'m':>3}{'reading nu':>14}{'reading 0':>14}")
    for c in PROPER_CURVES:
        for m in range(1, cfg.max_m + 1):
            hits = {"nu": 0, "0": 0}
            total = 0
            for k in range(1, cfg.max_k + 1):
                for i in range(4**k):
                    q = quaternary_from_index(i, k)
                    ref = recurse_shift(c, k, m, q)
                    for s in hits:
                        hits[s] += recurse_closed_form_m(c, k, m, q, s) == ref
                    total += 1
            print(f"{c.label:<9}{m:>3}{hits['nu']:>8}/{total:<5}{hits['0']:>8}/{total:<5}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=3)
    ap.add_argument("--max-m", type=int, default=4)
    main(ReadingsConfig(**vars(ap.parse_args())))
