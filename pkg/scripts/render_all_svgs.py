"""Write one SVG per curve and order into an output directory."""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from hhc.curves import ALL_CURVES
from hhc.geom import enumerate_curve
from hhc.svg import render_svg


@dataclass
class RenderConfig:
    out_dir: str = "figures"
    orders: tuple[int, ...] = (2, 3, 4)


def main(cfg: RenderConfig) -> None:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for c in ALL_CURVES:
        for k in cfg.orders:
            path = out / f"{c.label.lower()}_k{k}.svg"
            path.write_text(render_svg(enumerate_curve(c, k)))
    print(f"wrote {len(ALL_CURVES) * len(cfg.orders)} files to {out}/")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="figures")
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 3, 4])
    a = ap.parse_args()
    main(RenderConfig(a.out_dir, tuple(a.orders)))
