#!/usr/bin/env python3
"""Render the rank-two fan figures and hypersurface overlays to out/."""

import argparse
from pathlib import Path

from tropstab.suites import character_from_params
from tropstab.svgplot import render_fan_svg


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out")
    parser.add_argument("--seed", type=int, default=17)
    parser.add_argument("--samples", type=int, default=4000)
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    jobs = [
        ("fan_sl3.svg", character_from_params("identity", 3), 0, False),
        ("fan_sp4.svg", character_from_params("sp", 2), 0, True),
        ("fan_sl3_walls.svg", character_from_params("identity", 3), 0, True),
        ("hypersurface_sl3.svg", character_from_params("identity", 3),
         args.samples, False),
        ("hypersurface_sp4.svg", character_from_params("sp", 2),
         args.samples, False),
        ("hypersurface_sl3_adjoint_p2.svg",
         character_from_params("schur", 3, (2, 1, 0)), args.samples, False),
    ]
    for name, char, samples, walls in jobs:
        svg = render_fan_svg(char, p=2, samples=samples, seed=args.seed,
                             walls=walls)
        (out / name).write_text(svg, encoding="utf-8")
        print(f"wrote {out / name}")


if __name__ == "__main__":
    main()
