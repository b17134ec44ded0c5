#!/usr/bin/env python3
"""Emit the four figure CSV/SVG pairs into a directory."""

from __future__ import annotations

import argparse
from pathlib import Path

from fiblie import figures


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="figures")
    parser.add_argument("--fig1-max-n", type=int, default=9)
    parser.add_argument("--fig2-n", type=int, default=15)
    parser.add_argument("--fig3-max-n", type=int, default=15)
    parser.add_argument("--fig4-degree", type=int, default=30)
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for files in (
        figures.figure1(args.fig1_max_n, outdir),
        figures.figure2(args.fig2_n, outdir),
        figures.figure3(args.fig3_max_n, outdir),
        figures.figure4(args.fig4_degree, outdir),
    ):
        print(files.csv_path)
        print(files.svg_path)


if __name__ == "__main__":
    main()
