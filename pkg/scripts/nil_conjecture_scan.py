#!/usr/bin/env python3
"""Scan nilpotency indices of v_n + ... + v_m against the bound m - n + 2.

The bound is conjectured optimal for exactly these elements; the scan
reports where it is attained.
"""

from __future__ import annotations

import argparse

from fiblie.nil import conjecture_scan


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min", type=int, default=1)
    parser.add_argument("--max", type=int, default=7)
    parser.add_argument("--cap", type=int, default=64)
    args = parser.parse_args()

    rows = conjecture_scan((args.min, args.max), args.max, cap=args.cap)
    tight = sum(r.tight for r in rows)
    print("n   m   index  bound  tight  peak-monomials")
    for r in rows:
        print(
            f"{r.n:2d} {r.m:3d}  {r.index:5d}  {r.bound:5d}  {str(r.tight):5s}  "
            f"{r.peak_monomials:8d}"
        )
    print(f"{tight}/{len(rows)} cells attain the bound")


if __name__ == "__main__":
    main()
