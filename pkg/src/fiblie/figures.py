"""CSV and SVG emitters for the four lattice/strip figures.

CSV is the ground-truth artifact; the SVG is a direct rendering of the
same rows and carries no extra data.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

from . import series
from .basis import classify_fig1, enumerate_W, enumerate_W_upto
from .core import format_ring_monomial
from .grading import gr, weight

PHI = (1 + 5**0.5) / 2


@dataclass
class FigureFiles:
    csv_path: Path
    svg_path: Path


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _svg_scatter(
    path: Path,
    points: list[tuple[float, float, float, str]],
    lines: list[tuple[float, float, float, float, str]] = (),
    size: int = 720,
) -> None:
    """points: (x, y, radius, colour); lines: (x1, y1, x2, y2, colour)."""
    xs = [p[0] for p in points] or [0.0]
    ys = [p[1] for p in points] or [0.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = 0.05 * max(x1 - x0, y1 - y0, 1.0)
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    scale = size / max(x1 - x0, y1 - y0)

    def sx(x: float) -> float:
        return (x - x0) * scale

    def sy(y: float) -> float:
        return size - (y - y0) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for lx1, ly1, lx2, ly2, colour in lines:
        parts.append(
            f'<line x1="{sx(lx1):.2f}" y1="{sy(ly1):.2f}" x2="{sx(lx2):.2f}" '
            f'y2="{sy(ly2):.2f}" stroke="{colour}" stroke-width="1"/>'
        )
    for x, y, r, colour in points:
        parts.append(
            f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="{max(r, 1.2):.2f}" '
            f'fill="{colour}" fill-opacity="0.75"/>'
        )
    parts.append("</svg>")
    path.write_text("\n".join(parts))


def _mix(green: int, blue: int) -> str:
    frac = green / (green + blue) if green + blue else 0.0
    r = int(40 + 30 * (1 - frac))
    g = int(90 + 110 * frac)
    b = int(200 - 140 * frac)
    return f"rgb({r},{g},{b})"


def figure1(max_n: int, outdir: Path) -> FigureFiles:
    """Lattice points of W_{<=N} with counts and colour mix."""
    cells: dict[tuple[int, int], list[int]] = {}
    pivots: set[tuple[int, int]] = set()
    for level in enumerate_W_upto(max_n):
        for m in level:
            key = tuple(gr(m))
            cell = cells.setdefault(key, [0, 0])
            if m.tail == 0:
                pivots.add(key)
            if m.pivot >= 4:
                cell[0 if classify_fig1(m) == "green" else 1] += 1
            else:
                cell[0] += 1
    rows = []
    for (a, b), (green, blue) in sorted(cells.items()):
        wt = a * PHI + b * PHI**2
        swt = -a / PHI + b / PHI**2
        rows.append([a, b, green + blue, green, blue, int((a, b) in pivots), wt, swt])
    csv_path = outdir / "fig1.csv"
    _write_csv(csv_path, ["a", "b", "count", "green", "blue", "pivot", "wt", "swt"], rows)
    pts = []
    for a, b, count, green, blue, is_pivot, _, _ in rows:
        colour = "red" if is_pivot else _mix(green, blue)
        pts.append((float(a), float(b), 2.0 * math.sqrt(count), colour))
    amax = max(r[0] for r in rows)
    strip_lines = [
        (0.0, -(PHI**3), float(amax), PHI * amax - PHI**3, "red"),
        (0.0, PHI**2, float(amax), PHI * amax + PHI**2, "red"),
    ]
    svg_path = outdir / "fig1.svg"
    _svg_scatter(svg_path, pts, strip_lines)
    return FigureFiles(csv_path, svg_path)


def figure2(n: int, outdir: Path) -> FigureFiles:
    """W_N in its weight-coordinate rectangle."""
    rows = []
    for m in enumerate_W(n):
        a, b = gr(m)
        wv = weight(m)
        rows.append(
            [format_ring_monomial(m.tail), m.pivot, a, b, float(wv.wt), float(wv.swt)]
        )
    csv_path = outdir / "fig2.csv"
    _write_csv(csv_path, ["tail", "pivot", "a", "b", "xi", "eta"], rows)
    pts = [(r[4], r[5], 1.6, "rgb(40,90,200)") for r in rows]
    lo, hi = PHI ** (n - 1), PHI**n
    border = [
        (lo, -PHI, hi, -PHI, "red"),
        (lo, 1.0, hi, 1.0, "red"),
        (lo, -PHI, lo, 1.0, "red"),
        (hi, -PHI, hi, 1.0, "red"),
    ]
    svg_path = outdir / "fig2.svg"
    _svg_scatter(svg_path, pts, border)
    return FigureFiles(csv_path, svg_path)


def figure3(max_n: int, outdir: Path) -> FigureFiles:
    """All levels normalised into one rectangle (xi rescaled per level)."""
    rows = []
    for level in enumerate_W_upto(max_n):
        n = level.n
        lo, hi = PHI ** (n - 1), PHI**n
        for m in level:
            wv = weight(m)
            u = (float(wv.wt) - lo) / (hi - lo)
            rows.append([n, format_ring_monomial(m.tail), m.pivot, u, float(wv.swt)])
    csv_path = outdir / "fig3.csv"
    _write_csv(csv_path, ["length", "tail", "pivot", "u", "eta"], rows)
    pts = [(r[3], r[4], 1.4, "rgb(40,90,200)") for r in rows]
    border = [
        (0.0, -PHI, 1.0, -PHI, "red"),
        (0.0, 1.0, 1.0, 1.0, "red"),
    ]
    svg_path = outdir / "fig3.svg"
    _svg_scatter(svg_path, pts, border)
    return FigureFiles(csv_path, svg_path)


def figure4(degree: int, outdir: Path) -> FigureFiles:
    """Euler-characteristic coefficients with sign colouring."""
    euler = series.euler_product(degree)
    rows = []
    for (a, b), c in euler.items_sorted():
        rows.append([a, b, c, 1 if c > 0 else -1])
    csv_path = outdir / "fig4.csv"
    _write_csv(csv_path, ["a", "b", "coefficient", "sign"], rows)
    pts = [
        (float(a), float(b), 1.5 * math.sqrt(abs(c)), "green" if c > 0 else "blue")
        for a, b, c, _ in rows
    ]
    amax = max((r[0] for r in rows), default=1)
    strip_lines = [
        (0.0, -(PHI**3), float(amax), PHI * amax - PHI**3, "red"),
        (0.0, PHI**2, float(amax), PHI * amax + PHI**2, "red"),
    ]
    svg_path = outdir / "fig4.svg"
    _svg_scatter(svg_path, pts, strip_lines)
    return FigureFiles(csv_path, svg_path)
