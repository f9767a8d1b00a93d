"""Diagnostic rendering of depth-k tile representative points.

The report path writes a plain PPM (P3) pixmap and can also render a
matplotlib figure and a CSV of the plotted points.  The bounding box comes
from the exact attractor diameter bound; coordinates are floats for display
only, all point values stay exact until the last step.
"""
from __future__ import annotations

import csv
from itertools import product
from math import isqrt
from typing import Optional, Sequence

from .arith import QI
from .dimension import admissible_digits
from .radix import Base, DigitSeq, DigitSet, digit_polynomial


Point = tuple[float, float]


def word_value(word: Sequence[int], base: Base) -> QI:
    """Exact value 0.d_1...d_k of a finite digit word."""
    bk = base.b ** len(word)
    return QI(digit_polynomial(word, base) * bk.conj(), bk.norm())


def attractor_points(base: Base, digits: DigitSet, depth: int) -> list[tuple[tuple[int, ...], QI]]:
    """Representative corners of all depth-k tiles of the attractor."""
    return [
        (word, word_value(word, base))
        for word in product(digits.digits, repeat=depth)
    ]


def intersection_points(
    base: Base, digits: DigitSet, alpha: DigitSeq, depth: int
) -> list[tuple[tuple[int, ...], QI]]:
    """Representative corners of the admissible depth-k tiles of the intersection."""
    slots = [admissible_digits(digits, alpha.at(j)) for j in range(1, depth + 1)]
    return [(word, word_value(word, base)) for word in product(*slots)]


def plot_radius(digits: DigitSet, n: int) -> float:
    """Float radius of a disk certainly containing the attractor."""
    maxd = digits.max_abs() if digits.max_abs() > 0 else 1
    return maxd * (isqrt(n * n + 1) + 2) / (n * n)


def write_ppm(
    path: str,
    layers: list[tuple[list[Point], tuple[int, int, int]]],
    radius: float,
    width: int = 256,
) -> None:
    """Plain PPM (P3) raster of point layers over [-radius, radius]^2."""
    height = width
    grid = [[(255, 255, 255)] * width for _ in range(height)]
    span = 2.0 * radius

    def mark(x: float, y: float, rgb: tuple[int, int, int]) -> None:
        px = int((x + radius) / span * (width - 1) + 0.5)
        py = int((radius - y) / span * (height - 1) + 0.5)
        for dx in (0, 1):
            for dy in (0, 1):
                qx, qy = px + dx, py + dy
                if 0 <= qx < width and 0 <= qy < height:
                    grid[qy][qx] = rgb

    for points, rgb in layers:
        for x, y in points:
            mark(x, y, rgb)
    lines = [f"P3\n{width} {height}\n255\n"]
    for row in grid:
        lines.append(" ".join(f"{r} {g} {b}" for r, g, b in row) + "\n")
    with open(path, "w") as fh:
        fh.writelines(lines)


def write_figure(
    path: str,
    layers: list[tuple[list[Point], str, str]],
    radius: float,
    title: str,
) -> None:
    """Scatter figure of the point layers; (points, colour, label) per layer."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    for points, colour, label in layers:
        if not points:
            continue
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        ax.scatter(xs, ys, s=4, c=colour, label=label, linewidths=0)
    ax.set_xlim(-radius, radius)
    ax.set_ylim(-radius, radius)
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title)
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_points_csv(path: str, rows: list[tuple[str, str, str, float, float]]) -> None:
    """Delimited dump of the plotted points: layer, digit word, exact value, floats."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["layer", "digits", "value", "re", "im"])
        for row in rows:
            writer.writerow(row)


def render_report(
    base: Base,
    digits: DigitSet,
    alpha: Optional[DigitSeq],
    depth: int,
    ppm_path: str,
    figure_path: Optional[str] = None,
    csv_path: Optional[str] = None,
    width: int = 256,
) -> dict:
    """Render the tile points of the attractor (and intersection) to files."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    radius = plot_radius(digits, base.n)
    attractor = attractor_points(base, digits, depth)
    inter = intersection_points(base, digits, alpha, depth) if alpha is not None else []

    def to_float(value: QI) -> Point:
        return (float(value.re), float(value.im))

    att_pts = [to_float(v) for _, v in attractor]
    int_pts = [to_float(v) for _, v in inter]
    layers = [(att_pts, (80, 80, 220))]
    if alpha is not None:
        layers.append((int_pts, (220, 40, 40)))
    write_ppm(ppm_path, layers, radius, width)
    if figure_path:
        fig_layers = [(att_pts, "#5050dc", "attractor")]
        if alpha is not None:
            fig_layers.append((int_pts, "#dc2828", "intersection"))
        write_figure(
            figure_path,
            fig_layers,
            radius,
            f"depth-{depth} tile points, n={base.n}",
        )
    if csv_path:
        rows = [
            ("attractor", " ".join(str(d) for d in w), str(v), float(v.re), float(v.im))
            for w, v in attractor
        ]
        rows += [
            ("intersection", " ".join(str(d) for d in w), str(v), float(v.re), float(v.im))
            for w, v in inter
        ]
        write_points_csv(csv_path, rows)
    return {
        "ppm": ppm_path,
        "figure": figure_path,
        "csv": csv_path,
        "depth": depth,
        "points_attractor": len(att_pts),
        "points_intersection": len(int_pts) if alpha is not None else None,
        "radius": f"{radius:.4f}",
        "width": width,
    }
