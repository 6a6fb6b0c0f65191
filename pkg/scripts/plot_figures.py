#!/usr/bin/env python3
"""Render the CSVs produced by reproduce_figures.py as PNGs (downstream step).

Expects the files written by scripts/reproduce_figures.py and renders one
image per dataset into the same directory. Rendering is intentionally kept
out of the engine; this script is the optional last mile.
"""

import argparse
import csv
import math
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

QUBIT_MARKERS = {
    "superconducting": "^",
    "semiconducting": "*",
    "neutral_atom": "s",
    "trapped_ion": "o",
}


def plot_sweep(path: Path) -> None:
    xs, ys, fom = [], [], []
    with path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            xs.append(float(row["x_hz"]))
            ys.append(float(row["y_hz"]))
            fom.append(float(row["fom"]))
    x = sorted(set(xs))
    y = sorted(set(ys))
    z = np.full((len(y), len(x)), np.nan)
    xi = {v: i for i, v in enumerate(x)}
    yi = {v: i for i, v in enumerate(y)}
    for a, b, f in zip(xs, ys, fom):
        z[yi[b], xi[a]] = math.log10(abs(f)) if f > 0 else np.nan
    fig, ax = plt.subplots(figsize=(6, 4.5))
    mesh = ax.pcolormesh(x, y, z, shading="nearest")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("g (Hz)")
    ax.set_ylabel(f"{path.stem.split('_')[1]} axis (Hz)")
    fig.colorbar(mesh, label="log10 figure of merit")
    fig.tight_layout()
    fig.savefig(path.with_suffix(".png"), dpi=200)
    plt.close(fig)


def plot_contours(path: Path) -> None:
    curves = defaultdict(list)
    with path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            curves[(float(row["level"]), int(row["polyline_index"]))].append(
                (float(row["x_hz"]), float(row["y_hz"]))
            )
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    seen = set()
    for (level, _), pts in sorted(curves.items()):
        label = f"level {level:g}" if level not in seen else None
        seen.add(level)
        ax.plot([p[0] for p in pts], [p[1] for p in pts], label=label)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("g (Hz)")
    ax.set_ylabel("kappa (Hz)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path.with_suffix(".png"), dpi=200)
    plt.close(fig)


def plot_bench(path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6, 4.5))
    with path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            marker = QUBIT_MARKERS.get(row["qubit_type"], "x")
            ax.scatter(float(row["g_hz"]), float(row["kappa_hz"]), marker=marker, s=60)
            ax.annotate(row["name"], (float(row["g_hz"]), float(row["kappa_hz"])),
                        fontsize=7, xytext=(4, 4), textcoords="offset points")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("g (Hz)")
    ax.set_ylabel("kappa (Hz)")
    fig.tight_layout()
    fig.savefig(path.with_suffix(".png"), dpi=200)
    plt.close(fig)


def plot_sens(path: Path) -> None:
    series = defaultdict(list)
    thresholds = {}
    with path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            idx = row["series_index"]
            series[idx].append((float(row["g_hz"]), float(row["fom"])))
            thresholds[idx] = float(row["strong_threshold_g_hz"])
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for idx, pts in sorted(series.items()):
        kept = [(g, f) for g, f in pts if f > 0]
        line, = ax.plot([p[0] for p in kept], [p[1] for p in kept], label=f"pair {idx}")
        ax.axvline(thresholds[idx], color=line.get_color(), linestyle="--", alpha=0.5)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("g (Hz)")
    ax.set_ylabel("figure of merit (1/s)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path.with_suffix(".png"), dpi=200)
    plt.close(fig)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--datadir", default="figure_data")
    opts = parser.parse_args()
    root = Path(opts.datadir)
    renderers = {
        "sweep_gk.csv": plot_sweep,
        "sweep_ggamma.csv": plot_sweep,
        "contour_efficiency.csv": plot_contours,
        "contour_infidelity.csv": plot_contours,
        "bench.csv": plot_bench,
        "sens.csv": plot_sens,
    }
    for name, render in renderers.items():
        path = root / name
        if path.exists():
            render(path)
            print(f"rendered {path.with_suffix('.png')}")
        else:
            print(f"skipping {path} (not found)")


if __name__ == "__main__":
    main()
