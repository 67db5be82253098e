#!/usr/bin/env python3
"""Render the toolkit's figures from their CSV files.

The CSV files are the artifact of record; this script only draws them.

    python scripts/plot_figures.py out/            # all CSVs found in out/
    python scripts/plot_figures.py out/fig2a.csv   # a single file
"""

import csv
import math
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_csv(path):
    """Returns (column names, columns as float lists with None for gaps)."""
    with open(path) as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    header, body = rows[0], rows[1:]
    cols = [[] for _ in header]
    for row in body:
        for i, cell in enumerate(row):
            cols[i].append(float(cell) if cell not in ("", None) else None)
    return header, cols


def masked(xs, ys):
    pairs = [(x, y) for x, y in zip(xs, ys) if y is not None]
    return [p[0] for p in pairs], [p[1] for p in pairs]


def label_of(name):
    return name.split(" (")[0]


def plot_fig1(path, out):
    header, cols = read_csv(path)
    fig, ax = plt.subplots(figsize=(5, 3.6))
    ax.semilogy(cols[0], cols[1], "r--", label="entangled bound (2N qubits)")
    ax.semilogy(cols[0], cols[2], "b-", label="coherence-trapped Ramsey (N probes)")
    ax.set_xlabel("probe number N")
    ax.set_ylabel(r"$\Delta^2\omega\,T$")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(out)


def plot_fig2a(path, out):
    header, cols = read_csv(path)
    fig, ax = plt.subplots(figsize=(5, 3.6))
    for i, name in enumerate(header[1:-2], start=1):
        ax.semilogy(*masked(cols[0], cols[i]), label=label_of(name))
    ax.semilogy(*masked(cols[0], cols[-2]), "k:", label="zero-T analytic")
    ax.semilogy(cols[0], cols[-1], "r--", label="entangled bound")
    ax.set_xlabel(r"$\Gamma \bar t$")
    ax.set_ylabel(r"$\Delta^2\omega\,T$")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(out)


def plot_fig2b(path, out):
    header, cols = read_csv(path)
    fig, ax = plt.subplots(figsize=(5, 3.6))
    for i, name in enumerate(header[1:], start=1):
        ax.semilogy(*masked(cols[0], cols[i]), label=label_of(name))
    ax.set_xlabel(r"$\omega/2\pi$ (Hz)")
    ax.set_ylabel(r"$\Delta^2\omega\,T$")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(out)


def plot_generic(path, out, xlabel):
    header, cols = read_csv(path)
    fig, ax = plt.subplots(figsize=(5, 3.6))
    for i, name in enumerate(header[1:], start=1):
        xs, ys = masked(cols[0], cols[i])
        if any(y is not None and y > 0 for y in ys) and all(
            y is None or y > 0 for y in cols[i]
        ):
            ax.semilogy(xs, ys, label=label_of(name))
        else:
            ax.plot(xs, ys, label=label_of(name))
    ax.set_xlabel(xlabel)
    ax.legend(frameon=False, fontsize=7)
    fig.tight_layout()
    fig.savefig(out)


HANDLERS = {
    "fig1.csv": plot_fig1,
    "fig2a.csv": plot_fig2a,
    "fig2b.csv": plot_fig2b,
}


def render(path):
    path = Path(path)
    out = path.with_suffix(".pdf")
    handler = HANDLERS.get(path.name)
    if handler is not None:
        handler(path, out)
    elif path.name == "bound.csv":
        plot_generic(path, out, "t (s)")
    elif path.name == "evolve.csv":
        plot_generic(path, out, r"$\Gamma t$")
    else:
        return None
    return out


def main(argv):
    if len(argv) < 2:
        print(__doc__)
        return 1
    targets = []
    for arg in argv[1:]:
        p = Path(arg)
        targets.extend(sorted(p.glob("*.csv")) if p.is_dir() else [p])
    for t in targets:
        out = render(t)
        if out is not None:
            print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
