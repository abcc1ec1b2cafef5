#!/usr/bin/env python3
"""Render comparison plots from preset CSVs.

Pure CSV -> image transform: solid curves are the host model, dashed the
distorted one, one colour per CSV file, optional horizontal guide line
(the 2/3 classical-fidelity bound on fidelity panels). No physics is
recomputed here; the CSVs come from ``diamondchain preset ...``.

Usage::

    render_figure.py --recipe recipes/fig2.recipe --out fig2.png [--data-dir data/]
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

FIGSIZE = (5.6, 3.8)
DPI = 150


class MissingFile(ValueError):
    """A referenced CSV file does not exist."""


class MissingColumn(ValueError):
    """A referenced column is absent from a CSV header."""


@dataclass(frozen=True)
class FigureRecipe:
    """Inputs and styling of one figure: CSVs, columns, labels, guide line."""

    title: str
    xlabel: str
    ylabel: str
    x: str
    host: str
    impurity: str
    csvs: tuple  # (filename, curve label) pairs
    guide: float | None = None


def load_recipe(path) -> FigureRecipe:
    """Parse a key = value recipe file (repeated ``csv =`` lines allowed)."""
    fields = {}
    csvs = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "csv":
            name, _, label = (part.strip() for part in value.partition(":"))
            csvs.append((name, label or name))
        else:
            fields[key] = value
    required = ("title", "xlabel", "ylabel", "x", "host", "impurity")
    missing = [key for key in required if key not in fields]
    if missing:
        raise ValueError(f"{path}: missing recipe keys {missing}")
    if not csvs:
        raise ValueError(f"{path}: no csv entries")
    guide = float(fields["guide"]) if "guide" in fields else None
    return FigureRecipe(
        title=fields["title"],
        xlabel=fields["xlabel"],
        ylabel=fields["ylabel"],
        x=fields["x"],
        host=fields["host"],
        impurity=fields["impurity"],
        csvs=tuple(csvs),
        guide=guide,
    )


def read_table(path) -> dict:
    """Load one CSV as {column name: float array}."""
    path = Path(path)
    if not path.is_file():
        raise MissingFile(f"no such CSV: {path}")
    lines = path.read_text().strip().splitlines()
    if not lines or not lines[0].strip():
        raise MissingColumn(f"{path}: empty CSV, no header row")
    header = [name.strip() for name in lines[0].split(",")]
    if len(lines) == 1:
        raise MissingColumn(f"{path}: header only, no data rows")
    data = np.loadtxt(lines[1:], delimiter=",", ndmin=2)
    if data.shape[1] != len(header):
        raise MissingColumn(f"{path}: {data.shape[1]} data columns vs {len(header)} header names")
    return {name: data[:, k] for k, name in enumerate(header)}


def build_figure(recipe: FigureRecipe, tables):
    """Assemble the matplotlib figure from loaded tables (no file IO)."""
    fig, ax = plt.subplots(figsize=FIGSIZE, dpi=DPI)
    for k, ((_, label), table) in enumerate(zip(recipe.csvs, tables)):
        for column in (recipe.x, recipe.host, recipe.impurity):
            if column not in table:
                raise MissingColumn(f"column {column!r} not in CSV for curve {label!r}")
        colour = f"C{k}"
        ax.plot(table[recipe.x], table[recipe.host], "-", color=colour,
                label=f"host, {label}")
        ax.plot(table[recipe.x], table[recipe.impurity], "--", color=colour,
                label=f"impurity, {label}")
    if recipe.guide is not None:
        ax.axhline(recipe.guide, color="gray", linestyle=":", linewidth=1.2,
                   label=f"guide {recipe.guide:.4g}")
    ax.set_xlabel(recipe.xlabel)
    ax.set_ylabel(recipe.ylabel)
    ax.set_title(recipe.title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def render(recipe: FigureRecipe, out, data_dir=".") -> None:
    """Load every CSV of the recipe and write the image to ``out``."""
    tables = [read_table(Path(data_dir) / name) for name, _ in recipe.csvs]
    fig = build_figure(recipe, tables)
    fig.savefig(out)
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--recipe", required=True, help="recipe file to render")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--data-dir", default=".", help="directory holding the CSVs")
    args = parser.parse_args(argv)
    try:
        render(load_recipe(args.recipe), args.out, args.data_dir)
    except (MissingFile, MissingColumn, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
