"""Scatter panels of minimal Mahler measures against the discriminant.

Input is the schema=1 figure-data CSV produced by the quartic-mahler CLI;
output is one scatter panel (raw or normalized by disc^(1/4) or disc^(1/6))
with the theoretical envelope curves overlaid, written as both PNG and SVG.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__version__ = "0.1.0"

SCHEMA_PREFIX = "# quartic-mahler"
SCHEMA_TAG = "schema=1"
REQUIRED_COLUMNS = ("disc", "m_min")

PANELS = {
    # panel -> (normalization exponent e, y label); plotted y = M * disc^(-e)
    "raw": (0.0, "M"),
    "norm14": (0.25, "M * disc^(-1/4)"),
    "norm16": (1.0 / 6.0, "M * disc^(-1/6)"),
}

LOWER_CONSTANT = 2.0 ** (-4.0 / 3.0)   # lower envelope: 2^(-4/3) * disc^(1/6)
LOWER_EXPONENT = 1.0 / 6.0
UPPER_EXPONENT = 0.5                   # upper envelope: disc^(1/2)


class SchemaError(ValueError):
    """The input file is not a schema=1 figure-data CSV."""


@dataclass(frozen=True)
class FigureJob:
    csv_path: Path
    out_base: Path
    panel: str = "raw"
    log_x: bool = True

    def __post_init__(self) -> None:
        if self.panel not in PANELS:
            raise ValueError(f"unknown panel {self.panel!r}; choose from {sorted(PANELS)}")


@dataclass(frozen=True)
class RenderResult:
    points: np.ndarray          # (n, 2) array of plotted (x, y)
    png_path: Path
    svg_path: Path


def load_figure_data(csv_path: Path) -> np.ndarray:
    """(disc, M) rows from a schema=1 CSV; raises SchemaError on mismatch."""
    lines = Path(csv_path).read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith(SCHEMA_PREFIX) or SCHEMA_TAG not in lines[0]:
        raise SchemaError(f"{csv_path} does not carry the {SCHEMA_TAG} header comment")
    reader = csv.DictReader(lines[1:])
    if reader.fieldnames is None or any(c not in reader.fieldnames for c in REQUIRED_COLUMNS):
        raise SchemaError(f"{csv_path} lacks the required columns {REQUIRED_COLUMNS}")
    rows = [(float(r["disc"]), float(r["m_min"])) for r in reader]
    if not rows:
        raise SchemaError(f"{csv_path} contains no data rows")
    return np.array(rows, dtype=np.float64)


def envelope_curves(panel: str, discs: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(grid, lower, upper) envelope samples for the panel, spanning the data."""
    e, _ = PANELS[panel]
    grid = np.geomspace(discs.min() * 0.9, discs.max() * 1.1, 400)
    lower = LOWER_CONSTANT * grid ** (LOWER_EXPONENT - e)
    upper = grid ** (UPPER_EXPONENT - e)
    return grid, lower, upper


def panel_points(panel: str, data: np.ndarray) -> np.ndarray:
    e, _ = PANELS[panel]
    x = data[:, 0]
    y = data[:, 1] * x ** (-e)
    return np.column_stack([x, y])


def render(job: FigureJob) -> RenderResult:
    """One scatter panel with envelope overlays, written as PNG and SVG."""
    data = load_figure_data(job.csv_path)
    pts = panel_points(job.panel, data)
    grid, lower, upper = envelope_curves(job.panel, data[:, 0])
    e, ylabel = PANELS[job.panel]

    fig, ax = plt.subplots(figsize=(7.0, 4.6))
    ax.scatter(pts[:, 0], pts[:, 1], s=12, color="#1f4e79", zorder=3,
               label="M(O_K)" if e == 0 else ylabel)
    ax.plot(grid, upper, color="#a33", lw=1.2, label="disc^(1/2) envelope")
    if job.panel == "norm16":
        ax.axhline(LOWER_CONSTANT, color="#3a3", lw=1.2, label="4^(-2/3) reference")
    else:
        ax.plot(grid, lower, color="#3a3", lw=1.2, label="2^(-4/3) disc^(1/6) envelope")
    if job.log_x:
        ax.set_xscale("log")
    ax.set_xlabel("discriminant")
    ax.set_ylabel(ylabel)
    ax.set_yscale("log" if job.panel == "raw" else "linear")
    ax.legend(loc="best", fontsize=8)
    ax.grid(alpha=0.25)
    fig.tight_layout()

    png = job.out_base.with_suffix(".png")
    svg = job.out_base.with_suffix(".svg")
    png.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(png, dpi=150)
    fig.savefig(svg)
    plt.close(fig)
    return RenderResult(points=pts, png_path=png, svg_path=svg)
