"""Figure rendering for the report paths.

Optional companions to the CSV/JSON tables: each function takes the rows a
driver produced and writes one PNG/PDF/SVG (whatever the path's suffix says)
next to the delimited output.  Kept out of the experiment drivers so the
tables stay dependency-light and deterministic.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .asymptotics import AsymptoticReport  # noqa: E402
from .experiments import ConvergenceRow, DensityScanRow  # noqa: E402


def save_convergence_figure(rows: Sequence[ConvergenceRow], path: str | Path) -> None:
    """Pair density along the grid, with the limiting density marked."""
    xs = [row.x for row in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax1.semilogx(xs, [row.ratio for row in rows], "o-", label="P / N^2")
    ax1.axhline(rows[0].target, color="gray", ls="--", lw=1,
                label=f"limit {rows[0].target:.6f}")
    ax1.set_xlabel("x")
    ax1.set_ylabel("density")
    ax1.legend()
    ax2.loglog(xs, [row.rel_err_N for row in rows], "s-", label="rel err N")
    ax2.loglog(xs, [row.rel_err_P for row in rows], "^-", label="rel err P")
    ax2.set_xlabel("x")
    ax2.set_ylabel("relative error")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_legendre_figure(x_grid: Sequence[int],
                         reports: Sequence[AsymptoticReport],
                         path: str | Path) -> None:
    """Exact count against its main term, plus the relative error decay."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax1.semilogx(x_grid, [r.exact for r in reports], "o-", label="exact")
    ax1.semilogx(x_grid, [r.main_term for r in reports], "--", label="main term")
    ax1.set_xlabel("x")
    ax1.set_ylabel("count")
    ax1.legend()
    ax2.loglog(x_grid, [r.relative_error for r in reports], "o-")
    ax2.set_xlabel("x")
    ax2.set_ylabel("relative error")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_density_scan_figure(rows: Sequence[DensityScanRow], path: str | Path) -> None:
    """Empirical free-kernel density along the grid."""
    xs = [row.x for row in rows]
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    ax.semilogx(xs, [row.empirical_density for row in rows], "o-")
    ax.set_xlabel("x")
    ax.set_ylabel("coprime share of same-kernel pairs")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
