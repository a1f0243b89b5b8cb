"""Matplotlib renderings of the report outputs, written to files.

Import is kept out of the core modules so that headless library use never
pulls in matplotlib; the CLI imports this lazily when a --png flag is
given.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import ListedColormap

from .spectrum import dirichlet_ratio, dirichlet_step, mult_two_bound
from .survey import THEOREM_CHECKS, ScanRecord


def save_kernel_plot(d: int, samples: int, path: str) -> None:
    """Eigenvalue curve f_d(phi) - 1 with the two multiplicity-two bounds."""
    phi = np.linspace(0.0, 2.0 * np.pi, max(samples, 256))
    lam = np.array([dirichlet_ratio(d, p) - 1.0 for p in phi])
    bounds = mult_two_bound(d)
    q = dirichlet_step(d)

    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(phi, lam, lw=1.2, label=rf"$f_{{{d}}}(\varphi)-1$")
    ax.axhline(bounds.sharp, color="tab:red", lw=1.0, ls="--",
               label=rf"sharp bound $1/\sin(2\pi/{2 * d + 1})-1$ = {bounds.sharp:.4f}")
    ax.axhline(bounds.relaxed, color="tab:orange", lw=1.0, ls=":",
               label=rf"relaxed bound $d/\pi-1$ = {bounds.relaxed:.4f}")
    ax.axvline(2 * q, color="gray", lw=0.8, ls=":", label=r"$\varphi = 2q$")
    ax.set_xlabel(r"$\varphi$")
    ax.set_ylabel(rf"$f_{{{d}}}(\varphi)-1$")
    ax.set_title(f"Kernel ratio and multiplicity-two bounds, d = {d}")
    ax.legend(fontsize=8, loc="upper center")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_spectrum_plot(n: int, d: int, values: np.ndarray, path: str) -> None:
    """Eigenvalues lambda_r against the index r."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    r = np.arange(len(values))
    ax.stem(r, values, basefmt=" ")
    ax.set_xlabel("r")
    ax.set_ylabel(r"$\lambda_r$")
    ax.set_title(rf"Spectrum of $C_{{{n}}}^{{({d})}}$")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


_OUTCOME_LEVEL = {"skip": 0, "pass": 1, "fail": 2}


def save_scan_grid(records: list[ScanRecord], path: str, title: str = "scan outcomes") -> None:
    """(n, d) grid colored by the worst theorem-check outcome per cell."""
    if not records:
        raise ValueError("no records to plot")
    ns = sorted({r.n for r in records})
    ds = sorted({r.d for r in records})
    n_index = {n: i for i, n in enumerate(ns)}
    d_index = {d: i for i, d in enumerate(ds)}
    grid = np.full((len(ds), len(ns)), np.nan)
    for rec in records:
        level = max(
            (_OUTCOME_LEVEL[res.outcome] for name, res in rec.checks.items()
             if name in THEOREM_CHECKS),
            default=_OUTCOME_LEVEL[next(iter(rec.checks.values())).outcome] if rec.checks else 0,
        )
        cell = (d_index[rec.d], n_index[rec.n])
        # several scan kinds may report the same cell; keep the worst outcome
        prev = grid[cell]
        grid[cell] = level if np.isnan(prev) else max(prev, level)

    fig, ax = plt.subplots(figsize=(9, 4.5))
    cmap = ListedColormap(["#bbbbbb", "#2a9d47", "#d03030"])
    im = ax.imshow(grid, origin="lower", aspect="auto", cmap=cmap, vmin=0, vmax=2,
                   extent=(ns[0] - 0.5, ns[-1] + 0.5, ds[0] - 0.5, ds[-1] + 0.5))
    ax.set_xlabel("n")
    ax.set_ylabel("d")
    ax.set_title(title)
    cbar = fig.colorbar(im, ticks=[0, 1, 2])
    cbar.ax.set_yticklabels(["skip", "pass", "fail"])
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
