"""Figures written next to the CLI's delimited output.

Everything renders with the Agg backend to PNG files; PNG metadata that
would vary between runs (the software stamp) is dropped so reruns with the
same inputs give identical files.
"""

from __future__ import annotations

import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .chartab.core import CharacterTable  # noqa: E402
from .hecke import G2_LEVELS, schur_G2  # noqa: E402

_META = {"Software": None}


def _save(fig, path: str) -> str:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fig.savefig(path, dpi=110, metadata=_META)
    plt.close(fig)
    return path


def _as_float(v) -> float:
    return v.to_float() if hasattr(v, "to_float") else float(v)


def character_table_heatmap(table: CharacterTable, path: str) -> str:
    """Heatmap of chi(g) / chi(1); exact values are annotated for small tables."""
    vals = np.array([[_as_float(v) for v in row] for row in table.values])
    norm = vals / vals[:, :1]
    n = len(table.labels)
    size = max(3.0, min(14.0, 0.35 * n + 2))
    fig, ax = plt.subplots(figsize=(size + 1, size))
    im = ax.imshow(norm, cmap="RdBu_r", vmin=-1, vmax=1)
    ax.set_xticks(range(n), table.class_names, rotation=90, fontsize=7)
    ax.set_yticks(range(n), table.labels, fontsize=7)
    if n <= 12:
        for i in range(n):
            for j in range(n):
                ax.text(j, i, f"{vals[i, j]:.3g}", ha="center", va="center", fontsize=7)
    ax.set_title(f"W({table.type_name}): normalised character values")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    return _save(fig, path)


def prime_powers(limit: int) -> list[int]:
    out = []
    for n in range(2, limit + 1):
        m = n
        p = next(d for d in range(2, n + 1) if n % d == 0)
        while m % p == 0:
            m //= p
        if m == 1:
            out.append(n)
    return out


def g2_schur_plot(path: str, q_max: int = 100, levels: Sequence[int] = G2_LEVELS) -> str:
    """log10 of c_{phi2,1}(q) / c_{phi2,2}(q) at prime powers q for each k."""
    qs = prime_powers(q_max)
    fig, ax = plt.subplots(figsize=(6, 4))
    for k in levels:
        c1, c2 = schur_G2(k, 1).value, schur_G2(k, 2).value
        ratio = [float(c1(qv) / c2(qv)) for qv in qs]
        ax.plot(qs, np.log10(ratio), marker="o", ms=3, label=f"k={k}")
    ax.axhline(0.0, color="grey", lw=0.8)
    ax.set_xscale("log")
    ax.set_xlabel("q (prime powers)")
    ax.set_ylabel("log10 c(phi2,1) / c(phi2,2)")
    ax.set_title("G2 Schur elements at parameters (q, q^(2k-1))")
    ax.legend()
    fig.tight_layout()
    return _save(fig, path)


def pair_count_plot(reports, path: str) -> str:
    """Bar chart of pairs passing the restriction test, coloured by expectation."""
    names = [r.type_name for r in reports]
    counts = [len(r.pairs_passing_1prime) for r in reports]
    colours = ["tab:green" if r.matches_expectation else "tab:red" for r in reports]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.35 * len(names) + 1), 3.5))
    ax.bar(range(len(names)), counts, color=colours)
    ax.set_xticks(range(len(names)), names, rotation=90, fontsize=7)
    ax.set_ylabel("pairs with equal restrictions")
    ax.set_title("green: as expected, red: unexpected")
    fig.tight_layout()
    return _save(fig, path)
