"""Matplotlib figures written next to the delimited census output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")  # file output only, never a display

import matplotlib.pyplot as plt

from .census import GapReport, Histogram


def save_histogram_figure(
    hist: Histogram,
    path,
    *,
    n: int,
    k: int,
    gap: GapReport | None = None,
    title: str | None = None,
):
    """Bar chart of a reset-length (or exponent) distribution.

    Counts span many orders of magnitude, so the y axis is logarithmic; the
    gap-analysis range, when given, is shaded.
    """
    lengths = sorted(hist.counts)
    values = [hist.counts[x] for x in lengths]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.bar(lengths, values, width=0.8, color="#4878a8", edgecolor="none")
    if any(v > 0 for v in values):
        ax.set_yscale("log")
    if gap is not None and gap.hi >= gap.lo:
        ax.axvspan(gap.lo - 0.5, gap.hi + 0.5, color="#d8b365", alpha=0.25,
                   label=f"gap range {gap.lo}..{gap.hi}")
        ax.legend(loc="upper right", frameon=False)
    ax.set_xlabel("shortest reset word length")
    ax.set_ylabel("automata")
    ax.set_title(title or f"reset lengths, n={n}, k={k} "
                          f"(total {hist.total:,}, non-synchronizing {hist.nonsync:,})")
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_conjecture_figure(value_counts: dict[int, int], bound: int, path, *, n: int, k: int):
    """Distribution of minimal coloring reset lengths against the bound."""
    values = sorted(value_counts)
    counts = [value_counts[v] for v in values]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(values, counts, width=0.8, color="#6aa84f", edgecolor="none")
    ax.axvline(bound, color="#a84848", linestyle="--", label=f"bound {bound}")
    ax.set_xlabel("minimal reset length over colorings")
    ax.set_ylabel("digraph classes")
    ax.set_title(f"best synchronizing colorings, n={n}, k={k}")
    ax.legend(frameon=False)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
