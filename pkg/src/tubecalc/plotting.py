"""Figure rendering for classification grids and hammocks.

Cells are drawn in the usual diagonal mesh layout: M(i,l) at
x = (2i + l - 1) mod 2r (repeated once for wrap-around context) and
y = l.  Grid figures mirror the classification legend: circle for
Schurian, square otherwise; black fill for tau-rigid, gray for rigid
only, white for neither; an x marks a deleted cell.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

FILL = {"black": "#000000", "gray": "#999999", "white": "#ffffff"}


def _cell_x(i: int, l: int, r: int) -> int:
    return (2 * i + l - 1) % (2 * r)


def render_grid(records, rank: int, path: str, title: str | None = None):
    """Classification grid to an image file; one marker per tube cell."""
    max_ql = max(rec.coord.l for rec in records)
    fig, ax = plt.subplots(figsize=(max(4, rank * 1.4), max(3, max_ql * 0.6)))
    for rec in records:
        x = _cell_x(rec.coord.i, rec.coord.l, rank)
        for x_draw in (x, x + 2 * rank):
            if rec.deleted:
                ax.plot(x_draw, rec.coord.l, marker="x", color="black", markersize=9)
                continue
            fill, shape = rec.symbol().split("-")
            ax.plot(
                x_draw,
                rec.coord.l,
                marker="o" if shape == "circle" else "s",
                markerfacecolor=FILL[fill],
                markeredgecolor="black",
                markersize=9,
            )
    for border in (0, 2 * rank, 4 * rank):
        ax.axvline(border - 0.5, linestyle="--", color="gray", linewidth=0.8)
    ax.set_xlim(-1, 4 * rank)
    ax.set_ylim(0.3, max_ql + 0.7)
    ax.set_xlabel("mesh position (two fundamental domains)")
    ax.set_ylabel("quasilength")
    ax.set_yticks(range(1, max_ql + 1))
    ax.set_xticks([])
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_hammock(table, path: str, title: str | None = None):
    """Hammock of a fixed source: nonzero cells shaded and annotated."""
    r, max_ql = table.rank, table.max_ql
    fig, ax = plt.subplots(figsize=(max(4, r * 1.4), max(3, max_ql * 0.55)))
    for coord, value in table.entries.items():
        x = _cell_x(coord.i, coord.l, r)
        for x_draw in (x, x + 2 * r):
            if value:
                ax.plot(
                    x_draw, coord.l, marker="o", markersize=13,
                    markerfacecolor="#c8c8c8", markeredgecolor="black",
                )
            ax.text(
                x_draw, coord.l, str(value), ha="center", va="center", fontsize=7,
                color="black" if value else "#bbbbbb",
            )
    if not table.source.is_zero():
        sx = _cell_x(table.source.i, table.source.l, r)
        for x_draw in (sx, sx + 2 * r):
            ax.plot(x_draw, table.source.l, marker="o", markersize=16,
                    markerfacecolor="none", markeredgecolor="red")
    for border in (0, 2 * r, 4 * r):
        ax.axvline(border - 0.5, linestyle="--", color="gray", linewidth=0.8)
    ax.set_xlim(-1, 4 * r)
    ax.set_ylim(0.3, max_ql + 0.7)
    ax.set_xlabel("mesh position (two fundamental domains)")
    ax.set_ylabel("quasilength")
    ax.set_yticks(range(1, max_ql + 1))
    ax.set_xticks([])
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
