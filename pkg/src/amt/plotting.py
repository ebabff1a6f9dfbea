"""Optional figures for the command-line reports (requires matplotlib)."""

from __future__ import annotations

import math
from pathlib import Path

from .rhythm import Rhythm, coarsest_refinement, is_regular
from .scales import Scale, generated_module


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def plot_scale(s: Scale, path: str | Path) -> Path:
    """Degrees of both modules on the pitch-class circle."""
    plt = _pyplot()
    gm = generated_module(s)
    fig, ax = plt.subplots(figsize=(5, 5))
    ring = [2 * math.pi * k / 100 for k in range(101)]
    ax.plot([math.sin(t) for t in ring], [math.cos(t) for t in ring], color="0.8", lw=1)
    for radius, degrees, colour, label in (
        (1.0, gm.ascent_degrees, "tab:blue", "ascent"),
        (0.85, gm.descent_degrees, "tab:orange", "descent"),
    ):
        angles = [2 * math.pi * float(n.residue) / 12 for n in degrees]
        xs = [radius * math.sin(a) for a in angles]
        ys = [radius * math.cos(a) for a in angles]
        ax.plot(xs + xs[:1], ys + ys[:1], "o-", color=colour, label=label)
        for n, x, y in zip(degrees, xs, ys):
            ax.annotate(str(n), (x, y), textcoords="offset points", xytext=(6, 6), fontsize=8)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.legend(loc="lower right", fontsize=8)
    ax.set_title(str(s), fontsize=9)
    path = Path(path)
    fig.savefig(path, dpi=100, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_rhythm(r: Rhythm, path: str | Path) -> Path:
    """Onsets on a time line, with the beat grid when the rhythm is regular."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 1.8))
    if is_regular(r):
        for b in coarsest_refinement(r).boundaries:
            ax.axvline(float(b), color="0.85", lw=1)
    for e in r.events:
        t = float(e.onset)
        ax.plot([t], [0], "o", color="0.6" if e.silent else "tab:blue")
        ax.annotate("rest" if e.silent else str(e.payload), (t, 0), textcoords="offset points",
                    xytext=(0, 8), ha="center", fontsize=8)
    ax.set_xlim(-0.05 * float(r.span), 1.05 * float(r.span))
    ax.set_yticks([])
    ax.set_xlabel("time")
    path = Path(path)
    fig.savefig(path, dpi=100, bbox_inches="tight")
    plt.close(fig)
    return path
