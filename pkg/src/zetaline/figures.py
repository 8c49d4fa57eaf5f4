"""Figure rendering for the report path (optional, file output only)."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence


def _axes():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    fig, ax = plt.subplots(figsize=(9, 4.5), dpi=140)
    return fig, ax


def _save(fig, path: str | Path) -> None:
    fig.tight_layout()
    fig.savefig(path)
    import matplotlib.pyplot as plt
    plt.close(fig)


def render_z_trace(ts: Sequence[float], zs: Sequence[float],
                   path: str | Path) -> None:
    fig, ax = _axes()
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.plot(ts, zs, lw=0.9)
    ax.set_xlabel("t")
    ax.set_ylabel("Z(t)")
    ax.set_title("Hardy Z along the critical line")
    _save(fig, path)


def render_staircase(ts: Sequence[float], ss: Sequence[float],
                     path: str | Path) -> None:
    fig, ax = _axes()
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.step(ts, ss, where="post", lw=0.9)
    ax.set_xlabel("T")
    ax.set_ylabel("S(T)")
    ax.set_title("Argument fluctuation S(T)")
    _save(fig, path)


def render_residuals(rows: Sequence[tuple[float, float, float]],
                     path: str | Path) -> None:
    """rows: (alpha, T, residual_asymptotic), grouped by alpha."""
    fig, ax = _axes()
    by_alpha: dict[float, list[tuple[float, float]]] = {}
    for alpha, T, resid in rows:
        by_alpha.setdefault(alpha, []).append((T, resid))
    for alpha, pts in sorted(by_alpha.items()):
        pts.sort()
        ax.plot([p[0] for p in pts], [p[1] for p in pts], "o-",
                label=f"alpha={alpha:g}")
    ax.set_xlabel("T")
    ax.set_ylabel("|arg-integral/(1-2a) - N(T)|")
    ax.set_yscale("log")
    ax.set_title("Counting-formula residual vs height")
    ax.legend()
    _save(fig, path)
