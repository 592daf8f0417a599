"""Benchmark summary figure.

Renders the per-size aggregate rows that the bench command also writes
as CSV: one panel for approximation ratios against the waypoint count,
one for mean runtime. Uses the Agg backend so it works headless and
writes straight to a file.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def bench_figure(rows: list[dict], out_path) -> None:
    """rows: one dict per waypoint count, keyed like the CSV columns."""
    ns = [r["n"] for r in rows]
    fig, (ax_ratio, ax_time) = plt.subplots(1, 2, figsize=(10.5, 4.2))

    ax_ratio.plot(ns, [r["max_ratio"] for r in rows], "o-", label="max ratio (proxy ref)")
    ax_ratio.plot(ns, [r["avg_ratio"] for r in rows], "s-", label="avg ratio (proxy ref)")
    ax_ratio.plot(
        ns, [r["max_ratio_guaranteed"] for r in rows], "o--", alpha=0.6,
        label="max ratio (euclidean ref)",
    )
    ax_ratio.plot(
        ns, [r["avg_ratio_guaranteed"] for r in rows], "s--", alpha=0.6,
        label="avg ratio (euclidean ref)",
    )
    ax_ratio.axhline(
        float(rows[0]["theoretical_bound"]), color="k", linewidth=0.8, linestyle=":",
        label="1 + pi/3 + eps",
    )
    ax_ratio.set_xlabel("waypoints")
    ax_ratio.set_ylabel("tour length / reference")
    ax_ratio.set_title("approximation ratios")
    ax_ratio.legend(fontsize=8)
    ax_ratio.grid(True, alpha=0.3)

    ax_time.plot(ns, [r["avg_runtime_ms"] for r in rows], "d-", color="#7f3fbf")
    ax_time.set_xlabel("waypoints")
    ax_time.set_ylabel("mean solve time (ms)")
    ax_time.set_title("runtime")
    ax_time.grid(True, alpha=0.3)

    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
