"""Benchmark figure."""

from __future__ import annotations

import statistics

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STAGE_COLUMNS = ("pyramid_ms", "theta_ms", "long-prism_ms", "broken-wheel_ms")


def plot_bench(rows, path: str) -> None:
    """Runtime against n (median and max), and mean time per stage."""
    ns = sorted({r["n"] for r in rows})
    by_n = {n: [r for r in rows if r["n"] == n] for n in ns}
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.6), constrained_layout=True)

    med = [statistics.median(r["total_ms"] for r in by_n[n]) for n in ns]
    top = [max(r["total_ms"] for r in by_n[n]) for n in ns]
    left.plot(ns, med, "o-", label="median")
    left.plot(ns, top, "s--", label="max")
    left.set_xlabel("n")
    left.set_ylabel("pipeline time (ms)")
    if ns and min(med + top) > 0:
        left.set_yscale("log")
    left.legend(frameon=False)

    bottom = [0.0] * len(ns)
    for col in STAGE_COLUMNS:
        vals = [statistics.fmean(r[col] for r in by_n[n]) for n in ns]
        right.bar([str(n) for n in ns], vals, bottom=bottom, label=col[:-3])
        bottom = [b + v for b, v in zip(bottom, vals)]
    right.set_xlabel("n")
    right.set_ylabel("mean time per stage (ms)")
    right.legend(frameon=False, fontsize=8)

    p = rows[0]["p"] if rows else None
    fig.suptitle(f"G(n, p={p}), {len(rows)} graphs")
    fig.savefig(path, dpi=120)
    plt.close(fig)
