"""Static figure rendering for the report path.

Writes divergences.png (grouped bars, one group per corpus pair) and
affect.png (mean bars with standard-deviation whiskers) next to the CSV
outputs. Rendering is headless; no interactive surface.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .errors import DataError

_PAIR_TICKS = {
    "before_vs_source": "before ‖ source",
    "after_vs_source": "after ‖ source",
    "before_vs_after": "before ‖ after",
}


def render_divergences(report, path: str | Path) -> Path:
    pairs = list(_PAIR_TICKS)
    x = np.arange(len(pairs))
    width = 0.38
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.bar(x - width / 2, [report.jsd_tfidf[p] for p in pairs], width, label="TF-IDF")
    ax.bar(x + width / 2, [report.jsd_categories[p] for p in pairs], width, label="categories")
    ax.set_xticks(x)
    ax.set_xticklabels([_PAIR_TICKS[p] for p in pairs])
    ax.set_ylabel("Jensen-Shannon divergence (base 2)")
    ax.set_title("Corpus distribution distances")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return Path(path)


def render_affect(report, path: str | Path) -> Path:
    metrics = ("sentiment", "subjectivity")
    before = (report.affect_before.mean_polarity, report.affect_before.mean_subjectivity)
    after = (report.affect_after.mean_polarity, report.affect_after.mean_subjectivity)
    before_err = (report.affect_before.std_polarity, report.affect_before.std_subjectivity)
    after_err = (report.affect_after.std_polarity, report.affect_after.std_subjectivity)
    x = np.arange(len(metrics))
    width = 0.38
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.bar(x - width / 2, before, width, yerr=before_err, capsize=4, label="before")
    ax.bar(x + width / 2, after, width, yerr=after_err, capsize=4, label="after")
    ax.set_xticks(x)
    ax.set_xticklabels(metrics)
    ax.set_ylabel("mean ± population std")
    ax.set_title("Affect by corpus")
    ax.axhline(0.0, linewidth=0.8, color="black")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return Path(path)


def render_figures(report, directory: str | Path) -> list[Path]:
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
        return [
            render_divergences(report, directory / "divergences.png"),
            render_affect(report, directory / "affect.png"),
        ]
    except OSError as exc:
        raise DataError(f"cannot write figures under {directory}: {exc}") from exc
