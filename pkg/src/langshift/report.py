"""Pipeline orchestration: config file to Table-shaped report.

Stages run in a fixed order (ingest, corpus, textprep, represent,
affect, stats) and every failure carries a stage label. All requested
outputs are written at the end; if any write fails, the files already
written for that run are removed.

Numbers are printed with 4 decimal places in the Markdown report; the
JSON report carries the same values at full precision.
"""

from __future__ import annotations

import csv
import json
import math
from contextlib import contextmanager
from dataclasses import dataclass, field, fields
from itertools import chain
from pathlib import Path

from . import affect as affect_mod
from . import represent
from . import stats as stats_mod
from .corpus import build_triplet
from .errors import ConfigError, DataError, LangshiftError
from .ingest import DatasetSummary, EventRecord, VideoRef, parse_dump, read_events, summarize
from .textprep import load_stoplist, preprocess, tokenize

REPORT_FORMATS = ("markdown", "json", "csv")

JSD_PAIRS = ("before_vs_source", "after_vs_source", "before_vs_after")
_PAIR_LABELS = {
    "before_vs_source": "JSD(before ‖ source)",
    "after_vs_source": "JSD(after ‖ source)",
    "before_vs_after": "JSD(before ‖ after)",
}


@dataclass
class RunConfig:
    source: Path
    target: Path
    events: Path
    output: Path
    window_hours: float = 24.0
    formats: tuple[str, ...] = ("markdown", "json", "csv")
    figures: bool = True
    stopwords: Path | None = None
    categories: Path | None = None
    affect_lexicon: Path | None = None
    negators: Path | None = None
    categories_match_stems: bool = False

    def validate(self) -> None:
        if self.window_hours <= 0:
            raise ConfigError(f"window_hours must be positive, got {self.window_hours}")
        bad = [f for f in self.formats if f not in REPORT_FORMATS]
        if bad:
            raise ConfigError(f"unknown report formats {bad}; choose from {REPORT_FORMATS}")
        if not self.formats:
            raise ConfigError("at least one report format is required")
        for name in ("source", "target", "events", "stopwords", "categories",
                     "affect_lexicon", "negators"):
            value = getattr(self, name)
            if value is not None and not Path(value).is_file():
                raise ConfigError(f"{name} file not found: {value}")


_BOOL_KEYS = {"figures", "categories_match_stems"}
_PATH_KEYS = {"source", "target", "events", "output", "stopwords", "categories",
              "affect_lexicon", "negators"}


def parse_config_text(text: str, base_dir: Path) -> dict:
    """Parse the flat `key = value` config format (# starts a comment)."""
    known = {f.name for f in fields(RunConfig)}
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"config line {lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in known:
            raise ConfigError(f"config line {lineno}: unknown key {key!r}")
        if key in _BOOL_KEYS:
            if value.lower() not in ("true", "false"):
                raise ConfigError(f"config line {lineno}: {key} must be true or false")
            values[key] = value.lower() == "true"
        elif key == "window_hours":
            try:
                values[key] = float(value)
            except ValueError:
                raise ConfigError(f"config line {lineno}: bad number {value!r}") from None
        elif key == "formats":
            values[key] = tuple(p.strip() for p in value.split(",") if p.strip())
        elif key in _PATH_KEYS:
            path = Path(value)
            values[key] = path if path.is_absolute() else base_dir / path
        else:
            values[key] = value
    return values


def load_config(path: str | Path, overrides: dict | None = None) -> RunConfig:
    """Read a config file, apply overrides, and validate."""
    path = Path(path)
    try:
        text = path.read_text("utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    values = parse_config_text(text, path.parent)
    values.update(overrides or {})
    missing = [k for k in ("source", "target", "events", "output") if k not in values]
    if missing:
        raise ConfigError(f"config is missing required keys: {', '.join(missing)}")
    config = RunConfig(**values)
    config.validate()
    return config


@dataclass
class AnalysisReport:
    window_hours: float
    dataset: DatasetSummary
    affect_before: affect_mod.AffectSummary
    affect_after: affect_mod.AffectSummary
    mw_sentiment: stats_mod.TestResult
    mw_subjectivity: stats_mod.TestResult
    jsd_tfidf: dict[str, float]
    jsd_categories: dict[str, float]
    t_tfidf: stats_mod.TestResult
    t_categories: stats_mod.TestResult
    verdict_tfidf: stats_mod.Shift
    verdict_categories: stats_mod.Shift
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "window_hours": self.window_hours,
            "dataset": {
                "n_posts": self.dataset.n_posts,
                "n_videos": self.dataset.n_videos,
                "n_comments": {
                    "source": self.dataset.n_comments_per_corpus[0],
                    "before": self.dataset.n_comments_per_corpus[1],
                    "after": self.dataset.n_comments_per_corpus[2],
                },
                "pct_linked_within_window": self.dataset.pct_linked_within_window,
            },
            "affect": {
                "before": _affect_dict(self.affect_before),
                "after": _affect_dict(self.affect_after),
            },
            "tests": {
                "mann_whitney": {
                    "sentiment": _test_dict(self.mw_sentiment),
                    "subjectivity": _test_dict(self.mw_subjectivity),
                },
                "paired_t": {
                    "tfidf": _test_dict(self.t_tfidf),
                    "categories": _test_dict(self.t_categories),
                },
            },
            "divergence": {
                "tfidf": {pair: self.jsd_tfidf[pair] for pair in JSD_PAIRS},
                "categories": {pair: self.jsd_categories[pair] for pair in JSD_PAIRS},
            },
            "verdicts": {
                "tfidf": self.verdict_tfidf.value,
                "categories": self.verdict_categories.value,
            },
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _affect_dict(summary: affect_mod.AffectSummary) -> dict:
    return {
        "sentiment": {"mean": summary.mean_polarity, "std": summary.std_polarity},
        "subjectivity": {"mean": summary.mean_subjectivity, "std": summary.std_subjectivity},
    }


def _test_dict(result: stats_mod.TestResult) -> dict:
    return {
        "statistic": result.statistic if math.isfinite(result.statistic) else None,
        "p_value": result.p_value,
        "method": result.method,
        "degenerate": result.degenerate,
    }


def render_markdown(report: AnalysisReport) -> str:
    """Markdown report: affect mean±std block plus one three-row JSD block
    per representation."""
    dataset = report.dataset
    pct = dataset.pct_linked_within_window
    before_sent, before_subj = report.affect_before.formatted()
    after_sent, after_subj = report.affect_after.formatted()
    lines = [
        "# Language shift report",
        "",
        f"- event window: {report.window_hours:.4f} hours",
        "- divergence: Jensen-Shannon, base-2 logarithms (range [0, 1])",
        "",
        "## Dataset",
        "",
        "| quantity | value |",
        "| --- | --- |",
        f"| posts | {dataset.n_posts} |",
        f"| videos | {dataset.n_videos} |",
        f"| source comments | {dataset.n_comments_per_corpus[0]} |",
        f"| before comments | {dataset.n_comments_per_corpus[1]} |",
        f"| after comments | {dataset.n_comments_per_corpus[2]} |",
        f"| linked within window | {'n/a' if pct is None else f'{pct:.4f}'} |",
        "",
        "## Affect",
        "",
        "| corpus | sentiment | subjectivity |",
        "| --- | --- | --- |",
        f"| before | {before_sent} | {before_subj} |",
        f"| after | {after_sent} | {after_subj} |",
        "",
        "Mann-Whitney U, before vs after:",
        "",
        "| metric | statistic | p | method |",
        "| --- | --- | --- | --- |",
        _test_row("sentiment", report.mw_sentiment),
        _test_row("subjectivity", report.mw_subjectivity),
        "",
        "## Word distributions (TF-IDF)",
        "",
        *_divergence_block(report.jsd_tfidf, report.t_tfidf, report.verdict_tfidf),
        "",
        "## Category distributions",
        "",
        *_divergence_block(report.jsd_categories, report.t_categories, report.verdict_categories),
    ]
    if report.warnings:
        lines += ["", "## Warnings", ""]
        lines += [f"- {w}" for w in report.warnings]
    return "\n".join(lines) + "\n"


def _test_row(label: str, result: stats_mod.TestResult) -> str:
    stat = f"{result.statistic:.4f}" if math.isfinite(result.statistic) else "n/a"
    return f"| {label} | {stat} | {result.p_value:.4f} | {result.method} |"


def _divergence_block(jsd_values, t_result, verdict) -> list[str]:
    stat = f"{t_result.statistic:.4f}" if math.isfinite(t_result.statistic) else "n/a"
    return [
        "| pair | JSD |",
        "| --- | --- |",
        *(f"| {_PAIR_LABELS[pair]} | {jsd_values[pair]:.4f} |" for pair in JSD_PAIRS),
        "",
        f"Paired t, before vs after: t = {stat}, p = {t_result.p_value:.4f}",
        "",
        f"Verdict: {verdict.value}",
    ]


def emit_plot_data(report: AnalysisReport, directory: str | Path) -> list[Path]:
    """Write divergences.csv and affect.csv for external plotting.

    Values are written with repr so re-parsing reproduces the report's
    numbers exactly.
    """
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
        divergences = directory / "divergences.csv"
        with divergences.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["representation", "pair", "jsd"])
            for name, values in (("tfidf", report.jsd_tfidf), ("categories", report.jsd_categories)):
                for pair in JSD_PAIRS:
                    writer.writerow([name, pair, repr(values[pair])])
        affect_path = directory / "affect.csv"
        with affect_path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["corpus", "metric", "mean", "std"])
            for corpus, summary in (("before", report.affect_before), ("after", report.affect_after)):
                writer.writerow([corpus, "sentiment", repr(summary.mean_polarity), repr(summary.std_polarity)])
                writer.writerow([corpus, "subjectivity", repr(summary.mean_subjectivity), repr(summary.std_subjectivity)])
    except OSError as exc:
        raise DataError(f"cannot write plot data under {directory}: {exc}") from exc
    return [divergences, affect_path]


@contextmanager
def _stage(name: str):
    try:
        yield
    except LangshiftError as exc:
        if str(exc).startswith("["):
            raise
        raise type(exc)(f"[{name}] {exc}") from exc


def _dataset_summary(records: list[EventRecord], window_hours: float) -> DatasetSummary:
    n_videos = len({r.video_id for r in records})
    if n_videos != len(records):
        raise DataError("events file repeats a video id; videos must be deduplicated")
    with_post = {r.post_id for r in records if r.post_id is not None}
    n_posts = len(with_post) + sum(1 for r in records if r.post_id is None)
    uploads = {r.video_id: r.upload_utc for r in records if r.upload_utc is not None}
    if not uploads:
        return DatasetSummary(n_posts=n_posts, n_videos=n_videos)
    refs = [
        VideoRef(r.video_id, r.post_id or f"(post of {r.video_id})", r.event_utc)
        for r in records
    ]
    summary = summarize(refs, uploads, window_hours)
    summary.n_posts = n_posts
    return summary


def run_pipeline(config: RunConfig) -> AnalysisReport:
    """Execute ingest, corpus, textprep, represent, affect and stats, write
    the requested outputs, and return the report."""
    config.validate()

    with _stage("ingest"):
        source_comments, source_skipped = parse_dump(config.source, "source_comments")
        target_comments, target_skipped = parse_dump(config.target, "target_comments")
        event_records = read_events(config.events)
        dataset = _dataset_summary(event_records, config.window_hours)

    with _stage("corpus"):
        events = {r.video_id: r.event_utc for r in event_records}
        triplet = build_triplet(source_comments, target_comments, events, config.window_hours)
        dataset.n_comments_per_corpus = triplet.counts()
        for name, corpus in (("source", triplet.source), ("before", triplet.before),
                             ("after", triplet.after)):
            if not corpus:
                raise DataError(f"{name} corpus is empty; nothing to compare")

    with _stage("textprep"):
        stops = load_stoplist(config.stopwords)
        corpora = (triplet.source, triplet.before, triplet.after)
        stemmed = [[preprocess(c.text, stops) for c in corpus] for corpus in corpora]
        raw = [[tokenize(c.text) for c in corpus] for corpus in corpora]

    with _stage("represent"):
        lexicon = represent.load_category_lexicon(config.categories)
        category_streams = raw
        if config.categories_match_stems:
            lexicon = lexicon.stemmed()
            category_streams = stemmed
        vocab = represent.build_vocabulary(stemmed)
        df, n_docs = represent.document_frequencies(chain.from_iterable(stemmed), vocab)
        tfidf_dists = [
            represent.corpus_tfidf_distribution(streams, vocab, df, n_docs)
            for streams in stemmed
        ]
        category_dists = [
            represent.corpus_category_distribution(streams, lexicon)
            for streams in category_streams
        ]

    with _stage("affect"):
        affect_lexicon = affect_mod.load_affect_lexicon(config.affect_lexicon, config.negators)
        scores_before = [affect_mod.score_comment(t, affect_lexicon) for t in raw[1]]
        scores_after = [affect_mod.score_comment(t, affect_lexicon) for t in raw[2]]
        affect_before = affect_mod.summarize_corpus(scores_before)
        affect_after = affect_mod.summarize_corpus(scores_after)

    with _stage("stats"):
        mw_sentiment = stats_mod.mann_whitney_u(
            [s.polarity for s in scores_before], [s.polarity for s in scores_after]
        )
        mw_subjectivity = stats_mod.mann_whitney_u(
            [s.subjectivity for s in scores_before], [s.subjectivity for s in scores_after]
        )
        jsd_tfidf = _jsd_cells(tfidf_dists)
        jsd_categories = _jsd_cells(category_dists)
        t_tfidf = stats_mod.paired_t(tfidf_dists[1].mean, tfidf_dists[2].mean)
        t_categories = stats_mod.paired_t(category_dists[1].mean, category_dists[2].mean)
        verdict_tfidf = stats_mod.ordering_check(
            jsd_tfidf["before_vs_source"], jsd_tfidf["after_vs_source"]
        )
        verdict_categories = stats_mod.ordering_check(
            jsd_categories["before_vs_source"], jsd_categories["after_vs_source"]
        )

    warnings = []
    if source_skipped or target_skipped:
        warnings.append(
            f"skipped malformed lines: {source_skipped} source, {target_skipped} target"
        )
    for name, dists in (("tfidf", tfidf_dists), ("categories", category_dists)):
        for corpus, dist in zip(("source", "before", "after"), dists):
            if dist.degenerate:
                warnings.append(f"{name} distribution for {corpus} fell back to uniform")

    report = AnalysisReport(
        window_hours=config.window_hours,
        dataset=dataset,
        affect_before=affect_before,
        affect_after=affect_after,
        mw_sentiment=mw_sentiment,
        mw_subjectivity=mw_subjectivity,
        jsd_tfidf=jsd_tfidf,
        jsd_categories=jsd_categories,
        t_tfidf=t_tfidf,
        t_categories=t_categories,
        verdict_tfidf=verdict_tfidf,
        verdict_categories=verdict_categories,
        warnings=warnings,
    )
    with _stage("report"):
        write_outputs(report, config)
    return report


def _jsd_cells(dists: list[represent.CorpusDistribution]) -> dict[str, float]:
    source, before, after = dists
    return {
        "before_vs_source": stats_mod.jsd(before.mass, source.mass),
        "after_vs_source": stats_mod.jsd(after.mass, source.mass),
        "before_vs_after": stats_mod.jsd(before.mass, after.mass),
    }


def write_outputs(report: AnalysisReport, config: RunConfig) -> list[Path]:
    """Write requested formats (and figures) into the output directory.

    On failure every file written by this call is removed before the
    error propagates.
    """
    outdir = Path(config.output)
    written: list[Path] = []
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        if "markdown" in config.formats:
            path = outdir / "report.md"
            path.write_text(render_markdown(report), encoding="utf-8")
            written.append(path)
        if "json" in config.formats:
            path = outdir / "report.json"
            path.write_text(report.to_json(), encoding="utf-8")
            written.append(path)
        if "csv" in config.formats:
            written.extend(emit_plot_data(report, outdir))
        if config.figures:
            from .figures import render_figures

            written.extend(render_figures(report, outdir))
    except Exception as exc:
        for path in written:
            path.unlink(missing_ok=True)
        if isinstance(exc, OSError):
            raise DataError(f"cannot write outputs under {outdir}: {exc}") from exc
        raise
    return written
