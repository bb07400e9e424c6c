"""Command line interface.

Subcommands:
  analyze  run the full pipeline from a config file
  prepare  derive an events file from a posts dump (plus optional video
           metadata) by extracting, deduplicating and linking video refs
  synth    generate a synthetic input set for demos and testing

Exit codes: 0 success, 2 config error, 3 data error, 4 numeric error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConfigError, DataError, LangshiftError, NumericError
from .ingest import (
    EventRecord,
    apply_metadata,
    dedupe_videos,
    extract_video_refs,
    parse_dump,
    read_video_metadata,
    summarize,
    write_events,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="langshift",
        description="Measure language shift around cross-posted videos.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="run the pipeline from a config file")
    analyze.add_argument("--config", required=True, help="flat key = value config file")
    analyze.add_argument("--window-hours", type=float, help="override the event window")
    analyze.add_argument("--output", help="override the output directory")
    analyze.add_argument(
        "--format",
        help="override report formats (comma separated: markdown,json,csv)",
    )
    analyze.add_argument(
        "--no-figures", action="store_true", help="skip rendering PNG figures"
    )

    prepare = sub.add_parser("prepare", help="derive an events file from a posts dump")
    prepare.add_argument("--posts", required=True, help="posts dump (JSONL)")
    prepare.add_argument(
        "--videos",
        help="video metadata JSONL with video_id and upload_utc; videos absent "
        "from it are treated as having no metadata and dropped",
    )
    prepare.add_argument("--output", required=True, help="events file to write")
    prepare.add_argument("--window-hours", type=float, default=24.0)

    synth = sub.add_parser("synth", help="generate a synthetic input set")
    synth.add_argument("--output", required=True, help="directory for the fixture files")
    synth.add_argument("--source-comments", type=int, default=300)
    synth.add_argument("--before-comments", type=int, default=600)
    synth.add_argument("--after-comments", type=int, default=600)
    synth.add_argument("--videos", type=int, default=40)
    synth.add_argument("--borrow-before", type=float, default=0.05)
    synth.add_argument("--borrow-after", type=float, default=0.30)
    synth.add_argument("--seed", type=int, default=20240101)
    return parser


def _cmd_analyze(args) -> int:
    from .report import load_config, run_pipeline

    overrides: dict = {}
    if args.window_hours is not None:
        overrides["window_hours"] = args.window_hours
    if args.output is not None:
        overrides["output"] = Path(args.output)
    if args.format is not None:
        overrides["formats"] = tuple(p.strip() for p in args.format.split(",") if p.strip())
    if args.no_figures:
        overrides["figures"] = False
    config = load_config(args.config, overrides)
    report = run_pipeline(config)
    print(f"report written to {config.output}")
    print(f"  TF-IDF verdict:   {report.verdict_tfidf.value}")
    print(f"  category verdict: {report.verdict_categories.value}")
    return 0


def _cmd_prepare(args) -> int:
    posts, skipped = parse_dump(args.posts, "posts")
    refs = [ref for post in posts for ref in extract_video_refs(post)]
    uploads: dict[str, float] = {}
    if args.videos:
        uploads = read_video_metadata(args.videos)
        refs = apply_metadata(refs, set(uploads))
    kept = dedupe_videos(refs)
    records = [
        EventRecord(
            video_id=r.video_id,
            event_utc=r.linked_at,
            post_id=r.source_post_id,
            upload_utc=uploads.get(r.video_id),
        )
        for r in kept
    ]
    write_events(records, args.output)
    print(f"{len(posts)} posts ({skipped} skipped), {len(refs)} video refs, "
          f"{len(kept)} videos kept")
    if uploads:
        summary = summarize(kept, uploads, args.window_hours)
        print(f"linked within {args.window_hours:g} h: "
              f"{summary.pct_linked_within_window:.4f}")
    print(f"events written to {args.output}")
    return 0


def _cmd_synth(args) -> int:
    from .synthetic import generate_fixture

    paths = generate_fixture(
        args.output,
        n_source=args.source_comments,
        n_before=args.before_comments,
        n_after=args.after_comments,
        n_videos=args.videos,
        borrow_before=args.borrow_before,
        borrow_after=args.borrow_after,
        seed=args.seed,
    )
    print(f"fixture written to {args.output}")
    print(f"  posts:  {paths.posts.name}")
    print(f"  videos: {paths.videos.name}")
    print(f"  source: {paths.source.name}")
    print(f"  target: {paths.target.name}")
    print(f"  events: {paths.events.name}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"analyze": _cmd_analyze, "prepare": _cmd_prepare, "synth": _cmd_synth}
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 4
    except LangshiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
