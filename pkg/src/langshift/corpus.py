"""Three-corpus assembly around cross-post event times.

Target-platform comments are split per video into a "before" corpus
(strictly earlier than the event) and an "after" corpus (inside the
half-open window [event, event + window)); later comments are dropped.
Source-community comments pass through untouched.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import DataError


class Origin(str, Enum):
    SOURCE_COMMUNITY = "source_community"
    TARGET_PLATFORM = "target_platform"


@dataclass
class Comment:
    comment_id: str
    origin: Origin
    video_id: str | None
    created_at: float
    text: str


@dataclass
class CorpusTriplet:
    source: list[Comment]
    before: list[Comment]
    after: list[Comment]
    window_hours: float = 24.0

    def counts(self) -> tuple[int, int, int]:
        return len(self.source), len(self.before), len(self.after)


def split_by_event(
    comments: list[Comment], event_time: float, window_hours: float
) -> tuple[list[Comment], list[Comment]]:
    """Split one video's comments into (before, after) around the event.

    before: created_at < event_time; after: event_time <= created_at <
    event_time + window_hours * 3600. Comments at or past the window end
    are discarded. Input order is preserved within each output.
    """
    if window_hours <= 0:
        raise ValueError("window_hours must be positive")
    end = event_time + window_hours * 3600.0
    before = [c for c in comments if c.created_at < event_time]
    after = [c for c in comments if event_time <= c.created_at < end]
    return before, after


def build_triplet(
    source_comments: list[Comment],
    target_comments: list[Comment],
    events: dict[str, float],
    window_hours: float = 24.0,
) -> CorpusTriplet:
    """Assemble the three corpora from per-video event times.

    Videos are processed in sorted id order so the merged output is
    deterministic regardless of input grouping.
    """
    per_video: dict[str, list[Comment]] = {}
    for comment in target_comments:
        if comment.video_id not in events:
            raise DataError(f"no event time for video {comment.video_id}")
        per_video.setdefault(comment.video_id, []).append(comment)

    before: list[Comment] = []
    after: list[Comment] = []
    for video_id in sorted(per_video):
        b, a = split_by_event(per_video[video_id], events[video_id], window_hours)
        before.extend(b)
        after.extend(a)

    triplet = CorpusTriplet(list(source_comments), before, after, window_hours)
    _check_disjoint(triplet)
    return triplet


def _check_disjoint(triplet: CorpusTriplet) -> None:
    seen: set[str] = set()
    for corpus in (triplet.source, triplet.before, triplet.after):
        for comment in corpus:
            if comment.comment_id in seen:
                raise DataError(f"duplicate comment id across corpora: {comment.comment_id}")
            seen.add(comment.comment_id)


def write_triplet(triplet: CorpusTriplet, directory: str | Path) -> list[Path]:
    """Write the three corpora as ingest-format JSONL files for inspection."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, comments in (
        ("source", triplet.source),
        ("before", triplet.before),
        ("after", triplet.after),
    ):
        path = directory / f"{name}.jsonl"
        with path.open("w", encoding="utf-8") as fh:
            for c in comments:
                record = {"id": c.comment_id, "created_utc": c.created_at, "body": c.text}
                if c.video_id is not None:
                    record["video_id"] = c.video_id
                fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
        written.append(path)
    return written
