"""Archived dump ingestion.

Dumps are UTF-8, one JSON object per line. Post records look like
``{"id", "created_utc", "body", "urls": [...]}``; comment records carry
``"post_id"`` (source platform) or ``"video_id"`` (target platform)
instead of ``"urls"``. Unknown keys are ignored. Timestamps may be epoch
seconds or ISO-8601 strings; everything is normalized to UTC epoch
seconds at parse time.

Malformed lines are skipped and counted, never silently dropped.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .corpus import Comment, Origin
from .errors import DataError

logger = logging.getLogger(__name__)

VIDEO_ID_ALPHABET = frozenset(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_"
)
VIDEO_ID_LENGTH = 11

SCHEMAS = ("posts", "source_comments", "target_comments")


@dataclass
class RawPost:
    post_id: str
    created_at: float
    body_text: str
    urls: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class VideoRef:
    video_id: str
    source_post_id: str
    linked_at: float
    has_metadata: bool = True


@dataclass
class DatasetSummary:
    n_posts: int
    n_videos: int
    n_comments_per_corpus: tuple[int, int, int] = (0, 0, 0)
    pct_linked_within_window: float | None = None


def _to_epoch(value) -> float:
    if isinstance(value, bool):
        raise ValueError("boolean timestamp")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        dt = datetime.fromisoformat(value.replace("Z", "+00:00"))
        if dt.tzinfo is None:
            dt = dt.replace(tzinfo=timezone.utc)
        return dt.timestamp()
    raise ValueError(f"unsupported timestamp {value!r}")


def _parse_post(obj: dict) -> RawPost:
    post_id = str(obj["id"])
    created = _to_epoch(obj["created_utc"])
    if not post_id or created <= 0:
        raise ValueError("bad id or timestamp")
    urls = obj.get("urls", [])
    if not isinstance(urls, list):
        raise ValueError("urls is not a list")
    return RawPost(post_id, created, str(obj.get("body", "")), [str(u) for u in urls])


def _parse_comment(obj: dict, origin: Origin) -> Comment:
    comment_id = str(obj["id"])
    created = _to_epoch(obj["created_utc"])
    if not comment_id or created <= 0:
        raise ValueError("bad id or timestamp")
    video_id = None
    if origin is Origin.TARGET_PLATFORM:
        video_id = str(obj["video_id"])
    elif "post_id" not in obj:
        # required by the source format even though the Comment drops it
        raise KeyError("post_id")
    return Comment(comment_id, origin, video_id, created, str(obj.get("body", "")))


def parse_dump(path: str | Path, schema: str) -> tuple[list, int]:
    """Parse a line-delimited dump, returning (records, skipped_lines).

    `schema` is one of "posts", "source_comments" or "target_comments".
    An unreadable file is fatal; a malformed line is skipped with a
    warning and counted in the second element of the result.
    """
    if schema not in SCHEMAS:
        raise ValueError(f"unknown schema {schema!r}, expected one of {SCHEMAS}")
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise DataError(f"cannot read dump {path}: {exc}") from exc

    records = []
    skipped = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            if not isinstance(obj, dict):
                raise ValueError("record is not an object")
            if schema == "posts":
                records.append(_parse_post(obj))
            elif schema == "source_comments":
                records.append(_parse_comment(obj, Origin.SOURCE_COMMUNITY))
            else:
                records.append(_parse_comment(obj, Origin.TARGET_PLATFORM))
        except (ValueError, KeyError, TypeError) as exc:
            skipped += 1
            logger.warning("%s:%d: skipping malformed line (%s)", path, lineno, exc)
    return records, skipped


@dataclass
class EventRecord:
    """One cross-posted video: when it was linked, and optionally by which
    post and when it was uploaded."""

    video_id: str
    event_utc: float
    post_id: str | None = None
    upload_utc: float | None = None


def read_events(path: str | Path) -> list[EventRecord]:
    """Read an events file: JSONL with video_id and event_utc per line,
    optional post_id and upload_utc. Malformed lines are fatal, since every
    event anchors a split."""
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise DataError(f"cannot read events file {path}: {exc}") from exc
    records = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            upload = obj.get("upload_utc")
            record = EventRecord(
                video_id=str(obj["video_id"]),
                event_utc=_to_epoch(obj["event_utc"]),
                post_id=str(obj["post_id"]) if "post_id" in obj else None,
                upload_utc=None if upload is None else _to_epoch(upload),
            )
        except (ValueError, KeyError, TypeError) as exc:
            raise DataError(f"{path}:{lineno}: bad event record ({exc})") from exc
        records.append(record)
    return records


def read_video_metadata(path: str | Path) -> dict[str, float]:
    """Read video metadata JSONL ({"video_id", "upload_utc"} per line) into
    an upload-time map. Malformed lines are fatal."""
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise DataError(f"cannot read video metadata {path}: {exc}") from exc
    uploads: dict[str, float] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            uploads[str(obj["video_id"])] = _to_epoch(obj["upload_utc"])
        except (ValueError, KeyError, TypeError) as exc:
            raise DataError(f"{path}:{lineno}: bad video metadata ({exc})") from exc
    return uploads


def write_events(records: list[EventRecord], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for r in records:
            obj: dict = {"video_id": r.video_id, "event_utc": r.event_utc}
            if r.post_id is not None:
                obj["post_id"] = r.post_id
            if r.upload_utc is not None:
                obj["upload_utc"] = r.upload_utc
            fh.write(json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n")


def _video_id_from_url(url: str) -> str | None:
    """Canonical 11-character video id, or None for non-video URLs.

    Recognizes the watch form (v query parameter), the short-host form
    (id as path) and the embed/v/shorts path forms. Extra query
    parameters are ignored.
    """
    try:
        parsed = urlparse(url)
    except ValueError:
        return None
    host = (parsed.hostname or "").lower()
    candidate = None
    if host in ("youtu.be", "www.youtu.be"):
        candidate = parsed.path.strip("/").split("/")[0] if parsed.path else None
    elif host in (
        "youtube.com",
        "www.youtube.com",
        "m.youtube.com",
        "music.youtube.com",
        "youtube-nocookie.com",
        "www.youtube-nocookie.com",
    ):
        parts = [p for p in parsed.path.split("/") if p]
        if parts and parts[0] == "watch":
            candidate = parse_qs(parsed.query).get("v", [None])[0]
        elif len(parts) >= 2 and parts[0] in ("embed", "v", "shorts", "live"):
            candidate = parts[1]
    if (
        candidate
        and len(candidate) == VIDEO_ID_LENGTH
        and set(candidate) <= VIDEO_ID_ALPHABET
    ):
        return candidate
    return None


def extract_video_refs(post: RawPost) -> list[VideoRef]:
    """One VideoRef per recognized video URL in the post, in URL order."""
    refs = []
    for url in post.urls:
        video_id = _video_id_from_url(url)
        if video_id is not None:
            refs.append(VideoRef(video_id, post.post_id, post.created_at))
    return refs


def dedupe_videos(refs: list[VideoRef]) -> list[VideoRef]:
    """Drop videos referenced more than once (all occurrences) and videos
    without metadata. Output keeps first-appearance order."""
    counts: dict[str, int] = {}
    for ref in refs:
        counts[ref.video_id] = counts.get(ref.video_id, 0) + 1
    return [r for r in refs if counts[r.video_id] == 1 and r.has_metadata]


def apply_metadata(refs: list[VideoRef], known_ids: set[str]) -> list[VideoRef]:
    """Mark has_metadata from a set of video ids with known metadata."""
    return [replace(r, has_metadata=r.video_id in known_ids) for r in refs]


def summarize(
    refs: list[VideoRef],
    upload_times: dict[str, float],
    window_hours: float,
) -> DatasetSummary:
    """Dataset counts plus the fraction of videos linked within the window.

    A ref counts toward the fraction when 0 <= linked_at - upload_time <
    window_hours * 3600. Every ref must have an upload time.
    """
    window = window_hours * 3600.0
    within = 0
    for ref in refs:
        if ref.video_id not in upload_times:
            raise DataError(f"no upload time for video {ref.video_id}")
        delta = ref.linked_at - upload_times[ref.video_id]
        if 0 <= delta < window:
            within += 1
    return DatasetSummary(
        n_posts=len({r.source_post_id for r in refs}),
        n_videos=len({r.video_id for r in refs}),
        pct_linked_within_window=within / len(refs) if refs else 0.0,
    )
