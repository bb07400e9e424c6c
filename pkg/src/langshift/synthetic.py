"""Deterministic synthetic fixtures for demos and end-to-end tests.

Generates a full input set (posts, video metadata, source comments,
target comments, events) where the after-window comments borrow a
configurable fraction of their vocabulary from the source community.
Word pools are drawn from disjoint groups of the shipped category
lexicon so both the word-level and the category-level representations
carry the planted shift.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .represent import load_category_lexicon

SOURCE_CATEGORIES = [
    "government", "conspiracy", "law", "crime", "corruption", "deception",
    "propaganda", "surveillance", "censorship", "military", "war", "power",
    "oppression", "secrecy", "espionage", "protest",
]
TARGET_CATEGORIES = [
    "music", "film", "fun", "celebration", "party", "art", "dance", "games",
    "sports", "beach", "cooking", "food", "traveling", "fashion",
    "photography", "pet",
]
COMMON_WORDS = [
    "video", "people", "day", "week", "thing", "way", "point", "case",
    "idea", "word", "watch", "show", "talk", "tell", "know", "make", "see",
    "look", "year", "world", "part", "place", "time", "comment", "channel",
]
SENTIMENT_WORDS = [
    "great", "terrible", "good", "bad", "amazing", "awful", "interesting",
    "boring", "love", "hate", "nice", "stupid",
]
STOP_FILLER = ["the", "a", "of", "to", "and", "in", "it", "is", "that", "this"]

_ID_ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_"

DAY = 86400.0


@dataclass
class FixturePaths:
    posts: Path
    videos: Path
    source: Path
    target: Path
    events: Path


def _pools() -> tuple[list[str], list[str]]:
    lexicon = load_category_lexicon()
    source = set()
    for name in SOURCE_CATEGORIES:
        source |= lexicon.categories[name]
    target = set()
    for name in TARGET_CATEGORIES:
        target |= lexicon.categories[name]
    overlap = source & target
    return sorted(source - overlap), sorted(target - overlap)


def _comment_text(
    rng: random.Random,
    borrow_pool: list[str],
    base_pool: list[str],
    borrow_fraction: float,
) -> str:
    words = []
    for _ in range(rng.randint(8, 14)):
        roll = rng.random()
        if roll < 0.12:
            words.append(rng.choice(STOP_FILLER))
        elif roll < 0.12 + 0.88 * borrow_fraction:
            words.append(rng.choice(borrow_pool))
        elif roll < 0.92:
            words.append(rng.choice(base_pool))
        else:
            words.append(rng.choice(COMMON_WORDS))
    if rng.random() < 0.35:
        words.insert(rng.randrange(len(words)), rng.choice(SENTIMENT_WORDS))
    if rng.random() < 0.05:
        words.append("https://example.com/page?x=1")
    return " ".join(words)


def _video_id(rng: random.Random, taken: set[str]) -> str:
    while True:
        vid = "".join(rng.choice(_ID_ALPHABET) for _ in range(11))
        if vid not in taken:
            taken.add(vid)
            return vid


def _url_for(rng: random.Random, video_id: str) -> str:
    forms = (
        f"https://www.youtube.com/watch?v={video_id}&t=15s",
        f"https://youtu.be/{video_id}",
        f"https://www.youtube.com/embed/{video_id}",
    )
    return rng.choice(forms)


def generate_fixture(
    directory: str | Path,
    n_source: int = 300,
    n_before: int = 600,
    n_after: int = 600,
    n_videos: int = 40,
    borrow_before: float = 0.05,
    borrow_after: float = 0.30,
    window_hours: float = 24.0,
    linked_within_window_rate: float = 0.85,
    seed: int = 20240101,
) -> FixturePaths:
    """Write the five fixture files into `directory` and return their paths.

    `borrow_before` / `borrow_after` set the fraction of vocabulary the
    target comments take from the source-community pool in each window.
    """
    rng = random.Random(seed)
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    source_pool, target_pool = _pools()

    base_time = 1_600_000_000.0
    taken: set[str] = set()
    videos = []
    for i in range(n_videos):
        video_id = _video_id(rng, taken)
        event = base_time + i * 3 * DAY
        if rng.random() < linked_within_window_rate:
            upload = event - rng.uniform(0, window_hours * 3600.0 - 60.0)
        else:
            upload = event - rng.uniform(window_hours * 3600.0 + 60.0, 10 * DAY)
        videos.append({"video_id": video_id, "event": event, "upload": upload})

    posts_path = directory / "posts.jsonl"
    with posts_path.open("w", encoding="utf-8") as fh:
        for i, video in enumerate(videos):
            record = {
                "id": f"p{i:05d}",
                "created_utc": video["event"],
                "body": "look what they posted " + _url_for(rng, video["video_id"]),
                "urls": [_url_for(rng, video["video_id"])],
            }
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    videos_path = directory / "videos.jsonl"
    with videos_path.open("w", encoding="utf-8") as fh:
        for video in videos:
            record = {"video_id": video["video_id"], "upload_utc": video["upload"]}
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    events_path = directory / "events.jsonl"
    with events_path.open("w", encoding="utf-8") as fh:
        for i, video in enumerate(videos):
            record = {
                "video_id": video["video_id"],
                "post_id": f"p{i:05d}",
                "event_utc": video["event"],
                "upload_utc": video["upload"],
            }
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    source_path = directory / "source.jsonl"
    with source_path.open("w", encoding="utf-8") as fh:
        for i in range(n_source):
            post = rng.randrange(n_videos)
            record = {
                "id": f"s{i:06d}",
                "post_id": f"p{post:05d}",
                "created_utc": videos[post]["event"] + rng.uniform(60, DAY),
                "body": _comment_text(rng, source_pool, source_pool, 0.8),
            }
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    target_path = directory / "target.jsonl"
    with target_path.open("w", encoding="utf-8") as fh:
        for i in range(n_before + n_after):
            video = videos[i % n_videos]
            in_after = i >= n_before
            if in_after:
                offset = rng.uniform(0, window_hours * 3600.0 - 1.0)
                borrow = borrow_after
            else:
                offset = -rng.uniform(60.0, 7 * DAY)
                borrow = borrow_before
            record = {
                "id": f"t{i:06d}",
                "video_id": video["video_id"],
                "created_utc": video["event"] + offset,
                "body": _comment_text(rng, source_pool, target_pool, borrow),
            }
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    return FixturePaths(posts_path, videos_path, source_path, target_path, events_path)
