import json

import pytest


def write_jsonl(path, records):
    path.write_text(
        "".join(json.dumps(r, sort_keys=True) + "\n" for r in records),
        encoding="utf-8",
    )
    return path


@pytest.fixture
def tiny_inputs(tmp_path):
    """Hand-built three-file input set: 2 videos, planted vocabulary shift.

    The after comments reuse source-community wording; the before comments
    do not, so both representations must report shift_toward.
    """
    vid_a, vid_b = "AAAAAAAAAAA", "BBBBBBBBBBB"
    source = [
        {"id": f"s{i}", "post_id": "p0", "created_utc": 500.0 + i,
         "body": body}
        for i, body in enumerate([
            "the government coverup is propaganda",
            "corrupt government propaganda everywhere",
            "wake up sheeple this is a coverup",
            "the regime spreads propaganda and lies",
        ])
    ]
    target = [
        # before: event is 1000.0 (A) / 2000.0 (B)
        {"id": "t0", "video_id": vid_a, "created_utc": 900.0,
         "body": "lovely song great guitar solo"},
        {"id": "t1", "video_id": vid_a, "created_utc": 950.0,
         "body": "the melody is great but the government would hate it"},
        {"id": "t2", "video_id": vid_b, "created_utc": 1900.0,
         "body": "nice concert footage and dancing"},
        # after: borrow source wording
        {"id": "t3", "video_id": vid_a, "created_utc": 1000.0,
         "body": "this proves the government coverup propaganda"},
        {"id": "t4", "video_id": vid_b, "created_utc": 2100.0,
         "body": "corrupt regime propaganda just like the coverup"},
        {"id": "t5", "video_id": vid_b, "created_utc": 2200.0,
         "body": "sheeple wake up the government lies"},
    ]
    events = [
        {"video_id": vid_a, "post_id": "p0", "event_utc": 1000.0, "upload_utc": 990.0},
        {"video_id": vid_b, "post_id": "p1", "event_utc": 2000.0,
         "upload_utc": 2000.0 - 30 * 3600.0},
    ]
    return {
        "source": write_jsonl(tmp_path / "source.jsonl", source),
        "target": write_jsonl(tmp_path / "target.jsonl", target),
        "events": write_jsonl(tmp_path / "events.jsonl", events),
        "dir": tmp_path,
    }
