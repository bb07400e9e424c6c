import pytest

from langshift.corpus import Comment, Origin, build_triplet, split_by_event, write_triplet
from langshift.errors import DataError

VID_A = "AAAAAAAAAAA"
VID_B = "BBBBBBBBBBB"


def _target(comment_id, created, video_id=VID_A):
    return Comment(comment_id, Origin.TARGET_PLATFORM, video_id, created, "text")


def _source(comment_id, created=50.0):
    return Comment(comment_id, Origin.SOURCE_COMMUNITY, None, created, "text")


class TestSplitByEvent:
    def test_boundaries(self):
        comments = [
            _target("c1", 999.0),
            _target("c2", 1000.0),
            _target("c3", 1000.0 + 86399.0),
            _target("c4", 1000.0 + 86400.0),
        ]
        before, after = split_by_event(comments, 1000.0, 24.0)
        assert [c.comment_id for c in before] == ["c1"]
        assert [c.comment_id for c in after] == ["c2", "c3"]

    def test_all_before(self):
        comments = [_target("c1", 10.0), _target("c2", 20.0)]
        before, after = split_by_event(comments, 1000.0, 24.0)
        assert len(before) == 2 and after == []

    def test_empty(self):
        assert split_by_event([], 1000.0, 24.0) == ([], [])

    def test_partition_accounting(self):
        comments = [_target(f"c{i}", 900.0 + i * 40) for i in range(50)]
        before, after = split_by_event(comments, 1000.0, 0.25)
        discarded = len(comments) - len(before) - len(after)
        assert len(before) + len(after) + discarded == len(comments)
        assert discarded == sum(
            1 for c in comments if c.created_at >= 1000.0 + 0.25 * 3600
        )

    def test_infinite_window_discards_nothing(self):
        comments = [_target(f"c{i}", 1000.0 + i * 1e6) for i in range(10)]
        before, after = split_by_event(comments, 1000.0, float("inf"))
        assert len(before) + len(after) == len(comments)

    def test_shift_invariance(self):
        comments = [_target(f"c{i}", 990.0 + i * 7) for i in range(10)]
        before1, after1 = split_by_event(comments, 1000.0, 1.0)
        shift = 123456.0
        shifted = [
            _target(c.comment_id, c.created_at + shift) for c in comments
        ]
        before2, after2 = split_by_event(shifted, 1000.0 + shift, 1.0)
        assert [c.comment_id for c in before1] == [c.comment_id for c in before2]
        assert [c.comment_id for c in after1] == [c.comment_id for c in after2]

    def test_order_preserved(self):
        comments = [_target("z", 10.0), _target("a", 5.0), _target("m", 7.0)]
        before, _ = split_by_event(comments, 1000.0, 24.0)
        assert [c.comment_id for c in before] == ["z", "a", "m"]

    def test_bad_window(self):
        with pytest.raises(ValueError):
            split_by_event([], 0.0, 0.0)


class TestBuildTriplet:
    def test_two_videos_straddling(self):
        targets = [
            _target("a1", 999.0, VID_A),
            _target("a2", 1001.0, VID_A),
            _target("b1", 1999.0, VID_B),
            _target("b2", 2001.0, VID_B),
        ]
        events = {VID_A: 1000.0, VID_B: 2000.0}
        triplet = build_triplet([], targets, events, 24.0)
        assert [c.comment_id for c in triplet.before] == ["a1", "b1"]
        assert [c.comment_id for c in triplet.after] == ["a2", "b2"]

    def test_no_targets(self):
        sources = [_source("s1"), _source("s2")]
        triplet = build_triplet(sources, [], {}, 24.0)
        assert triplet.before == [] and triplet.after == []
        assert triplet.source == sources

    def test_source_not_time_filtered(self):
        sources = [_source("s1", created=1.0), _source("s2", created=1e12)]
        triplet = build_triplet(sources, [], {}, 24.0)
        assert len(triplet.source) == 2

    def test_unknown_video_fatal_names_id(self):
        with pytest.raises(DataError, match=VID_B):
            build_triplet([], [_target("t1", 5.0, VID_B)], {VID_A: 1000.0})

    def test_counts_layout(self):
        # summary layout is (source, before, after)
        targets = [_target("a1", 999.0), _target("a2", 1000.0), _target("a3", 1001.0)]
        triplet = build_triplet([_source("s1")], targets, {VID_A: 1000.0})
        assert triplet.counts() == (1, 1, 2)

    def test_duplicate_ids_across_corpora_rejected(self):
        with pytest.raises(DataError, match="dup"):
            build_triplet(
                [_source("x")], [_target("x", 1001.0)], {VID_A: 1000.0}
            )

    def test_merge_deterministic_in_video_id_order(self):
        targets = [
            _target("b1", 2001.0, VID_B),
            _target("a1", 1001.0, VID_A),
        ]
        events = {VID_A: 1000.0, VID_B: 2000.0}
        triplet = build_triplet([], targets, events)
        assert [c.comment_id for c in triplet.after] == ["a1", "b1"]


def test_write_triplet_round_trips_via_ingest(tmp_path):
    from langshift.ingest import parse_dump

    triplet = build_triplet(
        [_source("s1")],
        [_target("t1", 999.0), _target("t2", 1000.0)],
        {VID_A: 1000.0},
    )
    write_triplet(triplet, tmp_path)
    after, skipped = parse_dump(tmp_path / "after.jsonl", "target_comments")
    assert skipped == 0
    assert [c.comment_id for c in after] == ["t2"]
