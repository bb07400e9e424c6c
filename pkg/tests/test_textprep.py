import random

from langshift.textprep import (
    load_stoplist,
    preprocess,
    remove_stopwords,
    stem_tokens,
    tokenize,
)


class TestTokenize:
    def test_apostrophes_and_punctuation(self):
        assert tokenize("Don't trust MSM!") == ["don't", "trust", "msm"]

    def test_empty(self):
        assert tokenize("") == []

    def test_urls_stripped(self):
        assert tokenize("see https://youtu.be/abc now") == ["see", "now"]
        assert tokenize("www.example.com/x said so") == ["said", "so"]

    def test_digits_and_punctuation_separate(self):
        assert tokenize("covid19 is a2b c,d") == ["covid", "is", "a", "b", "c", "d"]

    def test_curly_apostrophe_normalized(self):
        assert tokenize("don’t") == ["don't"]

    def test_leading_trailing_apostrophes_dropped(self):
        assert tokenize("'tis rock'") == ["tis", "rock"]

    def test_non_latin_passes_through(self):
        assert tokenize("привет world") == [
            "привет",
            "world",
        ]

    def test_never_uppercase_or_whitespace(self):
        rng = random.Random(7)
        alphabet = "AbC dE'f.g:H-7’\nÉé"
        for _ in range(200):
            text = "".join(rng.choice(alphabet) for _ in range(40))
            for token in tokenize(text):
                assert token == token.lower()
                assert token
                assert not any(ch.isspace() for ch in token)

    def test_deterministic(self):
        text = "Some Text with https://a.b/c and DON'T 123 mixed"
        assert tokenize(text) == tokenize(text)


class TestStopwords:
    def test_removes_standard_stops(self):
        stops = load_stoplist()
        assert remove_stopwords(["the", "great", "awakening"], stops) == [
            "great",
            "awakening",
        ]

    def test_empty_stoplist_is_identity(self):
        stream = ["the", "great", "awakening"]
        assert remove_stopwords(stream, frozenset()) == stream

    def test_all_stopwords(self):
        stops = load_stoplist()
        assert remove_stopwords(["the", "a", "of"], stops) == []

    def test_idempotent(self):
        stops = load_stoplist()
        stream = ["the", "deep", "state", "is", "watching"]
        once = remove_stopwords(stream, stops)
        assert remove_stopwords(once, stops) == once

    def test_stoplist_file_format(self, tmp_path):
        path = tmp_path / "stops.txt"
        path.write_text("# comment\nfoo\nBAR  # trailing\n\nbaz\n", encoding="utf-8")
        assert load_stoplist(path) == frozenset({"foo", "bar", "baz"})

    def test_shipped_list_is_lowercase(self):
        stops = load_stoplist()
        assert 150 <= len(stops) <= 200
        assert all(w == w.lower() for w in stops)


class TestPipeline:
    def test_preprocess_order(self):
        stops = load_stoplist()
        # stop words leave before stemming: "was" survives stemming as "wa"
        # if stemmed first, so the order matters
        assert preprocess("The ponies were running", stops) == ["poni", "run"]

    def test_stem_tokens(self):
        assert stem_tokens(["caresses", "ponies"]) == ["caress", "poni"]
