"""Comment text normalization: tokenization, stop words, stemming.

A token stream is a plain ``list[str]`` of lowercase tokens. URLs are
stripped before word extraction; tokens are maximal runs of alphabetic
characters plus internal apostrophes; digits and punctuation separate.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from .errors import DataError
from .porter import stem

TokenStream = list[str]

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
# alphabetic runs ([^\W\d_] is Unicode letters), optionally chained by
# single internal apostrophes
_WORD_RE = re.compile(r"[^\W\d_]+(?:'[^\W\d_]+)*")


def tokenize(text: str) -> TokenStream:
    """Lowercase, strip URLs, and split into word tokens."""
    lowered = text.lower().replace("’", "'")
    stripped = _URL_RE.sub(" ", lowered)
    return _WORD_RE.findall(stripped)


def remove_stopwords(tokens: TokenStream, stops: frozenset[str]) -> TokenStream:
    """Order-preserving filter dropping tokens found in `stops`."""
    return [t for t in tokens if t not in stops]


def stem_tokens(tokens: TokenStream) -> TokenStream:
    return [stem(t) for t in tokens]


def preprocess(text: str, stops: frozenset[str]) -> TokenStream:
    """tokenize -> remove stop words -> stem, in that order."""
    return stem_tokens(remove_stopwords(tokenize(text), stops))


def load_stoplist(path: str | Path | None = None) -> frozenset[str]:
    """Read a stop list: one lowercase word per line, `#` comments allowed.

    With no path, loads the English stop list shipped with the package.
    """
    if path is None:
        text = (
            resources.files("langshift.data").joinpath("stopwords.txt").read_text("utf-8")
        )
    else:
        try:
            text = Path(path).read_text("utf-8")
        except OSError as exc:
            raise DataError(f"cannot read stop list {path}: {exc}") from exc
    words = set()
    for line in text.splitlines():
        word = line.split("#", 1)[0].strip()
        if word:
            words.add(word.lower())
    return frozenset(words)
