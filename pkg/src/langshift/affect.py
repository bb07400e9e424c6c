"""Lexicon-based sentiment polarity and subjectivity scoring.

Each comment is scored as the mean polarity and mean subjectivity of its
lexicon hits; a hit immediately preceded by a negator has its polarity
multiplied by -0.5. Scores are computed on tokenized but otherwise raw
streams (stop words retained, since negators are stop words).

Corpus summaries report mean and population standard deviation.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DataError
from .textprep import TokenStream

NEGATION_FACTOR = -0.5


@dataclass
class AffectLexicon:
    entries: dict[str, tuple[float, float]]  # word -> (polarity, subjectivity)
    negators: frozenset[str]

    def __post_init__(self):
        for word, (pol, subj) in self.entries.items():
            if not -1.0 <= pol <= 1.0:
                raise DataError(f"polarity of {word!r} outside [-1, 1]: {pol}")
            if not 0.0 <= subj <= 1.0:
                raise DataError(f"subjectivity of {word!r} outside [0, 1]: {subj}")


@dataclass
class AffectScore:
    polarity: float
    subjectivity: float


@dataclass
class AffectSummary:
    mean_polarity: float
    std_polarity: float
    mean_subjectivity: float
    std_subjectivity: float

    def formatted(self) -> tuple[str, str]:
        """(sentiment, subjectivity) rendered as mean±std at 4 decimals."""
        return (
            f"{self.mean_polarity:.4f}±{self.std_polarity:.4f}",
            f"{self.mean_subjectivity:.4f}±{self.std_subjectivity:.4f}",
        )


def _read_text(path: str | Path | None, default_name: str, what: str) -> str:
    if path is None:
        return resources.files("langshift.data").joinpath(default_name).read_text("utf-8")
    try:
        return Path(path).read_text("utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {what} {path}: {exc}") from exc


def load_affect_lexicon(
    lexicon_path: str | Path | None = None,
    negators_path: str | Path | None = None,
) -> AffectLexicon:
    """Load word scores (CSV: word,polarity,subjectivity) and negators
    (one word per line, `#` comments). Defaults to the shipped files."""
    text = _read_text(lexicon_path, "affect_lexicon.csv", "affect lexicon")
    entries: dict[str, tuple[float, float]] = {}
    reader = csv.reader(text.splitlines())
    for row in reader:
        if not row or row[0].startswith("#") or row[0] == "word":
            continue
        if len(row) != 3:
            raise DataError(f"bad affect lexicon row: {row!r}")
        try:
            entries[row[0].strip().lower()] = (float(row[1]), float(row[2]))
        except ValueError as exc:
            raise DataError(f"bad affect lexicon row {row!r}: {exc}") from exc

    negators = set()
    for line in _read_text(negators_path, "negators.txt", "negator list").splitlines():
        word = line.split("#", 1)[0].strip()
        if word:
            negators.add(word.lower())
    return AffectLexicon(entries, frozenset(negators))


def score_comment(tokens: TokenStream, lexicon: AffectLexicon) -> AffectScore:
    """Mean polarity and subjectivity of lexicon hits; (0, 0) without hits."""
    polarities = []
    subjectivities = []
    for i, token in enumerate(tokens):
        entry = lexicon.entries.get(token)
        if entry is None:
            continue
        polarity, subjectivity = entry
        if i > 0 and tokens[i - 1] in lexicon.negators:
            polarity *= NEGATION_FACTOR
        polarities.append(polarity)
        subjectivities.append(subjectivity)
    if not polarities:
        return AffectScore(0.0, 0.0)
    n = len(polarities)
    return AffectScore(math.fsum(polarities) / n, math.fsum(subjectivities) / n)


def summarize_corpus(scores: list[AffectScore]) -> AffectSummary:
    """Mean and population standard deviation of each component."""
    if not scores:
        raise DataError("cannot summarize an empty corpus")
    n = len(scores)

    def mean_std(values: list[float]) -> tuple[float, float]:
        mean = math.fsum(values) / n
        var = math.fsum((v - mean) ** 2 for v in values) / n
        return mean, math.sqrt(var)

    mp, sp = mean_std([s.polarity for s in scores])
    ms, ss = mean_std([s.subjectivity for s in scores])
    return AffectSummary(mp, sp, ms, ss)
