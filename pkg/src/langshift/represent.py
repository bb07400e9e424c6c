"""Corpus-level probability distributions over words and lexical categories.

Both representations average per-comment vectors and L1-normalize the
mean into a probability distribution. The vocabulary and document
frequencies are computed once over the union of all three corpora so the
distributions share one label space.

Reductions are exact under duplication of the document list: the TF-IDF
mean is folded into integer term counts before any float op, and the
category mean uses correctly-rounded summation.
"""

from __future__ import annotations

import csv
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DataError
from .porter import stem
from .textprep import TokenStream


@dataclass
class Vocabulary:
    terms: list[str]
    index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {t: i for i, t in enumerate(self.terms)}

    def __len__(self) -> int:
        return len(self.terms)


@dataclass
class CorpusDistribution:
    labels: list[str]
    mass: np.ndarray
    degenerate: bool = False  # set when an all-zero mean fell back to uniform
    # per-document mean before L1 normalization; the paired t test runs on
    # this, since normalized vectors have identically zero mean difference
    mean: np.ndarray | None = None

    def __post_init__(self):
        self.mass = np.asarray(self.mass, dtype=float)
        if len(self.labels) != len(self.mass):
            raise ValueError("labels and mass lengths differ")
        if self.mean is not None:
            self.mean = np.asarray(self.mean, dtype=float)

    def write_csv(self, path: str | Path) -> None:
        with Path(path).open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["label", "mass"])
            for label, m in zip(self.labels, self.mass):
                writer.writerow([label, repr(float(m))])


def build_vocabulary(corpora: Sequence[Sequence[TokenStream]]) -> Vocabulary:
    """Sorted union of terms across every stream of every corpus."""
    terms: set[str] = set()
    for corpus in corpora:
        for tokens in corpus:
            terms.update(tokens)
    if not terms:
        raise DataError("no vocabulary: all token streams are empty")
    return Vocabulary(sorted(terms))


def document_frequencies(
    documents: Iterable[TokenStream], vocab: Vocabulary
) -> tuple[np.ndarray, int]:
    """(df vector, document count) over the given documents."""
    df = np.zeros(len(vocab), dtype=np.int64)
    n_docs = 0
    for tokens in documents:
        n_docs += 1
        for term in set(tokens):
            pos = vocab.index.get(term)
            if pos is not None:
                df[pos] += 1
    return df, n_docs


def _idf(df: np.ndarray, n_docs: int) -> np.ndarray:
    # smoothed: never zero, defined for df = 0
    return np.log((1.0 + n_docs) / (1.0 + df)) + 1.0


def tfidf_document(
    tokens: TokenStream, vocab: Vocabulary, df: np.ndarray, n_docs: int
) -> np.ndarray:
    """Per-document vector: count(t) * (ln((1+N)/(1+df(t))) + 1)."""
    vec = np.zeros(len(vocab))
    idf = _idf(df, n_docs)
    for term, count in Counter(tokens).items():
        pos = vocab.index.get(term)
        if pos is not None:
            vec[pos] = count * idf[pos]
    return vec


def corpus_tfidf_distribution(
    streams: Sequence[TokenStream], vocab: Vocabulary, df: np.ndarray, n_docs: int
) -> CorpusDistribution:
    """Mean of per-document TF-IDF vectors, L1-normalized.

    Term frequency is linear in counts, so the mean is computed from the
    summed integer counts; this is algebraically identical to averaging
    the per-document vectors and exactly invariant under duplicating the
    document list.
    """
    if not streams:
        raise DataError("corpus has no documents")
    counts = np.zeros(len(vocab), dtype=np.int64)
    total_tokens = 0
    for tokens in streams:
        total_tokens += len(tokens)
        for term, count in Counter(tokens).items():
            pos = vocab.index.get(term)
            if pos is not None:
                counts[pos] += count
    if total_tokens == 0:
        raise DataError("corpus has only empty documents")
    mean = counts * _idf(df, n_docs) / len(streams)
    return CorpusDistribution(vocab.terms, mean / mean.sum(), mean=mean)


@dataclass
class CategoryLexicon:
    categories: dict[str, frozenset[str]]
    names: list[str] = field(init=False, repr=False)
    membership: dict[str, list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        if not self.categories:
            raise DataError("category lexicon is empty")
        self.names = sorted(self.categories)
        # word -> indices (into sorted names) of categories containing it
        self.membership = {}
        for i, name in enumerate(self.names):
            for word in self.categories[name]:
                self.membership.setdefault(word, []).append(i)

    def stemmed(self) -> "CategoryLexicon":
        """Variant whose seed words are stemmed, for matching stemmed streams."""
        return CategoryLexicon(
            {
                name: frozenset(stem(w) for w in words)
                for name, words in self.categories.items()
            }
        )


def load_category_lexicon(path: str | Path | None = None) -> CategoryLexicon:
    """JSON object mapping category name -> array of seed words.

    With no path, loads the ~200-category lexicon shipped with the
    package.
    """
    if path is None:
        text = (
            resources.files("langshift.data").joinpath("categories.json").read_text("utf-8")
        )
    else:
        try:
            text = Path(path).read_text("utf-8")
        except OSError as exc:
            raise DataError(f"cannot read category lexicon {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"category lexicon is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict) or not all(isinstance(v, list) for v in raw.values()):
        raise DataError("category lexicon must map names to word arrays")
    return CategoryLexicon(
        {name: frozenset(str(w).lower() for w in words) for name, words in raw.items()}
    )


def categorize_document(tokens: TokenStream, lexicon: CategoryLexicon) -> np.ndarray:
    """Per-category match density: matches / max(1, len(tokens)).

    A token may count toward several categories.
    """
    vec = np.zeros(len(lexicon.categories))
    for token in tokens:
        for idx in lexicon.membership.get(token, ()):
            vec[idx] += 1.0
    return vec / max(1, len(tokens))


def corpus_category_distribution(
    streams: Sequence[TokenStream], lexicon: CategoryLexicon
) -> CorpusDistribution:
    """Mean of per-document category vectors, L1-normalized.

    When nothing matches anywhere the result degenerates to the uniform
    distribution, flagged on the returned object.
    """
    if not streams:
        raise DataError("corpus has no documents")
    names = lexicon.names
    n_cats = len(names)
    per_doc = np.zeros((len(streams), n_cats))
    for row, tokens in enumerate(streams):
        for token in tokens:
            for idx in lexicon.membership.get(token, ()):
                per_doc[row, idx] += 1.0
        per_doc[row] /= max(1, len(tokens))
    # fsum keeps the column sums correctly rounded, so duplicating the
    # document list leaves the mean bit-identical
    sums = np.array([math.fsum(col) for col in per_doc.T.tolist()])
    mean = sums / len(streams)
    total = mean.sum()
    if total == 0.0:
        return CorpusDistribution(
            names, np.full(n_cats, 1.0 / n_cats), degenerate=True, mean=mean
        )
    return CorpusDistribution(names, mean / total, mean=mean)
