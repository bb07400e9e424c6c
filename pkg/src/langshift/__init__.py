"""Cross-platform language shift analysis.

Builds event-windowed comment corpora, represents them as word and
lexical-category distributions, and compares them with divergence
measures and hypothesis tests.
"""

from .affect import (
    AffectLexicon,
    AffectScore,
    AffectSummary,
    load_affect_lexicon,
    score_comment,
    summarize_corpus,
)
from .corpus import Comment, CorpusTriplet, Origin, build_triplet, split_by_event
from .errors import ConfigError, DataError, LangshiftError, NumericError
from .ingest import (
    DatasetSummary,
    EventRecord,
    RawPost,
    VideoRef,
    dedupe_videos,
    extract_video_refs,
    parse_dump,
    read_events,
    summarize,
)
from .porter import stem
from .report import AnalysisReport, RunConfig, load_config, run_pipeline
from .represent import (
    CategoryLexicon,
    CorpusDistribution,
    Vocabulary,
    build_vocabulary,
    categorize_document,
    corpus_category_distribution,
    corpus_tfidf_distribution,
    document_frequencies,
    load_category_lexicon,
    tfidf_document,
)
from .stats import Shift, TestResult, jsd, mann_whitney_u, ordering_check, paired_t
from .textprep import load_stoplist, preprocess, remove_stopwords, tokenize

__version__ = "0.1.0"

__all__ = [
    "AffectLexicon", "AffectScore", "AffectSummary", "AnalysisReport",
    "CategoryLexicon", "Comment", "ConfigError", "CorpusDistribution",
    "CorpusTriplet", "DataError", "DatasetSummary", "EventRecord",
    "LangshiftError", "NumericError", "Origin", "RawPost", "RunConfig",
    "Shift", "TestResult", "VideoRef", "Vocabulary", "build_triplet",
    "build_vocabulary", "categorize_document", "corpus_category_distribution",
    "corpus_tfidf_distribution", "dedupe_videos", "document_frequencies",
    "extract_video_refs", "jsd", "load_affect_lexicon", "load_category_lexicon",
    "load_config", "load_stoplist", "mann_whitney_u", "ordering_check",
    "paired_t", "parse_dump", "preprocess", "read_events", "remove_stopwords",
    "run_pipeline", "score_comment", "split_by_event", "stem", "summarize",
    "summarize_corpus", "tfidf_document", "tokenize",
]
