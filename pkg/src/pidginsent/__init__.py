"""Sentiment scoring for code-mixed Nigerian Pidgin/English text.

Three layers: lexicon handling (parse/derive/merge/serialize), a
rule-based scoring engine producing compound scores on [-1, +1], and a
corpus evaluator that compares labels before and after lexicon
augmentation.
"""

from .engine import (
    DEFAULT_CONFIG,
    EngineConfig,
    SentimentScores,
    TokenizedDocument,
    but_clause_reweight,
    match_ngrams,
    normalize_compound,
    polarity_scores,
    punctuation_amplifier,
    token_valence,
    tokenize,
)
from .evaluation import (
    ComparisonRow,
    CorpusError,
    EvaluationReport,
    Label,
    LabeledDocument,
    classify,
    compare_lexicons,
    evaluate,
    export_report,
    load_corpus,
)
from .lexicon import (
    DerivationRecord,
    Lexicon,
    LexiconEntry,
    LexiconError,
    MergePolicy,
    derive_entry,
    derive_from_mapping,
    load_reference_lexicon,
    merge,
    parse_lexicon_file,
    parse_mapping_file,
    reference_lexicon_path,
    serialize_lexicon_file,
)

__version__ = "0.1.0"
