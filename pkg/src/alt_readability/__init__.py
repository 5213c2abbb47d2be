"""Readability analysis for Portuguese text."""

from .calibration import (
    ComparisonStats,
    RegressionFit,
    fit_plane,
    mean_diff_band,
    pearson,
    student_t_p_value,
)
from .content import (
    FrequencyEntry,
    Span,
    cloud_frequencies,
    keyword_frequencies,
    suggestion_spans,
)
from .errors import (
    AltError,
    EmptyTextError,
    InvalidDofError,
    LengthMismatchError,
    LexiconFormatError,
    RankDeficientError,
    TooFewRowsError,
    UnknownFormulaError,
    ZeroVarianceError,
)
from .lexicon import Lexicon, load_lexicon, load_stopwords, load_word_bank
from .metrics import (
    ADAPTED_PROFILE,
    ORIGINAL_PROFILE,
    IndexSet,
    classify,
    compute_index_set,
    convert_flesch_to_grade,
    eval_formula,
)
from .report import ReadabilityReport, build_report, render_json
from .tokenizer import (
    TextStats,
    analyze_text,
    count_letters,
    count_sentences,
    count_syllables,
    count_words,
)

__version__ = "0.1.0"

__all__ = [
    "ADAPTED_PROFILE",
    "AltError",
    "ComparisonStats",
    "EmptyTextError",
    "FrequencyEntry",
    "IndexSet",
    "InvalidDofError",
    "LengthMismatchError",
    "Lexicon",
    "LexiconFormatError",
    "ORIGINAL_PROFILE",
    "RankDeficientError",
    "ReadabilityReport",
    "RegressionFit",
    "Span",
    "TextStats",
    "TooFewRowsError",
    "UnknownFormulaError",
    "ZeroVarianceError",
    "analyze_text",
    "build_report",
    "classify",
    "cloud_frequencies",
    "compute_index_set",
    "convert_flesch_to_grade",
    "count_letters",
    "count_sentences",
    "count_syllables",
    "count_words",
    "eval_formula",
    "fit_plane",
    "keyword_frequencies",
    "load_lexicon",
    "load_stopwords",
    "load_word_bank",
    "mean_diff_band",
    "pearson",
    "render_json",
    "student_t_p_value",
    "suggestion_spans",
]
