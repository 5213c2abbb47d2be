"""Full analysis report and its canonical JSON form.

The report bundles everything one analysis produces: counted variables,
the adapted-profile indices (optionally the original-profile ones too),
revision spans, keyword and cloud frequencies, and free-form notes.

`render_json` is the single serializer used by both the CLI and the HTTP
service, so the two surfaces emit byte-identical JSON for the same text.
Indices are rendered with one decimal, ratios with three; key order is
fixed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .content import (
    FrequencyEntry,
    Span,
    cloud_frequencies,
    keyword_frequencies,
    suggestion_spans,
)
from .lexicon import Lexicon
from .metrics import ADAPTED_PROFILE, ORIGINAL_PROFILE, IndexSet, compute_index_set
from .tokenizer import TextStats, analyze_text

SCHEMA_VERSION = 1
DEFAULT_TOP_N = 50

CENTIGRADE_RANGE = (0.0, 100.0)


@dataclass(frozen=True)
class ReadabilityReport:
    """Everything the analysis of one text yields."""

    stats: TextStats
    indices: IndexSet
    original_indices: IndexSet | None
    suggestions: list[Span]
    keywords: list[FrequencyEntry]
    cloud: list[FrequencyEntry]
    notes: list[str]


def build_report(
    text: str,
    lexicon: Lexicon,
    keywords: list[str] | None = None,
    top_n: int = DEFAULT_TOP_N,
    include_original: bool = False,
) -> ReadabilityReport:
    """Analyze *text* end to end.

    Raises `EmptyTextError` (via the tokenizer) when the text has no
    letters.  ``include_original`` adds a second index set computed with
    the original-language coefficients next to the adapted ones.
    """
    stats = analyze_text(text, lexicon)
    indices = compute_index_set(stats, ADAPTED_PROFILE)
    original = compute_index_set(stats, ORIGINAL_PROFILE) if include_original else None

    notes = []
    _note_out_of_range(notes, "flesch", indices.flesch, "adapted")
    _note_out_of_range(notes, "gulpease", indices.gulpease, "adapted")
    if original is not None:
        _note_out_of_range(notes, "flesch", original.flesch, "original")
        _note_out_of_range(notes, "gulpease", original.gulpease, "original")

    return ReadabilityReport(
        stats=stats,
        indices=indices,
        original_indices=original,
        suggestions=suggestion_spans(text, lexicon),
        keywords=keyword_frequencies(text, keywords or []),
        cloud=cloud_frequencies(text, lexicon, top_n),
        notes=notes,
    )


def _note_out_of_range(notes: list[str], name: str, score: float, profile: str) -> None:
    lo, hi = CENTIGRADE_RANGE
    if score < lo or score > hi:
        notes.append(
            f"{profile} {name} score {score:.1f} falls outside the 0-100 scale"
        )


def _round_index(value: float) -> float:
    return round(value, 1)


def _round_ratio(value: float) -> float:
    return round(value, 3)


def _stats_dict(stats: TextStats) -> dict:
    return {
        "letters": stats.letters,
        "words": stats.words,
        "sentences": stats.sentences,
        "syllables": stats.syllables,
        "complexWords": stats.complex_words,
        "lettersPerWord": _round_ratio(stats.letters_per_word),
        "syllablesPerWord": _round_ratio(stats.syllables_per_word),
        "wordsPerSentence": _round_ratio(stats.words_per_sentence),
        "sentencesPerWord": _round_ratio(stats.sentences_per_word),
        "complexWordRatio": _round_ratio(stats.complex_word_ratio),
    }


def _indices_dict(indices: IndexSet) -> dict:
    return {
        "flesch": _round_index(indices.flesch),
        "gulpease": _round_index(indices.gulpease),
        "fleschKincaid": _round_index(indices.flesch_kincaid),
        "gunningFog": _round_index(indices.gunning_fog),
        "ari": _round_index(indices.ari),
        "colemanLiau": _round_index(indices.coleman_liau),
        "finalRaw": _round_index(indices.final_raw),
        "finalDisplay": indices.final_display,
        "band": indices.band,
    }


def _frequency_dict(entry: FrequencyEntry) -> dict:
    return {
        "token": entry.token,
        "absolute": entry.absolute,
        "relative": _round_ratio(entry.relative),
    }


def report_to_dict(report: ReadabilityReport) -> dict:
    """Plain-dict form of a report with fixed key order and rounding."""
    payload = {
        "schema": SCHEMA_VERSION,
        "stats": _stats_dict(report.stats),
        "indices": _indices_dict(report.indices),
    }
    if report.original_indices is not None:
        payload["originalIndices"] = _indices_dict(report.original_indices)
    payload["suggestions"] = [
        {"start": span.start, "end": span.end, "kind": span.kind}
        for span in report.suggestions
    ]
    payload["keywords"] = [_frequency_dict(e) for e in report.keywords]
    payload["cloud"] = [_frequency_dict(e) for e in report.cloud]
    payload["notes"] = list(report.notes)
    return payload


def render_json(report: ReadabilityReport) -> str:
    """Canonical JSON text of a report (UTF-8 friendly, 2-space indent)."""
    return json.dumps(report_to_dict(report), ensure_ascii=False, indent=2)
