"""Content analysis: word frequencies and revision hints.

Keyword search reports how often specific terms occur (whole-word,
case-insensitive), a cheap proxy for how exhaustively a text covers its
subject.  Cloud frequencies rank the remaining vocabulary after stopword
removal.  Suggestion spans point at the usual readability offenders:
sentences of 30 to 45 words, sentences of more than 45 words, and every
complex word.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .lexicon import Lexicon
from .tokenizer import (
    SENTENCE_MARKS,
    count_words,
    has_letters,
    iter_words,
    normalize_token,
    word_tokens,
)

LONG_SENTENCE_MIN = 30
LONG_SENTENCE_MAX = 45  # inclusive; above this a sentence is "very long"

KIND_LONG_SENTENCE = "longSentence"
KIND_VERY_LONG_SENTENCE = "veryLongSentence"
KIND_COMPLEX_WORD = "complexWord"


@dataclass(frozen=True)
class FrequencyEntry:
    """Absolute and relative occurrence count of one normalized token."""

    token: str
    absolute: int
    relative: float


@dataclass(frozen=True)
class Span:
    """Half-open codepoint interval [start, end) with a highlight kind."""

    start: int
    end: int
    kind: str


def keyword_frequencies(text: str, keywords: list[str]) -> list[FrequencyEntry]:
    """Whole-word, case-insensitive counts for each requested keyword.

    Keywords absent from the text yield ``(0, 0.0)`` entries; relative
    frequency is against the total word count of the text.
    """
    tokens = word_tokens(text)
    total = len(tokens)
    counts = Counter(tokens)
    entries = []
    for keyword in keywords:
        key = normalize_token(keyword)
        absolute = counts.get(key, 0) if key else 0
        relative = absolute / total if total else 0.0
        entries.append(FrequencyEntry(token=key, absolute=absolute, relative=relative))
    return entries


def cloud_frequencies(text: str, lexicon: Lexicon, top_n: int) -> list[FrequencyEntry]:
    """Most frequent non-stopword tokens, ready for a word cloud.

    Ranked by absolute frequency descending, ties broken alphabetically,
    truncated to *top_n*.  Relative frequencies use the total word count
    before stopword removal.
    """
    tokens = word_tokens(text)
    total = len(tokens)
    counts = Counter(
        token for token in tokens
        if token and not lexicon.is_stopword(token)
    )
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return [
        FrequencyEntry(token=token, absolute=absolute, relative=absolute / total)
        for token, absolute in ranked[:top_n]
    ]


def _sentence_extents(text: str) -> list[tuple[int, int]]:
    """Half-open extents of the sentences of *text*.

    A sentence runs from its first non-separator codepoint to its
    terminating mark inclusive; marks immediately repeating a previous
    mark (as in ``"Fim..."``) are swallowed between sentences.  Trailing
    text without a terminating mark forms a final sentence.
    """
    extents = []
    n = len(text)
    i = 0
    while i < n:
        while i < n and text[i] in " \n":
            i += 1
        if i >= n:
            break
        start = i
        end = None
        while i < n:
            ch = "." if text[i] == "…" else text[i]
            if ch in SENTENCE_MARKS:
                end = i + 1
                i += 1
                while i < n and (text[i] if text[i] != "…" else ".") in SENTENCE_MARKS:
                    i += 1
                break
            i += 1
        if end is None:
            end = n
            while end > start and text[end - 1] in " \n":
                end -= 1
        extents.append((start, end))
    return extents


def suggestion_spans(text: str, lexicon: Lexicon) -> list[Span]:
    """Spans worth revising, ordered by start offset.

    Sentences with a word count in [30, 45] are flagged long, above 45
    very long; every complex word gets its own span covering exactly the
    word.  Sentence spans of the two kinds never overlap.
    """
    spans = []
    for start, end in _sentence_extents(text):
        words = count_words(text[start:end])
        if words > LONG_SENTENCE_MAX:
            spans.append(Span(start=start, end=end, kind=KIND_VERY_LONG_SENTENCE))
        elif words >= LONG_SENTENCE_MIN:
            spans.append(Span(start=start, end=end, kind=KIND_LONG_SENTENCE))
    for word in iter_words(text):
        token = word.normalized
        if not has_letters(token):
            continue
        if lexicon.is_complex(token) and word.start < word.end:
            spans.append(Span(start=word.start, end=word.end, kind=KIND_COMPLEX_WORD))
    spans.sort(key=lambda span: (span.start, span.end, span.kind))
    return spans
