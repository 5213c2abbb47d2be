"""Codepoint-level counters for Portuguese text.

All counters walk the text as a flat sequence of Unicode codepoints (a
Python ``str``), emulating a character-vector scan.  The rules are
deliberately simple and deterministic:

* letters: Latin alphabetic codepoints plus the hyphen ``-``;
* words: boundaries are the space, the newline and the end of the text,
  suppressed when the previous codepoint is itself a boundary or a hyphen
  (so hyphenated line breaks do not split a word);
* sentences: ``.``, ``!``, ``?`` and ``;``, collapsing runs of those marks
  into a single sentence end;
* syllables: one per vowel, discounting the semivowel of known diphthongs
  (only when the diphthong follows a consonant) and of known triphthongs.

Everything else (digits, punctuation, symbols, other scripts) is carried
along untouched, which means a few well-known artifacts are intentional:
a dot inside a number ends a sentence, a standalone em dash counts as a
word, and a carriage return behaves like any other word character.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import EmptyTextError

# Latin-script codepoint ranges (basic + supplement + extended blocks).
_LATIN_RANGES = (
    (0x0041, 0x005A),
    (0x0061, 0x007A),
    (0x00C0, 0x00D6),
    (0x00D8, 0x00F6),
    (0x00F8, 0x024F),
    (0x1E00, 0x1EFF),
)

VOWELS = frozenset("aãâáàeéêiíoôõóuú")
DIPHTHONGS = frozenset([
    "ãe", "ai", "ão", "au", "ei", "eu", "éu", "ia", "ie", "io", "iu",
    "õe", "oi", "ói", "ou", "ua", "ue", "uê", "ui",
])
TRIPHTHONGS = frozenset(["uai", "uei", "uão", "uõe", "uiu", "uou"])

SENTENCE_MARKS = frozenset(".!?;")
_WORD_SEPARATORS = frozenset(" \n")
_NON_STARTERS = frozenset(" \n-")  # predecessors that suppress a word boundary


def is_latin_letter(ch: str) -> bool:
    """True for alphabetic codepoints of the Latin script."""
    if not ch.isalpha():
        return False
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _LATIN_RANGES)


def _is_counted_letter(ch: str) -> bool:
    return ch == "-" or is_latin_letter(ch)


def _is_consonant(ch: str) -> bool:
    return is_latin_letter(ch) and ch not in VOWELS


def _lowered(text: str) -> list[str]:
    # Per-codepoint lowercasing; a codepoint whose lowercase form expands
    # (e.g. 'İ') is kept as-is so indices stay aligned.
    out = []
    for ch in text:
        low = ch.lower()
        out.append(low if len(low) == 1 else ch)
    return out


def count_letters(text: str) -> int:
    """Number of Latin letters (any case, accented or not) plus hyphens."""
    return sum(1 for ch in text if _is_counted_letter(ch))


def count_words(text: str) -> int:
    """Number of words delimited by spaces, newlines and the end of text.

    A boundary only counts when the codepoint before it is not itself a
    space, newline or hyphen; the end of the text counts as a boundary
    whenever the final codepoint is none of those three.
    """
    count = 0
    for k, ch in enumerate(text):
        if ch in _WORD_SEPARATORS and k > 0 and text[k - 1] not in _NON_STARTERS:
            count += 1
    if text and text[-1] not in _NON_STARTERS:
        count += 1
    return count


def count_sentences(text: str) -> int:
    """Number of sentence ends (``.``, ``!``, ``?``, ``;``).

    Consecutive marks collapse into one sentence so that ``"Fim..."``
    counts once.  The one-codepoint ellipsis ``…`` is treated as a dot.
    """
    count = 0
    prev = ""
    for ch in text:
        cur = "." if ch == "…" else ch
        if cur in SENTENCE_MARKS and prev not in SENTENCE_MARKS:
            count += 1
        prev = cur
    return count


def count_syllables(text: str) -> int:
    """Approximate syllable count over the whole text.

    Counts every vowel, then discounts one per diphthong window preceded
    by a consonant and one per triphthong window.  At a word start (no
    codepoint two positions back, or a non-letter there) the diphthong
    discount does not apply.
    """
    low = _lowered(text)
    count = 0
    for k, ch in enumerate(low):
        if ch in VOWELS:
            count += 1
        if k >= 2 and low[k - 1] + ch in DIPHTHONGS and _is_consonant(low[k - 2]):
            count -= 1
        if k >= 2 and low[k - 2] + low[k - 1] + ch in TRIPHTHONGS:
            count -= 1
    return count


@dataclass(frozen=True)
class Word:
    """One word occurrence: its raw token and codepoint extent."""

    token: str          # separators removed, case preserved
    start: int          # first codepoint of the trimmed lexical extent
    end: int            # one past the last codepoint of the trimmed extent

    @property
    def normalized(self) -> str:
        return normalize_token(self.token)


def normalize_token(token: str) -> str:
    """Canonical lexicon key for a raw word token.

    Lowercases, drops any embedded separators (left over from hyphenated
    line breaks), and strips leading/trailing codepoints that are neither
    letters nor digits.  Internal hyphens, accents and punctuation stay.
    """
    token = "".join(ch for ch in token if ch not in _WORD_SEPARATORS).lower()
    start, end = 0, len(token)
    while start < end and not (is_latin_letter(token[start]) or token[start].isdigit()):
        start += 1
    while end > start and not (is_latin_letter(token[end - 1]) or token[end - 1].isdigit()):
        end -= 1
    return token[start:end]


def iter_words(text: str) -> Iterator[Word]:
    """Yield word occurrences under exactly the `count_words` boundaries.

    ``len(list(iter_words(t))) == count_words(t)`` for every ``t``.  The
    extent of each word is trimmed the same way `normalize_token` trims
    the token, so slicing the text by it recovers the lexical content.
    """
    buf: list[str] = []
    buf_start = 0
    buf_end = 0  # one past the last non-separator codepoint buffered
    prev = ""
    for k, ch in enumerate(text):
        if ch in _WORD_SEPARATORS:
            if prev and prev not in _NON_STARTERS:
                lo, hi = _trim_bounds(text, buf_start, buf_end)
                yield Word(token="".join(buf), start=lo, end=hi)
                buf = []
            # after a trailing hyphen the buffer survives: the word continues
        else:
            if not buf:
                buf_start = k
            buf.append(ch)
            buf_end = k + 1
        prev = ch
    if prev and prev not in _NON_STARTERS:
        lo, hi = _trim_bounds(text, buf_start, buf_end)
        yield Word(token="".join(buf), start=lo, end=hi)


def _trim_bounds(text: str, start: int, end: int) -> tuple[int, int]:
    while start < end and not (is_latin_letter(text[start]) or text[start].isdigit()):
        start += 1
    while end > start and not (is_latin_letter(text[end - 1]) or text[end - 1].isdigit()):
        end -= 1
    return start, end


def word_tokens(text: str) -> list[str]:
    """Normalized tokens for every counted word (may include '' entries)."""
    return [w.normalized for w in iter_words(text)]


def has_letters(token: str) -> bool:
    """True when a normalized token contains at least one letter."""
    return any(is_latin_letter(ch) for ch in token)


@dataclass(frozen=True)
class TextStats:
    """All counted variables of one document plus their ratios."""

    letters: int
    words: int
    sentences: int
    syllables: int
    complex_words: int
    polysyllables: int
    letters_per_word: float
    syllables_per_word: float
    words_per_sentence: float
    sentences_per_word: float
    complex_word_ratio: float


def analyze_text(text: str, lexicon) -> TextStats:
    """Run every counter over *text* and derive the ratio variables.

    Degenerate-input rule: a text with at least one letter always has at
    least one word and one sentence, so every ratio is well defined.
    ``complex_words`` uses the lexicon's frequency bank; tokens without a
    single letter (numbers, stray symbols) are never complex.
    ``polysyllables`` counts words of three or more syllables, the
    classical complexity criterion kept for the original formula profile.

    Raises `EmptyTextError` when the text has no letters at all.
    """
    letters = count_letters(text)
    if letters == 0:
        raise EmptyTextError("text contains no analyzable letters")

    words = count_words(text) or 1
    sentences = count_sentences(text) or 1
    syllables = count_syllables(text)

    complex_words = 0
    polysyllables = 0
    for word in iter_words(text):
        token = word.normalized
        if not has_letters(token):
            continue
        if lexicon.is_complex(token):
            complex_words += 1
        if count_syllables(token) >= 3:
            polysyllables += 1

    return TextStats(
        letters=letters,
        words=words,
        sentences=sentences,
        syllables=syllables,
        complex_words=complex_words,
        polysyllables=polysyllables,
        letters_per_word=letters / words,
        syllables_per_word=syllables / words,
        words_per_sentence=words / sentences,
        sentences_per_word=sentences / words,
        complex_word_ratio=complex_words / words,
    )
