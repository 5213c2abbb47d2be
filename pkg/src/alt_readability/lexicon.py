"""Frequency word bank and stopword list.

The bank is a rank-ordered list of the most frequent Portuguese word
forms; only its first 5000 entries are kept.  A word that is not among
those entries is a "complex word".  The stopword list holds function
words (articles, prepositions, pronouns, conjunctions, frequent adverbs)
that carry little topical content and are dropped from word-cloud output.

Default data files ship with the package (``data/wordbank-pt.txt`` and
``data/stopwords-pt.txt``); both can be overridden per call, by CLI flag
or by the ``ALT_WORDBANK`` / ``ALT_STOPWORDS`` environment variables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import LexiconFormatError
from .tokenizer import normalize_token

BANK_LIMIT = 5000

ENV_WORDBANK = "ALT_WORDBANK"
ENV_STOPWORDS = "ALT_STOPWORDS"

_DEFAULT_WORDBANK = "wordbank-pt.txt"
_DEFAULT_STOPWORDS = "stopwords-pt.txt"


@dataclass(frozen=True)
class Lexicon:
    """Immutable word bank + stopword set with normalized membership."""

    common_words: frozenset[str]
    stopwords: frozenset[str]
    source: str = "builtin"

    @property
    def bank_size(self) -> int:
        return len(self.common_words)

    def is_complex(self, word: str) -> bool:
        """True iff the normalized word is absent from the bank."""
        return normalize_token(word) not in self.common_words

    def is_stopword(self, word: str) -> bool:
        """True for function words and for the degenerate empty token."""
        token = normalize_token(word)
        return token == "" or token in self.stopwords


def _read_tokens(path: str | Path, limit: int | None = None) -> list[str]:
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise LexiconFormatError(f"{path}: not valid UTF-8") from exc
    if text.startswith("﻿"):
        text = text[1:]
    tokens: list[str] = []
    for line in text.splitlines():
        if limit is not None and len(tokens) >= limit:
            break
        # optional "token<TAB>frequency" form: the frequency is ignored
        token = normalize_token(line.split("\t", 1)[0].strip())
        if token:
            tokens.append(token)
    return tokens


def load_word_bank(path: str | Path) -> frozenset[str]:
    """Load the first `BANK_LIMIT` entries of a rank-ordered bank file.

    One token per line, UTF-8, most frequent first.  Duplicates collapse.
    Raises ``OSError`` for unreadable files and `LexiconFormatError` for
    non-UTF-8 content.
    """
    return frozenset(_read_tokens(path, limit=BANK_LIMIT))


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Load a stopword file (one token per line, UTF-8)."""
    return frozenset(_read_tokens(path))


def _packaged(name: str) -> Path:
    return Path(resources.files("alt_readability").joinpath("data", name))  # type: ignore[arg-type]


def resolve_wordbank_path(explicit: str | None = None) -> Path:
    """Explicit path > ALT_WORDBANK > ./data/wordbank-pt.txt > packaged file."""
    return _resolve(explicit, ENV_WORDBANK, _DEFAULT_WORDBANK)


def resolve_stopwords_path(explicit: str | None = None) -> Path:
    """Explicit path > ALT_STOPWORDS > ./data/stopwords-pt.txt > packaged file."""
    return _resolve(explicit, ENV_STOPWORDS, _DEFAULT_STOPWORDS)


def _resolve(explicit: str | None, env_var: str, name: str) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(env_var)
    if env:
        return Path(env)
    local = Path("data") / name
    if local.is_file():
        return local
    return _packaged(name)


def load_lexicon(
    wordbank: str | Path | None = None,
    stopwords: str | Path | None = None,
) -> Lexicon:
    """Build a `Lexicon` from the resolved data files."""
    bank_path = resolve_wordbank_path(str(wordbank) if wordbank else None)
    stop_path = resolve_stopwords_path(str(stopwords) if stopwords else None)
    return Lexicon(
        common_words=load_word_bank(bank_path),
        stopwords=load_stopwords(stop_path),
        source=f"{bank_path}",
    )
