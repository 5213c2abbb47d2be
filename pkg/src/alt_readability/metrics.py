"""Readability formulas, score aggregation and classification.

Every formula is a plane ``c1 + c2*x + c3*y`` over two ratio variables of
the text.  Two coefficient profiles exist:

* ``original``: the classical English/Italian coefficients;
* ``adapted-pt``: coefficients refitted for Portuguese text.

Four formulas operate on the grade-level scale (years of schooling) and
their arithmetic mean is the final result, classified into three bands:
below 13 high readability ("alta"), 13 to below 17 medium ("media"),
17 and above low ("baixa").  The Flesch and Gulpease scores use the
0-100 scale instead and never enter the final mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import UnknownFormulaError
from .tokenizer import TextStats


class Variable(Enum):
    """Ratio variables a formula can consume."""

    WORDS_PER_SENTENCE = "words_per_sentence"
    SYLLABLES_PER_WORD = "syllables_per_word"
    LETTERS_PER_WORD = "letters_per_word"
    SENTENCES_PER_WORD = "sentences_per_word"
    COMPLEX_PER_WORD = "complex_per_word"
    POLYSYLLABLES_PER_WORD = "polysyllables_per_word"


def _value(stats: TextStats, var: Variable) -> float:
    if var is Variable.WORDS_PER_SENTENCE:
        return stats.words_per_sentence
    if var is Variable.SYLLABLES_PER_WORD:
        return stats.syllables_per_word
    if var is Variable.LETTERS_PER_WORD:
        return stats.letters_per_word
    if var is Variable.SENTENCES_PER_WORD:
        return stats.sentences_per_word
    if var is Variable.COMPLEX_PER_WORD:
        return stats.complex_word_ratio
    return stats.polysyllables / stats.words


@dataclass(frozen=True)
class Formula:
    """One plane: intercept plus two weighted ratio variables."""

    c1: float
    c2: float
    x: Variable
    c3: float
    y: Variable

    def evaluate(self, stats: TextStats) -> float:
        return self.c1 + self.c2 * _value(stats, self.x) + self.c3 * _value(stats, self.y)


FLESCH = "flesch"
GULPEASE = "gulpease"
FLESCH_KINCAID = "fleschKincaid"
GUNNING_FOG = "gunningFog"
ARI = "ari"
COLEMAN_LIAU = "colemanLiau"

FORMULA_IDS = (FLESCH, GULPEASE, FLESCH_KINCAID, GUNNING_FOG, ARI, COLEMAN_LIAU)

# Grade-level formulas averaged into the final result.
GRADE_LEVEL_IDS = (FLESCH_KINCAID, GUNNING_FOG, ARI, COLEMAN_LIAU)

_W_S = Variable.WORDS_PER_SENTENCE
_SY_W = Variable.SYLLABLES_PER_WORD
_LE_W = Variable.LETTERS_PER_WORD
_SE_W = Variable.SENTENCES_PER_WORD

_GULPEASE_FORMULA = Formula(89.0, 300.0, _SE_W, -10.0, _LE_W)

ORIGINAL_PROFILE: dict[str, Formula] = {
    FLESCH: Formula(206.835, -1.015, _W_S, -84.6, _SY_W),
    GUNNING_FOG: Formula(0.0, 0.4, _W_S, 40.0, Variable.POLYSYLLABLES_PER_WORD),
    ARI: Formula(-21.43, 0.50, _W_S, 4.71, _LE_W),
    FLESCH_KINCAID: Formula(-15.59, 0.39, _W_S, 11.8, _SY_W),
    COLEMAN_LIAU: Formula(-15.8, 5.88, _LE_W, -2.96, _SE_W),
    GULPEASE: _GULPEASE_FORMULA,
}

ADAPTED_PROFILE: dict[str, Formula] = {
    FLESCH: Formula(227.0, -1.04, _W_S, -72.0, _SY_W),
    GUNNING_FOG: Formula(0.0, 0.49, _W_S, 19.0, Variable.COMPLEX_PER_WORD),
    ARI: Formula(-20.0, 0.44, _W_S, 4.6, _LE_W),
    FLESCH_KINCAID: Formula(-18.0, 0.36, _W_S, 10.4, _SY_W),
    COLEMAN_LIAU: Formula(-14.0, 5.4, _LE_W, -21.0, _SE_W),
    GULPEASE: _GULPEASE_FORMULA,
}

PROFILES: dict[str, dict[str, Formula]] = {
    "original": ORIGINAL_PROFILE,
    "adapted": ADAPTED_PROFILE,
}

BAND_HIGH = "alta"
BAND_MEDIUM = "media"
BAND_LOW = "baixa"

MEDIUM_THRESHOLD = 13.0
LOW_THRESHOLD = 17.0


def eval_formula(profile: dict[str, Formula], formula_id: str, stats: TextStats) -> float:
    """Evaluate one formula of a profile; raises `UnknownFormulaError`."""
    try:
        formula = profile[formula_id]
    except KeyError:
        raise UnknownFormulaError(formula_id) from None
    return formula.evaluate(stats)


def convert_flesch_to_grade(flesch_score: float, syllables_per_word: float) -> float:
    """Map a 0-100 Flesch score onto the grade-level scale."""
    return 63.88 - 0.38424 * flesch_score - 20.7 * syllables_per_word


def round_half_up(value: float) -> int:
    """Round to the nearest integer, halves upward (5.5 -> 6)."""
    return math.floor(value + 0.5)


def classify(final_raw: float) -> str:
    """Readability band of a final grade-level score."""
    if final_raw < MEDIUM_THRESHOLD:
        return BAND_HIGH
    if final_raw < LOW_THRESHOLD:
        return BAND_MEDIUM
    return BAND_LOW


@dataclass(frozen=True)
class IndexSet:
    """All six indices plus the aggregated final result."""

    flesch: float
    gulpease: float
    flesch_kincaid: float
    gunning_fog: float
    ari: float
    coleman_liau: float
    final_raw: float
    final_display: int
    band: str


def compute_index_set(stats: TextStats, profile: dict[str, Formula]) -> IndexSet:
    """Evaluate every formula of *profile* and aggregate the final result."""
    scores = {fid: eval_formula(profile, fid, stats) for fid in FORMULA_IDS}
    final_raw = sum(scores[fid] for fid in GRADE_LEVEL_IDS) / 4.0
    return IndexSet(
        flesch=scores[FLESCH],
        gulpease=scores[GULPEASE],
        flesch_kincaid=scores[FLESCH_KINCAID],
        gunning_fog=scores[GUNNING_FOG],
        ari=scores[ARI],
        coleman_liau=scores[COLEMAN_LIAU],
        final_raw=final_raw,
        final_display=round_half_up(final_raw),
        band=classify(final_raw),
    )
