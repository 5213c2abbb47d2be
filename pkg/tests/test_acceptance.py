"""Acceptance suite: the exit criteria of the build, at fixed tolerances.

Each test prints a PASS/FAIL line (run with ``pytest -s`` to see them on
success).  Tolerances are pinned here and nowhere else.
"""

import csv
import json
import random
import time

import numpy as np
from click.testing import CliRunner

from alt_readability import build_report, fit_plane
from alt_readability.cli import main as cli_main
from alt_readability.metrics import (
    ADAPTED_PROFILE,
    ARI,
    COLEMAN_LIAU,
    FLESCH,
    FLESCH_KINCAID,
    GUNNING_FOG,
    ORIGINAL_PROFILE,
    convert_flesch_to_grade,
    eval_formula,
)
from alt_readability.tokenizer import (
    count_letters,
    count_sentences,
    count_syllables,
    count_words,
)
from tests.conftest import FIXTURES, TEST_DATA
from tests.test_metrics import make_stats


def _verdict(name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"acceptance criterion failed: {name}"


def test_tractatus_golden(lexicon, tractatus_text):
    started = time.perf_counter()
    report = build_report(tractatus_text, lexicon)
    elapsed = time.perf_counter() - started

    stats, idx = report.stats, report.indices
    checks = {
        "letters/word 4.3±0.2": abs(stats.letters_per_word - 4.3) <= 0.2,
        "syllables/word 1.9±0.1": abs(stats.syllables_per_word - 1.9) <= 0.1,
        "words/sentence 10.3±1.0": abs(stats.words_per_sentence - 10.3) <= 1.0,
        "complex ratio 0.08±0.03": abs(stats.complex_word_ratio - 0.08) <= 0.03,
        "FK 5.5±0.5": abs(idx.flesch_kincaid - 5.5) <= 0.5,
        "ARI 4.3±0.5": abs(idx.ari - 4.3) <= 0.5,
        "CL 7.2±0.5": abs(idx.coleman_liau - 7.2) <= 0.5,
        "GF 6.6±1.5": abs(idx.gunning_fog - 6.6) <= 1.5,
        "display 6±1": abs(idx.final_display - 6) <= 1,
        "band alta": idx.band == "alta",
        "runtime < 1s": elapsed < 1.0,
    }
    for name, ok in sorted(checks.items()):
        if not ok:
            print(f"  failed sub-check: {name}")
    _verdict("tractatus golden test", all(checks.values()))


def test_appendix_comparison_reproduction():
    result = CliRunner().invoke(
        cli_main, ["compare", str(FIXTURES / "appendix_b.csv"), "--format", "json"]
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)

    reference = {  # correlation %, mean difference, 2-sigma half width
        "FK": (98.0, 0.7, 1.8),
        "GF": (91.3, -0.4, 4.2),
        "ARI": (97.9, 0.7, 2.0),
        "CL": (95.3, -0.4, 1.6),
        "RF": (97.2, 0.6, 2.0),
    }
    ok = True
    for metric, (corr_pct, mean_diff, half_width) in reference.items():
        got = payload[metric]
        checks = [
            abs(100 * got["pearson"] - corr_pct) <= 0.5,
            abs(got["meanDiff"] - mean_diff) <= 0.1,
            abs(got["halfWidth"] - half_width) <= 0.2,
        ]
        if not all(checks):
            print(f"  {metric}: got {got}, want ~({corr_pct}%, {mean_diff}, {half_width})")
            ok = False
    _verdict("evaluation-table reproduction via `alt compare`", ok)


def test_regression_oracle_equivalence():
    rng = random.Random(424242)
    ok = True
    for _ in range(100):
        rows = []
        for _ in range(50):
            x = rng.uniform(2, 40)
            y = rng.uniform(1, 3)
            gl = rng.uniform(-5, 5) + 0.45 * x + 9.0 * y + rng.gauss(0, 2.0)
            rows.append((x, y, gl))
        fit = fit_plane(rows)
        a = np.array([[1.0, x, y] for x, y, _ in rows])
        b = np.array([gl for _, _, gl in rows])
        oracle = np.linalg.inv(a.T @ a) @ (a.T @ b)
        if not np.allclose(fit.coefficients, oracle, rtol=0, atol=1e-8):
            ok = False
            break

    exact = fit_plane([(x, y, 2 + 3 * x + 4 * y) for x in (0.0, 1.0) for y in (0.0, 1.0)])
    ok = ok and abs(exact.r2 - 1.0) <= 1e-12
    _verdict("regression oracle equivalence (100 samples, 1e-8)", ok)


def test_formula_arithmetic_suite():
    stats = make_stats(
        words_per_sentence=10.3,
        syllables_per_word=1.9,
        letters_per_word=4.3,
        complex_ratio=0.08,
    )
    expected = {
        FLESCH: 79.49,
        FLESCH_KINCAID: 5.47,
        ARI: 4.31,
        COLEMAN_LIAU: 7.18,
        GUNNING_FOG: 6.57,
    }
    ok = all(
        abs(eval_formula(ADAPTED_PROFILE, fid, stats) - value) <= 1e-2
        for fid, value in expected.items()
    )

    rng = random.Random(99)
    for _ in range(500):
        ws = rng.uniform(1.0, 40.0)
        syw = rng.uniform(1.0, 2.0)
        s = make_stats(words_per_sentence=ws, syllables_per_word=syw)
        flesch = eval_formula(ORIGINAL_PROFILE, FLESCH, s)
        direct = eval_formula(ORIGINAL_PROFILE, FLESCH_KINCAID, s)
        if abs(convert_flesch_to_grade(flesch, syw) - direct) > 1e-2:
            ok = False
            break
    _verdict("formula arithmetic suite (1e-2)", ok)


def test_syllable_accuracy():
    with open(TEST_DATA / "syllable_reference.csv", encoding="utf-8") as fh:
        rows = [(r["word"], int(r["syllables"])) for r in csv.DictReader(fh)]
    assert len(rows) >= 200
    exact = sum(1 for word, true_count in rows if count_syllables(word) == true_count)
    accuracy = exact / len(rows)
    print(f"  syllable accuracy: {exact}/{len(rows)} = {100 * accuracy:.1f}%")
    _verdict("syllable accuracy >= 90% on curated list", accuracy >= 0.90)


def test_tokenizer_property_suite():
    hand_traces = [
        (count_letters, "pau-brasil", 10),
        (count_letters, "Este relatório apresenta", 22),
        (count_words, "O mundo é tudo o que ocorre.", 7),
        (count_words, "a\nb\nc", 3),
        (count_words, "guarda-chuva", 1),
        (count_sentences, "Sim! Não? Talvez; fim.", 4),
        (count_sentences, "Fim...", 1),
        (count_syllables, "texto", 2),
        (count_syllables, "quando", 2),
        (count_syllables, "água", 2),
        (count_syllables, "uruguaio", 4),
    ]
    ok = all(fn(text) == expected for fn, text, expected in hand_traces)

    rng = random.Random(5)
    alphabet = "abcdeilmnorstuáéíãõç .,!?;-\n"
    for _ in range(300):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 90)))
        counters = (count_letters, count_words, count_sentences, count_syllables)
        # idempotence
        if [f(text) for f in counters] != [f(text) for f in counters]:
            ok = False
        # case invariance
        if [f(text.upper()) for f in counters] != [f(text) for f in counters]:
            ok = False
        # additivity for mark-terminated halves
        a = text.strip(" \n-") + "."
        b = "fim."
        joined = a + " " + b
        if any(f(joined) != f(a) + f(b) for f in counters):
            ok = False
        # whitespace robustness
        squeezed = " ".join(p for p in text.split(" ") if p)
        padded = "   ".join(p for p in text.split(" ") if p)
        if count_words(padded) != count_words(squeezed):
            ok = False
        if not ok:
            print(f"  property failed for: {text!r}")
            break
    _verdict("tokenizer property suite", ok)
