"""Command-line interface.

Thin layer over the library: every subcommand resolves its inputs, calls
the corresponding core function and formats the result.  ``analyze``
emits exactly the same JSON as the HTTP service.

Exit codes: 0 success, 2 no analyzable content, 1 IO/format errors.
"""

from __future__ import annotations

import csv
import io
import sys
from pathlib import Path

import click

from .calibration import fit_plane, mean_diff_band
from .errors import AltError, EmptyTextError
from .lexicon import Lexicon, load_lexicon
from .report import DEFAULT_TOP_N, ReadabilityReport, build_report, render_json

BAND_LABELS = {
    "alta": "alta legibilidade",
    "media": "média legibilidade",
    "baixa": "baixa legibilidade",
}

_lexicon_options = [
    click.option("--wordbank", type=click.Path(), default=None,
                 help="Frequency bank file (overrides ALT_WORDBANK)."),
    click.option("--stopwords", type=click.Path(), default=None,
                 help="Stopword file (overrides ALT_STOPWORDS)."),
]


def with_lexicon_options(command):
    for option in reversed(_lexicon_options):
        command = option(command)
    return command


def _load_lexicon(wordbank: str | None, stopwords: str | None) -> Lexicon:
    try:
        return load_lexicon(wordbank=wordbank, stopwords=stopwords)
    except (OSError, AltError) as exc:
        _fail(str(exc))


def _read_text(source: str) -> str:
    try:
        data = sys.stdin.buffer.read() if source == "-" else Path(source).read_bytes()
    except OSError as exc:
        _fail(str(exc))
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        _fail(f"{source}: input is not valid UTF-8")
    return text.removeprefix("﻿")


def _fail(message: str, code: int = 1):
    click.echo(f"alt: {message}", err=True)
    sys.exit(code)


@click.group()
def main():
    """Readability analysis for Portuguese text."""


@main.command()
@click.argument("source", default="-")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--keywords", default="", help="Comma-separated keywords to count.")
@click.option("--topn", default=DEFAULT_TOP_N, show_default=True,
              help="Word-cloud entries to keep.")
@click.option("--profile", type=click.Choice(["adapted", "original"]), default="adapted",
              help="'original' adds the original-coefficient indices to the report.")
@with_lexicon_options
def analyze(source, fmt, keywords, topn, profile, wordbank, stopwords):
    """Analyze a text file (or stdin with '-') and print the report."""
    lexicon = _load_lexicon(wordbank, stopwords)
    text = _read_text(source)
    keyword_list = [k.strip() for k in keywords.split(",") if k.strip()]
    try:
        report = build_report(
            text, lexicon,
            keywords=keyword_list,
            top_n=topn,
            include_original=profile == "original",
        )
    except EmptyTextError:
        _fail("no analyzable content", code=2)
    if fmt == "json":
        click.echo(render_json(report))
    else:
        click.echo(_text_report(report))


def _text_report(report: ReadabilityReport) -> str:
    stats, idx = report.stats, report.indices
    out = io.StringIO()
    put = lambda line="": print(line, file=out)
    put(f"Resultado: {idx.final_display} ({BAND_LABELS[idx.band]})")
    put()
    put("Índices (adaptados)")
    rows = [
        ("Flesch", idx.flesch), ("Gulpease", idx.gulpease),
        ("Flesch-Kincaid", idx.flesch_kincaid), ("Gunning fog", idx.gunning_fog),
        ("ARI", idx.ari), ("Coleman-Liau", idx.coleman_liau),
    ]
    for name, value in rows:
        put(f"  {name:<16} {value:6.1f}")
    if report.original_indices is not None:
        orig = report.original_indices
        put("Índices (originais)")
        for name, value in [
            ("Flesch", orig.flesch), ("Gulpease", orig.gulpease),
            ("Flesch-Kincaid", orig.flesch_kincaid), ("Gunning fog", orig.gunning_fog),
            ("ARI", orig.ari), ("Coleman-Liau", orig.coleman_liau),
        ]:
            put(f"  {name:<16} {value:6.1f}")
    put()
    put("Variáveis")
    put(f"  Letras               {stats.letters}")
    put(f"  Sílabas              {stats.syllables}")
    put(f"  Palavras             {stats.words}")
    put(f"  Sentenças            {stats.sentences}")
    put(f"  Palavras complexas   {stats.complex_words}")
    put(f"  Letras/palavra       {stats.letters_per_word:.3f}")
    put(f"  Sílabas/palavra      {stats.syllables_per_word:.3f}")
    put(f"  Palavras/sentença    {stats.words_per_sentence:.3f}")
    if report.keywords:
        put()
        put("Palavras-chave")
        for entry in report.keywords:
            put(f"  {entry.token:<20} {entry.absolute:>5}  {entry.relative:.3f}")
    if report.suggestions:
        put()
        counts = {}
        for span in report.suggestions:
            counts[span.kind] = counts.get(span.kind, 0) + 1
        put("Sugestões")
        labels = {
            "longSentence": "sentenças longas (30-45 palavras)",
            "veryLongSentence": "sentenças muito longas (>45 palavras)",
            "complexWord": "palavras complexas",
        }
        for kind, label in labels.items():
            if kind in counts:
                put(f"  {counts[kind]:>4}  {label}")
    for note in report.notes:
        put()
        put(f"Nota: {note}")
    return out.getvalue().rstrip("\n")


def _read_csv(source: str) -> list[dict]:
    try:
        raw = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(str(exc))
    except UnicodeDecodeError:
        _fail(f"{source}: input is not valid UTF-8")
    rows = list(csv.DictReader(io.StringIO(raw.removeprefix("﻿"))))
    if not rows:
        _fail(f"{source}: empty CSV")
    return rows


@main.command()
@click.argument("source", default="-")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def calibrate(source, fmt):
    """Fit gl = C1 + C2*x + C3*y over a CSV with columns x,y,gl."""
    rows = _read_csv(source)
    try:
        sample = [(float(r["x"]), float(r["y"]), float(r["gl"])) for r in rows]
    except (KeyError, TypeError, ValueError):
        _fail(f"{source}: expected numeric CSV columns x,y,gl")
    try:
        fit = fit_plane(sample)
    except AltError as exc:
        _fail(str(exc))
    if fmt == "json":
        import json
        click.echo(json.dumps({
            "r2": fit.r2,
            "coefficients": list(fit.coefficients),
            "standardErrors": list(fit.standard_errors),
            "pValues": list(fit.p_values),
        }, indent=2))
        return
    click.echo(f"R² = {fit.r2:.6f}")
    click.echo()
    click.echo(f"{'':<4}{'Reference':<22}{'Value':>14}{'Std. error':>14}{'p-value':>10}")
    refs = ("Intercept", "x", "y")
    for i, (coef, se, p, ref) in enumerate(
        zip(fit.coefficients, fit.standard_errors, fit.p_values, refs), start=1
    ):
        click.echo(f"C{i:<3}{ref:<22}{coef:>14.6f}{se:>14.6f}{p:>10.5f}")


@main.command()
@click.argument("source", default="-")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def compare(source, fmt):
    """Correlation/mean-difference table over a CSV with id,metric,alt,ref."""
    rows = _read_csv(source)
    series: dict[str, tuple[list[float], list[float]]] = {}
    try:
        for row in rows:
            ours, reference = series.setdefault(row["metric"], ([], []))
            ours.append(float(row["alt"]))
            reference.append(float(row["ref"]))
    except (KeyError, TypeError, ValueError):
        _fail(f"{source}: expected CSV columns id,metric,alt,ref")
    results = {}
    for metric, (ours, reference) in series.items():
        try:
            results[metric] = mean_diff_band(ours, reference)
        except AltError as exc:
            _fail(f"{metric}: {exc}")
    if fmt == "json":
        import json
        click.echo(json.dumps({
            metric: {
                "pearson": stats.pearson,
                "meanDiff": stats.mean_diff,
                "halfWidth": stats.half_width,
            }
            for metric, stats in results.items()
        }, indent=2))
        return
    click.echo(f"{'Metric':<16}{'Correlation':>12}  {'Mean difference':>18}")
    for metric, stats in results.items():
        corr = f"{100 * stats.pearson:.1f}%" if stats.pearson is not None else "n/a"
        diff = f"{stats.mean_diff:.1f} ± {stats.half_width:.1f}"
        click.echo(f"{metric:<16}{corr:>12}  {diff:>18}")


@main.command()
@click.argument("source", default="-")
@click.option("--topn", default=DEFAULT_TOP_N, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@with_lexicon_options
def cloud(source, topn, fmt, wordbank, stopwords):
    """Word-cloud frequencies of a text (stopwords removed)."""
    from .content import cloud_frequencies

    lexicon = _load_lexicon(wordbank, stopwords)
    text = _read_text(source)
    entries = cloud_frequencies(text, lexicon, topn)
    if fmt == "json":
        import json
        click.echo(json.dumps(
            [{"token": e.token, "absolute": e.absolute, "relative": round(e.relative, 3)}
             for e in entries],
            ensure_ascii=False, indent=2,
        ))
        return
    for entry in entries:
        click.echo(f"{entry.token:<24} {entry.absolute:>6}  {entry.relative:.3f}")


@main.command()
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--cors-origin", default="*", show_default=True,
              help="Origin allowed to call the service from a browser.")
@with_lexicon_options
def serve(port, host, cors_origin, wordbank, stopwords):
    """Run the HTTP/JSON service."""
    import uvicorn

    from .service import create_app

    lexicon = _load_lexicon(wordbank, stopwords)
    uvicorn.run(create_app(lexicon, cors_origin=cors_origin), host=host, port=port)


if __name__ == "__main__":
    main()
