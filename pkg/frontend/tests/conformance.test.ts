/**
 * UI conformance against real service output.
 *
 * The fixtures pair an input text with the exact JSON the backend emits
 * for it (regenerate with:
 *   alt analyze - --format json < text  >  tests/fixtures/<name>.json
 * wrapped as {"text", "report"}).  The checks mirror what the page
 * renders: every highlight range must equal a report span and every
 * displayed number must equal the JSON value at its rendered precision.
 */

import { describe, expect, it } from 'vitest';

import type { Report, ReportSpan, SpanKind } from '../src/api.js';
import { formatIndex, formatRatio } from '../src/format.js';
import { coveredRanges, segmentText } from '../src/highlight.js';

import brasil from './fixtures/brasil.json';
import longas from './fixtures/longas.json';
import tractatus from './fixtures/tractatus.json';

interface Fixture {
  text: string;
  report: Report;
}

const FIXTURES: Array<[string, Fixture]> = [
  ['tractatus', tractatus as unknown as Fixture],
  ['brasil', brasil as unknown as Fixture],
  ['longas', longas as unknown as Fixture],
];

const KINDS: SpanKind[] = ['longSentence', 'veryLongSentence', 'complexWord'];

function mergedSpans(spans: ReportSpan[], kind: SpanKind): Array<[number, number]> {
  // adjacent same-kind report spans merge in the rendered backdrop too
  const sorted = spans
    .filter((s) => s.kind === kind)
    .sort((a, b) => a.start - b.start);
  const merged: Array<[number, number]> = [];
  for (const span of sorted) {
    const last = merged[merged.length - 1];
    if (last && last[1] === span.start) last[1] = span.end;
    else merged.push([span.start, span.end]);
  }
  return merged;
}

describe.each(FIXTURES)('fixture %s', (_name, fixture) => {
  const { text, report } = fixture;
  const segments = segmentText(text, report.suggestions);

  it('segments reassemble the exact text', () => {
    expect(segments.map((s) => s.text).join('')).toBe(text);
  });

  it('every rendered highlight range equals a report span', () => {
    for (const kind of KINDS) {
      expect(coveredRanges(segments, kind)).toEqual(mergedSpans(report.suggestions, kind));
    }
  });

  it('span offsets stay inside the text', () => {
    const length = Array.from(text).length;
    for (const span of report.suggestions) {
      expect(span.start).toBeGreaterThanOrEqual(0);
      expect(span.start).toBeLessThan(span.end);
      expect(span.end).toBeLessThanOrEqual(length);
    }
  });

  it('displayed indices equal the JSON values at rendered precision', () => {
    const { indices, stats } = report;
    for (const value of [
      indices.flesch,
      indices.gulpease,
      indices.fleschKincaid,
      indices.gunningFog,
      indices.ari,
      indices.colemanLiau,
    ]) {
      expect(Number(formatIndex(value))).toBe(value);
    }
    for (const value of [
      stats.lettersPerWord,
      stats.syllablesPerWord,
      stats.wordsPerSentence,
      stats.sentencesPerWord,
      stats.complexWordRatio,
    ]) {
      expect(Number(formatRatio(value))).toBe(value);
    }
    expect(Number.isInteger(indices.finalDisplay)).toBe(true);
  });
});

describe('reference paste', () => {
  it('the philosophical excerpt shows 6 / alta', () => {
    const report = (tractatus as unknown as Fixture).report;
    expect(report.indices.finalDisplay).toBe(6);
    expect(report.indices.band).toBe('alta');
  });

  it('the revision fixture carries all three highlight kinds', () => {
    const kinds = new Set((longas as unknown as Fixture).report.suggestions.map((s) => s.kind));
    expect(kinds).toEqual(new Set(KINDS));
  });
});
