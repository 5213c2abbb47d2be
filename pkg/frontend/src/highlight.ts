/**
 * Turns report spans into a flat list of styled text segments.
 *
 * Span offsets are Unicode codepoint indices, so all slicing here works
 * on a codepoint array, never on raw UTF-16 positions.  Sentence spans
 * (yellow/red backgrounds) never overlap each other; complex-word spans
 * may sit inside a sentence span, in which case the segment carries both
 * classes (word color over sentence background).
 */

import type { ReportSpan, SpanKind } from './api.js';

export interface Segment {
  /** codepoint offsets into the analyzed text */
  start: number;
  end: number;
  text: string;
  kinds: SpanKind[];
}

export const KIND_CLASS: Record<SpanKind, string> = {
  longSentence: 'hl-long',
  veryLongSentence: 'hl-very-long',
  complexWord: 'hl-complex',
};

const KIND_ORDER: SpanKind[] = ['longSentence', 'veryLongSentence', 'complexWord'];

/** Split text into contiguous segments, each tagged with covering spans. */
export function segmentText(text: string, spans: ReportSpan[]): Segment[] {
  const codepoints = Array.from(text);
  const boundaries = new Set<number>([0, codepoints.length]);
  for (const span of spans) {
    boundaries.add(Math.max(0, Math.min(span.start, codepoints.length)));
    boundaries.add(Math.max(0, Math.min(span.end, codepoints.length)));
  }
  const cuts = Array.from(boundaries).sort((a, b) => a - b);

  const segments: Segment[] = [];
  for (let i = 0; i + 1 < cuts.length; i += 1) {
    const [start, end] = [cuts[i], cuts[i + 1]];
    if (start === end) continue;
    const kinds = KIND_ORDER.filter((kind) =>
      spans.some((s) => s.kind === kind && s.start <= start && end <= s.end),
    );
    segments.push({ start, end, text: codepoints.slice(start, end).join(''), kinds });
  }
  return segments;
}

/** Ranges covered by a given kind, reassembled from segments. */
export function coveredRanges(segments: Segment[], kind: SpanKind): Array<[number, number]> {
  const ranges: Array<[number, number]> = [];
  for (const segment of segments) {
    if (!segment.kinds.includes(kind)) continue;
    const last = ranges[ranges.length - 1];
    if (last && last[1] === segment.start) {
      last[1] = segment.end;
    } else {
      ranges.push([segment.start, segment.end]);
    }
  }
  return ranges;
}

/** Render segments as HTML for the editor backdrop. */
export function segmentsToHtml(segments: Segment[]): string {
  return segments
    .map((segment) => {
      const escaped = escapeHtml(segment.text);
      if (segment.kinds.length === 0) return escaped;
      const classes = segment.kinds.map((kind) => KIND_CLASS[kind]).join(' ');
      return `<mark class="${classes}">${escaped}</mark>`;
    })
    .join('');
}

function escapeHtml(raw: string): string {
  return raw
    .replaceAll('&', '&amp;')
    .replaceAll('<', '&lt;')
    .replaceAll('>', '&gt;');
}
