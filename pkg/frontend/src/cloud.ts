/**
 * Deterministic word-cloud layout.
 *
 * Font sizes scale linearly with absolute frequency between MIN_SIZE and
 * MAX_SIZE.  Words are placed on a seeded spiral walk, alternating
 * horizontal and vertical orientation, and a word is only committed when
 * its bounding box does not intersect any previous one.  The same seed
 * always yields the same layout.
 */

import type { FrequencyEntry } from './api.js';

export interface PlacedWord {
  token: string;
  x: number;
  y: number;
  size: number;
  horizontal: boolean;
  width: number;
  height: number;
}

export const MIN_SIZE = 14;
export const MAX_SIZE = 44;

/** Small deterministic PRNG (mulberry32). */
export function seededRandom(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/** Approximate glyph box: width tracks characters, height the font size. */
export function measure(token: string, size: number, horizontal: boolean) {
  const along = token.length * size * 0.62;
  const across = size * 1.15;
  return horizontal
    ? { width: along, height: across }
    : { width: across, height: along };
}

export function fontSize(absolute: number, min: number, max: number): number {
  if (max <= min) return MAX_SIZE;
  const ratio = (absolute - min) / (max - min);
  return Math.round(MIN_SIZE + ratio * (MAX_SIZE - MIN_SIZE));
}

function intersects(a: PlacedWord, b: PlacedWord): boolean {
  return !(
    a.x + a.width <= b.x ||
    b.x + b.width <= a.x ||
    a.y + a.height <= b.y ||
    b.y + b.height <= a.y
  );
}

/**
 * Place entries inside a width x height canvas. Entries that cannot be
 * placed without overlap are dropped (rare, only on tiny canvases).
 */
export function planCloud(
  entries: FrequencyEntry[],
  width: number,
  height: number,
  seed = 42,
): PlacedWord[] {
  if (entries.length === 0) return [];
  const random = seededRandom(seed);
  const counts = entries.map((e) => e.absolute);
  const minCount = Math.min(...counts);
  const maxCount = Math.max(...counts);

  const placed: PlacedWord[] = [];
  entries.forEach((entry, index) => {
    const size = fontSize(entry.absolute, minCount, maxCount);
    const horizontal = index % 3 !== 2 ? true : random() < 0.5 ? true : false;
    const box = measure(entry.token, size, horizontal);
    if (box.width > width || box.height > height) return;

    const cx = width / 2;
    const cy = height / 2;
    const angle0 = random() * 2 * Math.PI;
    for (let step = 0; step < 600; step += 1) {
      const radius = (step / 600) * Math.min(width, height) * 0.48;
      const angle = angle0 + step * 0.35;
      const x = cx + radius * Math.cos(angle) - box.width / 2;
      const y = cy + radius * Math.sin(angle) - box.height / 2;
      if (x < 0 || y < 0 || x + box.width > width || y + box.height > height) continue;
      const candidate: PlacedWord = {
        token: entry.token,
        x,
        y,
        size,
        horizontal,
        width: box.width,
        height: box.height,
      };
      if (placed.every((other) => !intersects(candidate, other))) {
        placed.push(candidate);
        return;
      }
    }
  });
  return placed;
}

/** True when any pair of placed words overlaps (used by tests). */
export function hasOverlaps(words: PlacedWord[]): boolean {
  for (let i = 0; i < words.length; i += 1) {
    for (let j = i + 1; j < words.length; j += 1) {
      if (intersects(words[i], words[j])) return true;
    }
  }
  return false;
}
