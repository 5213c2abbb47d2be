/**
 * Display formatting. The service already rounds indices to one decimal
 * and ratios to three; these helpers render exactly those values so the
 * numbers on screen equal the JSON payload at the displayed precision.
 */

export function formatIndex(value: number): string {
  return value.toFixed(1);
}

export function formatRatio(value: number): string {
  return value.toFixed(3);
}

export function formatPercent(value: number): string {
  return `${(100 * value).toFixed(1)}%`;
}

export const BAND_LABEL: Record<string, string> = {
  alta: 'alta legibilidade',
  media: 'média legibilidade',
  baixa: 'baixa legibilidade',
};
