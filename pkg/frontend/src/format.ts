/** Display formatting. The UI never computes model values, only renders them. */

/** Clamp a control value into the unit interval. */
export function clamp01(value: number): number {
  if (Number.isNaN(value)) return 0;
  return Math.min(1, Math.max(0, value));
}

/** One-decimal percentage with round-half-up, e.g. 0.576583616 -> "57.7%". */
export function formatPercent(dec: number): string {
  const tenths = Math.round(dec * 1000) / 10;
  return `${tenths.toFixed(1)}%`;
}

/** Six-decimal fixed form used for OSR/MAF/DEC readouts. */
export function formatSix(value: number): string {
  return value.toFixed(6);
}

/** Compact weight display: trims trailing zeros, keeps at most 3 decimals. */
export function formatWeight(value: number): string {
  return String(Math.round(value * 1000) / 1000);
}
