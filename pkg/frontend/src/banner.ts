import type { ResultDoc, Severity } from './types.js';

export interface Banner {
  label: string;
  severity: Severity;
}

/** Map a decision result onto the dashboard banner. Risky always wins. */
export function recommendationBanner(
  result: Pick<ResultDoc, 'recommendation' | 'borderline'>,
): Banner {
  if (result.recommendation === 'AgileRisky') {
    return { label: 'High risk — Agile not recommended', severity: 'danger' };
  }
  if (result.borderline) {
    return { label: 'Borderline — review weights', severity: 'warn' };
  }
  return { label: 'Agile viable', severity: 'ok' };
}
