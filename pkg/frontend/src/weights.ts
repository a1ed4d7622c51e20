import type { SessionDoc } from './types.js';

export type WeightProvenance = 'Aggregated' | 'Override' | 'NeutralDefault';

export interface WeightRow {
  factorId: string;
  weight: number;
  provenance: WeightProvenance;
}

/**
 * Preview of the per-factor weights the server will resolve, for the
 * grid/dashboard tables: an explicit override wins, otherwise the mean
 * of the factor's responses, otherwise the neutral 0.5 default. This is
 * display plumbing only; OSR/MAF/DEC always come from the service.
 */
export function weightRows(session: SessionDoc): WeightRow[] {
  const overrides = new Map(
    session.weight_overrides.map((o) => [o.factor_id, o.weight]),
  );
  const responses = new Map<string, number[]>();
  for (const r of session.responses) {
    const bucket = responses.get(r.factor_id);
    if (bucket) bucket.push(r.weight);
    else responses.set(r.factor_id, [r.weight]);
  }
  return session.taxonomy.factors.map((factor) => {
    const override = overrides.get(factor.id);
    if (override !== undefined) {
      return { factorId: factor.id, weight: override, provenance: 'Override' as const };
    }
    const bucket = responses.get(factor.id);
    if (bucket && bucket.length > 0) {
      const mean = bucket.reduce((a, b) => a + b, 0) / bucket.length;
      return { factorId: factor.id, weight: mean, provenance: 'Aggregated' as const };
    }
    return { factorId: factor.id, weight: 0.5, provenance: 'NeutralDefault' as const };
  });
}
