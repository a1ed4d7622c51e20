/** Wire types mirroring the service's JSON documents. */

export type Severity = 'ok' | 'warn' | 'danger';

export type Screen =
  | 'Setup'
  | 'QuestionGrid'
  | 'Attitudes'
  | 'Dashboard'
  | 'WhatIf'
  | 'Report';

export const SCREENS: Screen[] = [
  'Setup',
  'QuestionGrid',
  'Attitudes',
  'Dashboard',
  'WhatIf',
  'Report',
];

export type Recommendation = 'AgileViable' | 'AgileRisky';

export interface FactorDoc {
  id: string;
  description: string;
  category: string;
  intrinsic_risk: number;
  source: string | null;
}

export interface TaxonomyDoc {
  name: string;
  factors: FactorDoc[];
}

export interface ProblemDoc {
  id: string;
  statement: string;
}

export interface TeamMemberDoc {
  member_id: string;
  name: string;
  role: string;
}

export interface ResponseDoc {
  factor_id: string;
  problem_id: string;
  weight: number;
  respondent_id: string | null;
  note: string | null;
}

export interface OverrideDoc {
  factor_id: string;
  weight: number;
}

export interface AttitudeDoc {
  member_id: string;
  ava: number;
}

export interface ConfigDoc {
  log_base: number;
  threshold: number;
  borderline_margin: number;
  clamp_dec: boolean;
}

export interface ResultDoc {
  osr: number;
  maf: number;
  dec: number;
  recommendation: Recommendation;
  borderline: boolean;
  clamped: boolean;
  warnings: string[];
  config_snapshot: ConfigDoc;
  ephemeral?: boolean;
}

export interface SessionDoc {
  schema_version: number;
  id: string;
  title: string;
  created_at: string;
  updated_at: string;
  revision: number;
  taxonomy: TaxonomyDoc;
  problems: ProblemDoc[];
  team: TeamMemberDoc[];
  responses: ResponseDoc[];
  weight_overrides: OverrideDoc[];
  attitudes: AttitudeDoc[];
  ava_override: number | null;
  agile_candidate: string | null;
  non_agile_candidate: string | null;
  config: ConfigDoc;
  cached_result: ResultDoc | null;
}

export interface SessionSummaryDoc {
  id: string;
  title: string;
  revision: number;
  created_at: string;
  updated_at: string;
}

export interface GradientEntryDoc {
  factor_id: string;
  value: number;
}

export interface TornadoEntryDoc {
  factor_id: string;
  dec_at_w0: number;
  dec_at_w1: number;
  swing: number;
}

export interface SensitivityDoc {
  gradient: GradientEntryDoc[];
  tornado: TornadoEntryDoc[];
  threshold_ava: number | null;
  warnings: string[];
}

export interface ApiErrorDoc {
  status: number;
  code: string;
  message: string;
  details?: unknown;
}

export interface WhatIfOverrides {
  weights?: Record<string, number>;
  ava?: number;
}
