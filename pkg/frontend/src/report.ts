import { formatSix, formatWeight } from './format.js';
import type { ResultDoc, SessionDoc } from './types.js';
import { weightRows } from './weights.js';

/**
 * Markdown decision record assembled from served documents. All model
 * numbers come from the ResultDoc; the weight table mirrors the grid's
 * display resolution.
 */
export function buildReportMarkdown(session: SessionDoc, result: ResultDoc): string {
  const lines: string[] = [];
  const title = session.title || session.id;
  lines.push(`# Assessment report: ${title}`);
  lines.push('');
  lines.push(`- Session: \`${session.id}\` (revision ${session.revision})`);
  lines.push(`- Agile candidate: ${session.agile_candidate ?? 'not recorded'}`);
  lines.push(`- Non-Agile candidate: ${session.non_agile_candidate ?? 'not recorded'}`);
  lines.push('');
  lines.push('## Problems');
  lines.push('');
  if (session.problems.length > 0) {
    for (const p of session.problems) lines.push(`- **${p.id}**: ${p.statement}`);
  } else {
    lines.push('- none recorded');
  }
  lines.push('');
  lines.push('## Weights');
  lines.push('');
  lines.push('| Factor | Weight | Provenance |');
  lines.push('| --- | ---: | --- |');
  for (const row of weightRows(session)) {
    lines.push(`| ${row.factorId} | ${formatWeight(row.weight)} | ${row.provenance} |`);
  }
  lines.push('');
  lines.push('## Result');
  lines.push('');
  lines.push(`- OSR: ${formatSix(result.osr)}`);
  lines.push(`- MAF: ${formatSix(result.maf)}`);
  lines.push(`- DEC: ${formatSix(result.dec)} (${(result.dec * 100).toFixed(2)}%)`);
  lines.push(`- Recommendation: ${result.recommendation}`);
  const threshold = result.config_snapshot.threshold;
  if (result.recommendation === 'AgileRisky') {
    lines.push(
      `- DEC exceeds ${threshold}: adopting an Agile method is assessed as overly risky.`,
    );
  } else {
    lines.push(
      `- DEC does not exceed ${threshold}: adopting an Agile method is not assessed as overly risky.`,
    );
  }
  if (result.warnings.length > 0) {
    lines.push('');
    lines.push('## Warnings');
    lines.push('');
    for (const warning of result.warnings) lines.push(`- ${warning}`);
  }
  lines.push('');
  return lines.join('\n');
}
