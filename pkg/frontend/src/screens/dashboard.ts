import { recommendationBanner } from '../banner.js';
import { formatSix, formatWeight } from '../format.js';
import { gaugeMarkup } from '../gauge.js';
import type { ResultDoc, SensitivityDoc, SessionDoc } from '../types.js';
import { weightRows } from '../weights.js';

export interface DashboardView {
  session: SessionDoc;
  result: ResultDoc;
  sensitivity?: SensitivityDoc | null;
}

function escapeHtml(value: string): string {
  return value
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

/** Render the top strip shared by Dashboard and WhatIf. */
export function resultStripMarkup(result: ResultDoc): string {
  const banner = recommendationBanner(result);
  return `
    ${gaugeMarkup(result.dec, banner.severity)}
    <div class="banner banner-${banner.severity}" data-role="banner"
         data-severity="${banner.severity}">${escapeHtml(banner.label)}</div>
    <dl class="readouts">
      <dt>OSR</dt><dd data-role="osr">${formatSix(result.osr)}</dd>
      <dt>MAF</dt><dd data-role="maf">${formatSix(result.maf)}</dd>
      <dt>DEC</dt><dd data-role="dec">${formatSix(result.dec)}</dd>
    </dl>`;
}

export function renderDashboard(container: HTMLElement, view: DashboardView): void {
  const { session, result, sensitivity } = view;
  const rows = weightRows(session)
    .map(
      (row) => `
        <tr>
          <td>${row.factorId}</td>
          <td class="num">${formatWeight(row.weight)}</td>
          <td><span class="tag tag-${row.provenance}">${row.provenance}</span></td>
        </tr>`,
    )
    .join('');
  const warnings =
    result.warnings.length > 0
      ? `<section class="warnings" data-role="warnings">
           <h3>Warnings</h3>
           <ul>${result.warnings.map((w) => `<li>${escapeHtml(w)}</li>`).join('')}</ul>
         </section>`
      : '';
  const tornado =
    sensitivity && sensitivity.tornado.length > 0
      ? `<section class="tornado">
           <h3>Most influential factors</h3>
           <ul data-role="tornado">
             ${sensitivity.tornado
               .slice(0, 5)
               .map(
                 (t) => `
                   <li>
                     <span>${t.factor_id}</span>
                     <span class="bar"><span class="bar-fill"
                       style="width: ${Math.round(Math.abs(t.swing) * 100)}%"></span></span>
                     <span class="num">${t.swing.toFixed(4)}</span>
                   </li>`,
               )
               .join('')}
           </ul>
           ${
             sensitivity.threshold_ava !== null
               ? `<p data-role="threshold-ava">DEC crosses the threshold at
                  AVA ${sensitivity.threshold_ava.toFixed(4)}</p>`
               : '<p data-role="threshold-ava">No attitude value crosses the threshold.</p>'
           }
         </section>`
      : '';
  container.innerHTML = `
    <section class="result-strip">${resultStripMarkup(result)}</section>
    ${warnings}
    <section class="weight-table">
      <h3>Resolved weights</h3>
      <table data-role="weights">
        <thead><tr><th>Factor</th><th>Weight</th><th>Provenance</th></tr></thead>
        <tbody>${rows}</tbody>
      </table>
    </section>
    ${tornado}`;
}
