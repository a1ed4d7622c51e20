import { clamp01, formatWeight } from '../format.js';
import { renderQuestion } from '../questions.js';
import type { SessionDoc } from '../types.js';
import { weightRows } from '../weights.js';

export interface GridContext {
  draft: SessionDoc;
  /** weight null means abstain: the (factor, problem) cell is cleared. */
  onCellChange(factorId: string, problemId: string, weight: number | null): void;
  onCommit(): void;
}

function cellValue(draft: SessionDoc, factorId: string, problemId: string): number | null {
  const response = draft.responses.find(
    (r) => r.factor_id === factorId && r.problem_id === problemId && !r.respondent_id,
  );
  return response ? response.weight : null;
}

function escapeAttr(value: string): string {
  return value.replace(/&/g, '&amp;').replace(/"/g, '&quot;').replace(/</g, '&lt;');
}

/** Problems-by-factors matrix of conditional questions with [0,1] inputs. */
export function renderGrid(container: HTMLElement, ctx: GridContext): void {
  const { draft } = ctx;
  if (draft.problems.length === 0) {
    container.innerHTML =
      '<p class="hint">Add project problems on the Setup screen first.</p>';
    return;
  }
  const preview = new Map(weightRows(draft).map((row) => [row.factorId, row]));
  const header = draft.problems.map((p) => `<th title="${escapeAttr(p.statement)}">${p.id}</th>`).join('');
  const body = draft.taxonomy.factors
    .map((factor) => {
      const cells = draft.problems
        .map((problem) => {
          const value = cellValue(draft, factor.id, problem.id);
          const question = renderQuestion(factor.description, problem.statement);
          return `
            <td>
              <input type="number" min="0" max="1" step="0.05"
                     value="${value ?? ''}" placeholder="–"
                     title="${escapeAttr(question)}"
                     data-role="grid-cell" data-factor="${factor.id}"
                     data-problem="${problem.id}">
            </td>`;
        })
        .join('');
      const row = preview.get(factor.id)!;
      return `
        <tr>
          <th class="factor" title="${escapeAttr(factor.description)}">${factor.id}</th>
          ${cells}
          <td class="num" data-role="grid-weight" data-factor="${factor.id}">
            ${formatWeight(row.weight)}
          </td>
          <td><span class="tag tag-${row.provenance}"
                data-role="grid-provenance" data-factor="${factor.id}">${row.provenance}</span></td>
        </tr>`;
    })
    .join('');
  container.innerHTML = `
    <p class="hint">Blank cells abstain; answered cells average into the factor weight.</p>
    <table class="grid">
      <thead><tr><th>Factor</th>${header}<th>Weight</th><th>Provenance</th></tr></thead>
      <tbody>${body}</tbody>
    </table>
    <button type="button" data-role="grid-commit">Commit responses</button>`;

  for (const input of container.querySelectorAll<HTMLInputElement>(
    '[data-role="grid-cell"]',
  )) {
    input.addEventListener('change', () => {
      const factorId = input.dataset.factor!;
      const problemId = input.dataset.problem!;
      if (input.value.trim() === '') {
        ctx.onCellChange(factorId, problemId, null);
        return;
      }
      const value = clamp01(Number(input.value));
      input.value = String(value);
      ctx.onCellChange(factorId, problemId, value);
    });
  }
  container
    .querySelector<HTMLButtonElement>('[data-role="grid-commit"]')!
    .addEventListener('click', () => ctx.onCommit());
}
