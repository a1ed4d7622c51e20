import { buildReportMarkdown } from '../report.js';
import type { ResultDoc, SessionDoc } from '../types.js';

export interface ReportContext {
  session: SessionDoc;
  result: ResultDoc;
}

/** Show the Markdown decision record and offer it as a download. */
export function renderReport(container: HTMLElement, ctx: ReportContext): void {
  const markdown = buildReportMarkdown(ctx.session, ctx.result);
  container.innerHTML = `
    <button type="button" data-role="report-download">Download Markdown</button>
    <pre class="report" data-role="report-text"></pre>`;
  container.querySelector<HTMLPreElement>('[data-role="report-text"]')!.textContent =
    markdown;
  container
    .querySelector<HTMLButtonElement>('[data-role="report-download"]')!
    .addEventListener('click', () => {
      const blob = new Blob([markdown], { type: 'text/markdown' });
      const url = URL.createObjectURL(blob);
      const anchor = document.createElement('a');
      anchor.href = url;
      anchor.download = `${ctx.session.id}-report.md`;
      anchor.click();
      URL.revokeObjectURL(url);
    });
}
