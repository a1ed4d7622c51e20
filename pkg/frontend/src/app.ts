import { ApiClient, ConflictError } from './api.js';
import { renderAttitudes } from './screens/attitudes.js';
import { renderDashboard } from './screens/dashboard.js';
import { renderGrid } from './screens/grid.js';
import { renderReport } from './screens/reportScreen.js';
import { renderSetup } from './screens/setup.js';
import { renderWhatIf } from './screens/whatifScreen.js';
import { UiSessionState } from './state.js';
import type { ResultDoc, Screen, SessionSummaryDoc } from './types.js';
import { SCREENS } from './types.js';
import { WhatIfController } from './whatif.js';

function defaultApiBase(): string {
  const fromQuery = new URLSearchParams(window.location.search).get('api');
  if (fromQuery) return fromQuery.replace(/\/$/, '');
  const stored = window.localStorage.getItem('wainge-api-base');
  if (stored) return stored;
  return 'http://127.0.0.1:8080';
}

export class App {
  readonly state = new UiSessionState();
  private api: ApiClient;
  private summaries: SessionSummaryDoc[] = [];
  private whatIfController: WhatIfController | null = null;

  constructor(
    private readonly root: HTMLElement,
    api?: ApiClient,
  ) {
    this.api = api ?? new ApiClient(defaultApiBase());
    this.state.subscribe(() => this.render());
  }

  async start(): Promise<void> {
    this.renderShell();
    try {
      this.summaries = await this.api.listSessions();
    } catch {
      this.setStatus('service unreachable; check the API base URL', 'danger');
    }
    this.render();
  }

  private renderShell(): void {
    this.root.innerHTML = `
      <header>
        <h1>wainge</h1>
        <nav data-role="nav"></nav>
        <div class="meta">
          <span data-role="revision"></span>
          <input type="text" size="28" title="API base URL" data-role="api-base"
                 value="${this.api.baseUrl}">
        </div>
      </header>
      <p class="status" data-role="status"></p>
      <main data-role="screen"></main>`;
    const apiInput = this.root.querySelector<HTMLInputElement>('[data-role="api-base"]')!;
    apiInput.addEventListener('change', () => {
      const base = apiInput.value.replace(/\/$/, '');
      window.localStorage.setItem('wainge-api-base', base);
      this.api = new ApiClient(base);
      void this.start();
    });
  }

  setStatus(text: string, severity: 'ok' | 'warn' | 'danger' = 'ok'): void {
    const status = this.root.querySelector<HTMLElement>('[data-role="status"]');
    if (status) {
      status.textContent = text;
      status.dataset.severity = severity;
    }
  }

  private renderNav(): void {
    const nav = this.root.querySelector<HTMLElement>('[data-role="nav"]');
    if (!nav) return;
    const hasSession = this.state.current !== null;
    nav.innerHTML = SCREENS.map((screen) => {
      const disabled = screen !== 'Setup' && !hasSession ? 'disabled' : '';
      const active = screen === this.state.screen ? 'class="active"' : '';
      return `<button type="button" ${active} ${disabled}
                data-role="nav-item" data-screen="${screen}">${screen}</button>`;
    }).join('');
    for (const button of nav.querySelectorAll<HTMLButtonElement>('[data-role="nav-item"]')) {
      button.addEventListener('click', () => {
        this.state.setScreen(button.dataset.screen as Screen);
      });
    }
    const revision = this.root.querySelector<HTMLElement>('[data-role="revision"]');
    if (revision) {
      revision.textContent = hasSession
        ? `${this.state.current!.title || this.state.current!.id} · revision ${this.state.lastRevision}`
        : 'no session loaded';
    }
  }

  private render(): void {
    this.renderNav();
    const screen = this.root.querySelector<HTMLElement>('[data-role="screen"]');
    if (!screen) return;
    void this.renderScreen(screen);
  }

  private async renderScreen(container: HTMLElement): Promise<void> {
    switch (this.state.screen) {
      case 'Setup':
        this.renderSetupScreen(container);
        return;
      case 'QuestionGrid':
        this.renderGridScreen(container);
        return;
      case 'Attitudes':
        this.renderAttitudesScreen(container);
        return;
      case 'Dashboard':
        await this.renderDashboardScreen(container);
        return;
      case 'WhatIf':
        await this.renderWhatIfScreen(container);
        return;
      case 'Report':
        await this.renderReportScreen(container);
        return;
    }
  }

  private renderSetupScreen(container: HTMLElement): void {
    renderSetup(container, {
      draft: this.state.draft,
      summaries: this.summaries,
      onCreate: (title) => void this.createSession(title),
      onLoad: (id) => void this.loadSession(id),
      onDraftChange: (mutate) => this.state.updateDraft(mutate),
      onCommit: () => void this.commitDraft('setup committed'),
    });
  }

  private renderGridScreen(container: HTMLElement): void {
    const draft = this.state.draft;
    if (!draft) return;
    renderGrid(container, {
      draft,
      onCellChange: (factorId, problemId, weight) =>
        this.state.updateDraft((d) => {
          d.responses = d.responses.filter(
            (r) =>
              !(r.factor_id === factorId && r.problem_id === problemId && !r.respondent_id),
          );
          if (weight !== null) {
            d.responses.push({
              factor_id: factorId,
              problem_id: problemId,
              weight,
              respondent_id: null,
              note: null,
            });
          }
        }),
      onCommit: () => void this.commitDraft('responses committed'),
    });
  }

  private renderAttitudesScreen(container: HTMLElement): void {
    const draft = this.state.draft;
    if (!draft) return;
    renderAttitudes(container, {
      draft,
      onAttitudeChange: (memberId, ava) =>
        this.state.updateDraft((d) => {
          d.attitudes = d.attitudes.filter((a) => a.member_id !== memberId);
          if (ava !== null) d.attitudes.push({ member_id: memberId, ava });
        }),
      onAvaOverrideChange: (value) =>
        this.state.updateDraft((d) => {
          d.ava_override = value;
        }),
      onCommit: () => void this.commitDraft('attitudes committed'),
    });
  }

  private async renderDashboardScreen(container: HTMLElement): Promise<void> {
    const session = this.state.current;
    if (!session) return;
    container.innerHTML = '<p class="hint">evaluating…</p>';
    try {
      const result = await this.api.getResult(session.id);
      let sensitivity = null;
      try {
        sensitivity = await this.api.getSensitivity(session.id);
      } catch {
        // sensitivity is best-effort on the dashboard
      }
      renderDashboard(container, { session, result, sensitivity });
    } catch (error) {
      container.innerHTML = `<p class="hint" data-role="dashboard-error">
        No result yet: ${error instanceof Error ? error.message : String(error)}.
        Record attitudes (or a negotiated AVA) first.</p>`;
    }
  }

  private async renderWhatIfScreen(container: HTMLElement): Promise<void> {
    const session = this.state.current;
    if (!session) return;
    container.innerHTML = '<p class="hint">evaluating…</p>';
    let baseResult: ResultDoc;
    try {
      baseResult = await this.api.getResult(session.id);
    } catch (error) {
      container.innerHTML = `<p class="hint">What-if needs an evaluable session:
        ${error instanceof Error ? error.message : String(error)}</p>`;
      return;
    }
    this.whatIfController?.reset();
    const controller = new WhatIfController(
      this.api,
      session.id,
      (result) => handles.updateFromResult(result),
      (error) => this.setStatus(String(error), 'danger'),
    );
    this.whatIfController = controller;
    const baseAva =
      session.ava_override ??
      (session.attitudes.length > 0
        ? session.attitudes.reduce((a, b) => a + b.ava, 0) / session.attitudes.length
        : 0.5);
    const handles = renderWhatIf(container, {
      session,
      baseResult,
      baseAva,
      controller,
    });
  }

  private async renderReportScreen(container: HTMLElement): Promise<void> {
    const session = this.state.current;
    if (!session) return;
    try {
      const result = await this.api.getResult(session.id);
      renderReport(container, { session, result });
    } catch (error) {
      container.innerHTML = `<p class="hint">Report needs an evaluable session:
        ${error instanceof Error ? error.message : String(error)}</p>`;
    }
  }

  private async createSession(title: string): Promise<void> {
    try {
      const doc = await this.api.createSession(title);
      this.summaries = await this.api.listSessions();
      this.state.applyServer(doc);
      this.setStatus(`created session ${doc.id}`);
    } catch (error) {
      this.setStatus(String(error), 'danger');
    }
  }

  private async loadSession(id: string): Promise<void> {
    try {
      const doc = await this.api.getSession(id);
      this.state.applyServer(doc);
      this.setStatus(`loaded ${doc.id} at revision ${doc.revision}`);
    } catch (error) {
      this.setStatus(String(error), 'danger');
    }
  }

  /** PUT the draft against the last acknowledged revision. */
  private async commitDraft(successNote: string): Promise<void> {
    const draft = this.state.draft;
    if (!draft) return;
    try {
      const committed = await this.api.putSession(draft, this.state.lastRevision);
      this.state.applyServer(committed);
      this.setStatus(`${successNote} (revision ${committed.revision})`);
    } catch (error) {
      if (error instanceof ConflictError) {
        const reload = window.confirm(
          'Someone else committed this session first. Reload their version? ' +
            'Your uncommitted edits will be discarded.',
        );
        if (reload) {
          await this.loadSession(draft.id);
        } else {
          this.setStatus('conflict: session not committed; resolve and retry', 'warn');
        }
        return;
      }
      this.setStatus(String(error), 'danger');
    }
  }
}

export function mount(root: HTMLElement, api?: ApiClient): App {
  const app = new App(root, api);
  void app.start();
  return app;
}

declare global {
  interface Window {
    waingeApp?: App;
  }
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  window.waingeApp = mount(document.getElementById('app')!);
}
