import type { SessionDoc, SessionSummaryDoc } from '../types.js';

export interface SetupContext {
  draft: SessionDoc | null;
  summaries: SessionSummaryDoc[];
  onCreate(title: string): void;
  onLoad(id: string): void;
  onDraftChange(mutate: (draft: SessionDoc) => void): void;
  onCommit(): void;
}

function escapeAttr(value: string): string {
  return value.replace(/&/g, '&amp;').replace(/"/g, '&quot;').replace(/</g, '&lt;');
}

function nextId(prefix: string, existing: string[]): string {
  let i = existing.length + 1;
  while (existing.includes(`${prefix}${i}`)) i += 1;
  return `${prefix}${i}`;
}

/** Title, problems, team and candidate methods; plus create/load entry. */
export function renderSetup(container: HTMLElement, ctx: SetupContext): void {
  const { draft, summaries } = ctx;
  const options = summaries
    .map((s) => `<option value="${escapeAttr(s.id)}">${escapeAttr(s.title || s.id)}</option>`)
    .join('');
  const openSection = `
    <section class="open-session">
      <h3>Session</h3>
      <div class="row">
        <input type="text" placeholder="new assessment title" data-role="new-title">
        <button type="button" data-role="create">Create</button>
      </div>
      <div class="row">
        <select data-role="session-select">${options}</select>
        <button type="button" data-role="load" ${summaries.length === 0 ? 'disabled' : ''}>
          Load
        </button>
      </div>
    </section>`;

  if (!draft) {
    container.innerHTML = openSection;
    wireOpen(container, ctx);
    return;
  }

  const problems = draft.problems
    .map(
      (p, i) => `
        <div class="row" data-index="${i}">
          <span class="mono">${p.id}</span>
          <input type="text" value="${escapeAttr(p.statement)}"
                 data-role="problem-statement" data-index="${i}">
          <button type="button" data-role="problem-remove" data-index="${i}">×</button>
        </div>`,
    )
    .join('');
  const team = draft.team
    .map(
      (m, i) => `
        <div class="row" data-index="${i}">
          <span class="mono">${m.member_id}</span>
          <input type="text" value="${escapeAttr(m.name)}" placeholder="name"
                 data-role="member-name" data-index="${i}">
          <input type="text" value="${escapeAttr(m.role)}" placeholder="role"
                 data-role="member-role" data-index="${i}">
          <button type="button" data-role="member-remove" data-index="${i}">×</button>
        </div>`,
    )
    .join('');
  container.innerHTML = `
    ${openSection}
    <section>
      <h3>Title</h3>
      <input type="text" value="${escapeAttr(draft.title)}" data-role="title">
    </section>
    <section>
      <h3>Problems</h3>
      ${problems}
      <button type="button" data-role="problem-add">Add problem</button>
    </section>
    <section>
      <h3>Team</h3>
      ${team}
      <button type="button" data-role="member-add">Add member</button>
    </section>
    <section>
      <h3>Candidate methods</h3>
      <div class="row">
        <input type="text" value="${escapeAttr(draft.agile_candidate ?? '')}"
               placeholder="Agile candidate (e.g. FDD)" data-role="agile-candidate">
        <input type="text" value="${escapeAttr(draft.non_agile_candidate ?? '')}"
               placeholder="non-Agile candidate (e.g. Spiral Model)"
               data-role="non-agile-candidate">
      </div>
    </section>
    <button type="button" data-role="setup-commit">Commit setup</button>`;
  wireOpen(container, ctx);

  const on = <T extends HTMLElement>(selector: string, event: string, handler: (el: T) => void) => {
    for (const el of container.querySelectorAll<T>(selector)) {
      el.addEventListener(event, () => handler(el));
    }
  };
  on<HTMLInputElement>('[data-role="title"]', 'change', (el) =>
    ctx.onDraftChange((d) => {
      d.title = el.value;
    }),
  );
  on<HTMLInputElement>('[data-role="problem-statement"]', 'change', (el) =>
    ctx.onDraftChange((d) => {
      d.problems[Number(el.dataset.index)].statement = el.value;
    }),
  );
  on<HTMLButtonElement>('[data-role="problem-remove"]', 'click', (el) =>
    ctx.onDraftChange((d) => {
      const removed = d.problems.splice(Number(el.dataset.index), 1)[0];
      d.responses = d.responses.filter((r) => r.problem_id !== removed.id);
    }),
  );
  on<HTMLButtonElement>('[data-role="problem-add"]', 'click', () =>
    ctx.onDraftChange((d) => {
      d.problems.push({
        id: nextId('P', d.problems.map((p) => p.id)),
        statement: 'describe the problem',
      });
    }),
  );
  on<HTMLInputElement>('[data-role="member-name"]', 'change', (el) =>
    ctx.onDraftChange((d) => {
      d.team[Number(el.dataset.index)].name = el.value;
    }),
  );
  on<HTMLInputElement>('[data-role="member-role"]', 'change', (el) =>
    ctx.onDraftChange((d) => {
      d.team[Number(el.dataset.index)].role = el.value;
    }),
  );
  on<HTMLButtonElement>('[data-role="member-remove"]', 'click', (el) =>
    ctx.onDraftChange((d) => {
      const removed = d.team.splice(Number(el.dataset.index), 1)[0];
      d.attitudes = d.attitudes.filter((a) => a.member_id !== removed.member_id);
      d.responses = d.responses.filter((r) => r.respondent_id !== removed.member_id);
    }),
  );
  on<HTMLButtonElement>('[data-role="member-add"]', 'click', () =>
    ctx.onDraftChange((d) => {
      d.team.push({
        member_id: nextId('m', d.team.map((m) => m.member_id)),
        name: '',
        role: '',
      });
    }),
  );
  on<HTMLInputElement>('[data-role="agile-candidate"]', 'change', (el) =>
    ctx.onDraftChange((d) => {
      d.agile_candidate = el.value || null;
    }),
  );
  on<HTMLInputElement>('[data-role="non-agile-candidate"]', 'change', (el) =>
    ctx.onDraftChange((d) => {
      d.non_agile_candidate = el.value || null;
    }),
  );
  container
    .querySelector<HTMLButtonElement>('[data-role="setup-commit"]')!
    .addEventListener('click', () => ctx.onCommit());
}

function wireOpen(container: HTMLElement, ctx: SetupContext): void {
  container
    .querySelector<HTMLButtonElement>('[data-role="create"]')!
    .addEventListener('click', () => {
      const title = container.querySelector<HTMLInputElement>('[data-role="new-title"]')!;
      ctx.onCreate(title.value.trim());
    });
  const loadButton = container.querySelector<HTMLButtonElement>('[data-role="load"]')!;
  loadButton.addEventListener('click', () => {
    const select = container.querySelector<HTMLSelectElement>('[data-role="session-select"]')!;
    if (select.value) ctx.onLoad(select.value);
  });
}
