import { clamp01 } from '../format.js';
import { ATTITUDE_ANCHORS, ATTITUDE_QUESTION } from '../questions.js';
import type { SessionDoc } from '../types.js';

export interface AttitudesContext {
  draft: SessionDoc;
  onAttitudeChange(memberId: string, ava: number | null): void;
  onAvaOverrideChange(value: number | null): void;
  onCommit(): void;
}

function memberValue(draft: SessionDoc, memberId: string): number | null {
  const attitude = draft.attitudes.find((a) => a.member_id === memberId);
  return attitude ? attitude.ava : null;
}

/** One 0..1 slider per member, anchored at the scale's endpoint phrases. */
export function renderAttitudes(container: HTMLElement, ctx: AttitudesContext): void {
  const { draft } = ctx;
  if (draft.team.length === 0) {
    container.innerHTML =
      '<p class="hint">Add team members on the Setup screen first.</p>';
    return;
  }
  const rows = draft.team
    .map((member) => {
      const value = memberValue(draft, member.member_id);
      return `
        <label class="slider-row">
          <span class="slider-label">${member.name || member.member_id}</span>
          <span class="anchor">${ATTITUDE_ANCHORS.low}</span>
          <input type="range" min="0" max="1" step="0.05" value="${value ?? 0.5}"
                 data-role="attitude-slider" data-member="${member.member_id}"
                 ${value === null ? 'data-unset="true"' : ''}>
          <span class="anchor">${ATTITUDE_ANCHORS.high}</span>
          <input type="number" min="0" max="1" step="0.01" value="${value ?? ''}"
                 placeholder="skip"
                 data-role="attitude-number" data-member="${member.member_id}">
        </label>`;
    })
    .join('');
  container.innerHTML = `
    <h3 data-role="attitude-question">${ATTITUDE_QUESTION}</h3>
    <section class="sliders">${rows}</section>
    <label class="slider-row">
      <span class="slider-label">Negotiated team AVA (overrides the average)</span>
      <input type="number" min="0" max="1" step="0.01"
             value="${draft.ava_override ?? ''}" placeholder="use member average"
             data-role="ava-override">
    </label>
    <button type="button" data-role="attitudes-commit">Commit attitudes</button>`;

  for (const slider of container.querySelectorAll<HTMLInputElement>(
    '[data-role="attitude-slider"]',
  )) {
    const memberId = slider.dataset.member!;
    const number = container.querySelector<HTMLInputElement>(
      `[data-role="attitude-number"][data-member="${memberId}"]`,
    )!;
    slider.addEventListener('input', () => {
      number.value = slider.value;
      ctx.onAttitudeChange(memberId, clamp01(Number(slider.value)));
    });
    number.addEventListener('change', () => {
      if (number.value.trim() === '') {
        ctx.onAttitudeChange(memberId, null);
        return;
      }
      const value = clamp01(Number(number.value));
      number.value = String(value);
      slider.value = String(value);
      ctx.onAttitudeChange(memberId, value);
    });
  }
  const override = container.querySelector<HTMLInputElement>('[data-role="ava-override"]')!;
  override.addEventListener('change', () => {
    if (override.value.trim() === '') {
      ctx.onAvaOverrideChange(null);
      return;
    }
    const value = clamp01(Number(override.value));
    override.value = String(value);
    ctx.onAvaOverrideChange(value);
  });
  container
    .querySelector<HTMLButtonElement>('[data-role="attitudes-commit"]')!
    .addEventListener('click', () => ctx.onCommit());
}
