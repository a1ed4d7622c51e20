import { clamp01, formatWeight } from '../format.js';
import type { ResultDoc, SessionDoc } from '../types.js';
import { weightRows } from '../weights.js';
import type { WhatIfController } from '../whatif.js';
import { resultStripMarkup } from './dashboard.js';

export interface WhatIfScreenHandles {
  /** Repaint the result strip from a served (ephemeral) result. */
  updateFromResult(result: ResultDoc): void;
}

export interface WhatIfContext {
  session: SessionDoc;
  baseResult: ResultDoc;
  baseAva: number;
  controller: WhatIfController;
}

/**
 * Per-factor and AVA sliders driving the ephemeral what-if endpoint.
 * Inputs are range controls bounded to [0, 1] (backed by clamp01), so no
 * out-of-range value can be submitted; drag end flushes the debounce.
 */
export function renderWhatIf(
  container: HTMLElement,
  ctx: WhatIfContext,
): WhatIfScreenHandles {
  const { session, baseResult, baseAva, controller } = ctx;
  const factorSliders = weightRows(session)
    .map(
      (row) => `
        <label class="slider-row">
          <span class="slider-label" title="${row.factorId}">${row.factorId}</span>
          <input type="range" min="0" max="1" step="0.05" value="${row.weight}"
                 data-role="weight-slider" data-factor="${row.factorId}">
          <input type="number" min="0" max="1" step="0.01" value="${formatWeight(row.weight)}"
                 data-role="weight-number" data-factor="${row.factorId}">
        </label>`,
    )
    .join('');
  container.innerHTML = `
    <section class="result-strip" data-role="whatif-result">
      ${resultStripMarkup(baseResult)}
    </section>
    <p class="hint">Exploration only: nothing here changes the stored session.</p>
    <section class="sliders">
      <label class="slider-row slider-ava">
        <span class="slider-label">AVA</span>
        <span class="anchor">Absolutely not</span>
        <input type="range" min="0" max="1" step="0.05" value="${baseAva}"
               data-role="ava-slider">
        <span class="anchor">Absolutely yes</span>
        <input type="number" min="0" max="1" step="0.01" value="${baseAva}"
               data-role="ava-number">
      </label>
      ${factorSliders}
    </section>`;

  const strip = container.querySelector<HTMLElement>('[data-role="whatif-result"]')!;

  const handles: WhatIfScreenHandles = {
    updateFromResult(result: ResultDoc): void {
      strip.innerHTML = resultStripMarkup(result);
    },
  };

  const avaSlider = container.querySelector<HTMLInputElement>('[data-role="ava-slider"]')!;
  const avaNumber = container.querySelector<HTMLInputElement>('[data-role="ava-number"]')!;
  avaSlider.addEventListener('input', () => {
    avaNumber.value = avaSlider.value;
    controller.setAva(clamp01(Number(avaSlider.value)));
  });
  avaSlider.addEventListener('change', () => controller.flush());
  avaNumber.addEventListener('change', () => {
    const value = clamp01(Number(avaNumber.value));
    avaNumber.value = String(value);
    avaSlider.value = String(value);
    controller.setAva(value);
    controller.flush();
  });

  for (const slider of container.querySelectorAll<HTMLInputElement>(
    '[data-role="weight-slider"]',
  )) {
    const factorId = slider.dataset.factor!;
    const number = container.querySelector<HTMLInputElement>(
      `[data-role="weight-number"][data-factor="${factorId}"]`,
    )!;
    slider.addEventListener('input', () => {
      number.value = slider.value;
      controller.setWeight(factorId, clamp01(Number(slider.value)));
    });
    slider.addEventListener('change', () => controller.flush());
    number.addEventListener('change', () => {
      const value = clamp01(Number(number.value));
      number.value = String(value);
      slider.value = String(value);
      controller.setWeight(factorId, value);
      controller.flush();
    });
  }

  return handles;
}
