import { formatPercent } from './format.js';
import type { Severity } from './types.js';

/**
 * SVG arc gauge for the decisional value. The number shown is the served
 * DEC; the arc geometry is pure presentation.
 */
export function gaugeMarkup(dec: number, severity: Severity): string {
  const radius = 44;
  const circumference = 2 * Math.PI * radius;
  const arcSpan = circumference * 0.75; // 270-degree dial
  const filled = arcSpan * Math.min(1, Math.max(0, dec));
  return `
    <div class="gauge gauge-${severity}" data-role="gauge">
      <svg viewBox="0 0 100 100" role="img" aria-label="DEC gauge">
        <circle class="gauge-track" cx="50" cy="50" r="${radius}"
          stroke-dasharray="${arcSpan} ${circumference}"
          transform="rotate(135 50 50)"></circle>
        <circle class="gauge-fill" cx="50" cy="50" r="${radius}"
          stroke-dasharray="${filled} ${circumference}"
          transform="rotate(135 50 50)"></circle>
      </svg>
      <div class="gauge-readout" data-role="gauge-value">${formatPercent(dec)}</div>
    </div>`;
}
