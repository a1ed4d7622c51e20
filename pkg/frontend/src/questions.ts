/** Display twin of the service's conditional-question template. */
export function renderQuestion(description: string, statement: string): string {
  let lowered = description.trim();
  if (lowered.endsWith('.')) lowered = lowered.slice(0, -1);
  if (lowered.length > 0) {
    lowered = lowered.charAt(0).toLowerCase() + lowered.slice(1);
  }
  return `If ${lowered}, then how could this affect ${statement}?`;
}

export const ATTITUDE_QUESTION =
  'Would you describe yourself and your team as a supporter of Agile?';

export const ATTITUDE_ANCHORS = { low: 'Absolutely not', high: 'Absolutely yes' };
