export interface Debounced<Args extends unknown[]> {
  (...args: Args): void;
  /** Run any pending call immediately (used on slider drag end). */
  flush(): void;
  cancel(): void;
}

/** Trailing-edge debounce with flush/cancel controls. */
export function debounce<Args extends unknown[]>(
  fn: (...args: Args) => void,
  waitMs: number,
): Debounced<Args> {
  let timer: ReturnType<typeof setTimeout> | null = null;
  let pending: Args | null = null;

  const debounced = (...args: Args): void => {
    pending = args;
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      const args2 = pending as Args;
      pending = null;
      fn(...args2);
    }, waitMs);
  };

  debounced.flush = (): void => {
    if (timer === null) return;
    clearTimeout(timer);
    timer = null;
    const args = pending as Args;
    pending = null;
    fn(...args);
  };

  debounced.cancel = (): void => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
    pending = null;
  };

  return debounced;
}
