import type { ApiClient } from './api.js';
import { debounce, type Debounced } from './debounce.js';
import { clamp01 } from './format.js';
import type { ResultDoc, WhatIfOverrides } from './types.js';

export const WHATIF_DEBOUNCE_MS = 150;

/**
 * Drives the what-if exploration: slider movement accumulates overrides
 * and calls the service's ephemeral endpoint, debounced while dragging
 * and flushed immediately on drag end. Never touches the stored session.
 */
export class WhatIfController {
  private overrides: { weights: Record<string, number>; ava?: number } = {
    weights: {},
  };
  private readonly debounced: Debounced<[]>;
  private inFlight: Promise<void> | null = null;
  private generation = 0;
  lastResult: ResultDoc | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly sessionId: string,
    private readonly onResult: (result: ResultDoc) => void,
    private readonly onError: (error: unknown) => void = () => {},
    debounceMs: number = WHATIF_DEBOUNCE_MS,
  ) {
    this.debounced = debounce(() => {
      void this.send();
    }, debounceMs);
  }

  /** Live slider movement: record and schedule a debounced evaluation. */
  setWeight(factorId: string, value: number): void {
    this.overrides.weights[factorId] = clamp01(value);
    this.debounced();
  }

  setAva(value: number): void {
    this.overrides.ava = clamp01(value);
    this.debounced();
  }

  /** Drag end: evaluate now instead of waiting out the debounce. */
  flush(): void {
    this.debounced.flush();
  }

  reset(): void {
    this.debounced.cancel();
    this.overrides = { weights: {} };
    this.lastResult = null;
  }

  currentOverrides(): WhatIfOverrides {
    const body: WhatIfOverrides = {};
    if (Object.keys(this.overrides.weights).length > 0) {
      body.weights = { ...this.overrides.weights };
    }
    if (this.overrides.ava !== undefined) {
      body.ava = this.overrides.ava;
    }
    return body;
  }

  /** Resolves when no evaluation is pending or in flight (test hook). */
  async settled(): Promise<void> {
    this.flush();
    while (this.inFlight) {
      await this.inFlight;
    }
  }

  private send(): Promise<void> {
    const generation = ++this.generation;
    const request = this.api
      .whatIf(this.sessionId, this.currentOverrides())
      .then((result) => {
        if (generation === this.generation) {
          this.lastResult = result;
          this.onResult(result);
        }
      })
      .catch((error) => {
        if (generation === this.generation) {
          this.onError(error);
        }
      })
      .finally(() => {
        if (this.inFlight === request) this.inFlight = null;
      });
    this.inFlight = request;
    return request;
  }
}
