import type { Screen, SessionDoc } from './types.js';

export type Listener = () => void;

/**
 * Client-side session state: the last acknowledged server snapshot, a
 * draft buffer for in-progress edits, and the active screen. The
 * displayed revision is always the last revision the server acknowledged;
 * commits go through the api client with that revision so a concurrent
 * facilitator surfaces as a conflict, never a silent overwrite.
 */
export class UiSessionState {
  private session: SessionDoc | null = null;
  private draftDoc: SessionDoc | null = null;
  private screenName: Screen = 'Setup';
  private dirtyFlag = false;
  private listeners: Listener[] = [];

  get current(): SessionDoc | null {
    return this.session;
  }

  get draft(): SessionDoc | null {
    return this.draftDoc;
  }

  get dirty(): boolean {
    return this.dirtyFlag;
  }

  get screen(): Screen {
    return this.screenName;
  }

  get lastRevision(): number {
    return this.session ? this.session.revision : -1;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  /** Adopt a server-acknowledged document; resets the draft and dirty flag. */
  applyServer(doc: SessionDoc): void {
    this.session = doc;
    this.draftDoc = structuredClone(doc);
    this.dirtyFlag = false;
    this.notify();
  }

  /** Mutate the draft buffer (screen edits land here until committed). */
  updateDraft(mutate: (draft: SessionDoc) => void): void {
    if (!this.draftDoc) throw new Error('no session loaded');
    mutate(this.draftDoc);
    this.dirtyFlag = true;
    this.notify();
  }

  /** Throw away draft edits, back to the last acknowledged snapshot. */
  resetDraft(): void {
    if (!this.session) return;
    this.draftDoc = structuredClone(this.session);
    this.dirtyFlag = false;
    this.notify();
  }

  setScreen(screen: Screen): void {
    this.screenName = screen;
    this.notify();
  }
}
