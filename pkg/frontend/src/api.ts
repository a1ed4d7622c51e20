import type {
  ApiErrorDoc,
  ResultDoc,
  SensitivityDoc,
  SessionDoc,
  SessionSummaryDoc,
  TaxonomyDoc,
  WhatIfOverrides,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly details?: unknown,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

/** A commit raced another writer; reload the session and re-apply edits. */
export class ConflictError extends ApiError {
  constructor(status: number, code: string, message: string, details?: unknown) {
    super(status, code, message, details);
    this.name = 'ConflictError';
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function raiseFor(response: Response): Promise<never> {
  let doc: ApiErrorDoc | null = null;
  try {
    doc = (await response.json()) as ApiErrorDoc;
  } catch {
    // non-JSON error body; fall through to a generic error
  }
  const status = doc?.status ?? response.status;
  const code = doc?.code ?? 'http_error';
  const message = doc?.message ?? `HTTP ${response.status}`;
  if (response.status === 409) {
    throw new ConflictError(status, code, message, doc?.details);
  }
  throw new ApiError(status, code, message, doc?.details);
}

/** Thin typed wrapper over the service; the UI's only data source. */
export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      ...init,
      method,
    });
    if (!response.ok) {
      await raiseFor(response);
    }
    return (await response.json()) as T;
  }

  getTaxonomy(): Promise<TaxonomyDoc> {
    return this.request<TaxonomyDoc>('GET', '/taxonomy');
  }

  listSessions(): Promise<SessionSummaryDoc[]> {
    return this.request<SessionSummaryDoc[]>('GET', '/sessions');
  }

  createSession(title: string): Promise<SessionDoc> {
    return this.request<SessionDoc>('POST', '/sessions', {
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ title }),
    });
  }

  getSession(id: string): Promise<SessionDoc> {
    return this.request<SessionDoc>('GET', `/sessions/${encodeURIComponent(id)}`);
  }

  /** Full-document replacement guarded by the revision the edit was based on. */
  putSession(doc: SessionDoc, expectedRevision: number): Promise<SessionDoc> {
    return this.request<SessionDoc>('PUT', `/sessions/${encodeURIComponent(doc.id)}`, {
      headers: {
        'Content-Type': 'application/json',
        'X-Session-Revision': String(expectedRevision),
      },
      body: JSON.stringify(doc),
    });
  }

  getResult(id: string): Promise<ResultDoc> {
    return this.request<ResultDoc>('GET', `/sessions/${encodeURIComponent(id)}/result`);
  }

  whatIf(id: string, overrides: WhatIfOverrides): Promise<ResultDoc> {
    return this.request<ResultDoc>('POST', `/sessions/${encodeURIComponent(id)}/whatif`, {
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(overrides),
    });
  }

  getSensitivity(id: string): Promise<SensitivityDoc> {
    return this.request<SensitivityDoc>(
      'GET',
      `/sessions/${encodeURIComponent(id)}/sensitivity`,
    );
  }
}
