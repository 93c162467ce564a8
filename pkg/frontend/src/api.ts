/** Thin typed client for the analysis and play service. */

import type { AnalysisResponse, HygDocument, SessionResponse } from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function expectJson<T>(res: Response): Promise<T> {
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const body = await res.json();
      if (body && typeof body.detail === 'string') detail = body.detail;
    } catch {
      // keep the status text
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

export class ApiClient {
  constructor(
    private baseUrl: string = '',
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  listGames(): Promise<{ games: string[] }> {
    return this.get('/games');
  }

  getGame(name: string): Promise<HygDocument> {
    return this.get(`/games/${encodeURIComponent(name)}`);
  }

  analyze(doc: HygDocument): Promise<AnalysisResponse> {
    return this.post('/analyze', doc);
  }

  createSession(game: string | HygDocument, humanSide: 'L' | 'R', opener: 'L' | 'R'): Promise<SessionResponse> {
    return this.post('/sessions', { game, humanSide, opener });
  }

  getSession(id: string): Promise<SessionResponse> {
    return this.get(`/sessions/${id}`);
  }

  move(id: string, target: string): Promise<SessionResponse> {
    return this.post(`/sessions/${id}/move`, { target });
  }

  private async get<T>(path: string): Promise<T> {
    return expectJson<T>(await this.fetchImpl(this.baseUrl + path));
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const res = await this.fetchImpl(this.baseUrl + path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
    return expectJson<T>(res);
  }
}
