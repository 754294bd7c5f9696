// Typed client for the advisor-match JSON API. The UI does no similarity
// math of its own: every score it shows comes from these responses.

export interface AreasResponse {
  areas: string[];
  roster_version: string;
}

export interface SupervisorEntry {
  name: string;
  ratings: number[];
}

export interface SupervisorsResponse {
  supervisors: SupervisorEntry[];
  roster_version: string;
}

export interface ResultRow {
  name: string;
  score: number;
  rank: number;
}

export interface RankingResponse {
  results: ResultRow[];
  metric: string;
  roster_version: string;
}

export interface Api {
  areas(): Promise<AreasResponse>;
  supervisors(): Promise<SupervisorsResponse>;
  recommend(ratings: number[], k?: number, metric?: string): Promise<RankingResponse>;
  peers(name: string, k?: number, metric?: string): Promise<RankingResponse>;
}

/** A non-2xx API reply; carries the server's machine-readable error code. */
export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiRequestError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class HttpApi implements Api {
  private readonly fetchImpl: FetchLike;

  constructor(
    private readonly base: string = "",
    fetchImpl?: FetchLike,
  ) {
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.base + path, init);
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      const code = body && typeof body.code === "string" ? body.code : "HttpError";
      const message =
        body && typeof body.message === "string" ? body.message : `HTTP ${response.status}`;
      throw new ApiRequestError(response.status, code, message);
    }
    return body as T;
  }

  areas(): Promise<AreasResponse> {
    return this.request<AreasResponse>("/api/areas");
  }

  supervisors(): Promise<SupervisorsResponse> {
    return this.request<SupervisorsResponse>("/api/supervisors");
  }

  recommend(ratings: number[], k?: number, metric?: string): Promise<RankingResponse> {
    const payload: Record<string, unknown> = { ratings };
    if (k !== undefined) payload.k = k;
    if (metric !== undefined) payload.metric = metric;
    return this.request<RankingResponse>("/api/recommend", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  peers(name: string, k?: number, metric?: string): Promise<RankingResponse> {
    const params = new URLSearchParams();
    if (k !== undefined) params.set("k", String(k));
    if (metric !== undefined) params.set("metric", metric);
    const query = params.size > 0 ? `?${params.toString()}` : "";
    return this.request<RankingResponse>(`/api/peers/${encodeURIComponent(name)}${query}`);
  }
}
