import type { CorrespondentSummary, TimelinePoint } from "./types.js";

export type FetchLike = (input: string) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly url: string,
  ) {
    super(`${url} failed with status ${status}`);
  }
}

export class ApiClient {
  constructor(private readonly fetchFn: FetchLike = (url) => fetch(url)) {}

  private async getJson<T>(url: string): Promise<T> {
    const response = await this.fetchFn(url);
    if (!response.ok) {
      throw new ApiError(response.status, url);
    }
    return (await response.json()) as T;
  }

  summary(): Promise<CorrespondentSummary[]> {
    return this.getJson("/api/mailbox/summary");
  }

  correspondent(address: string): Promise<CorrespondentSummary> {
    return this.getJson(`/api/correspondent/${encodeURIComponent(address)}`);
  }

  timeline(address: string): Promise<TimelinePoint[]> {
    return this.getJson(
      `/api/correspondent/${encodeURIComponent(address)}/timeline`,
    );
  }
}
