/** Transport layer: every server conversation goes through one of these. */

import type {
  CandidatePage,
  SortMode,
  Storyline,
  StorylinePayload,
  TopicInfo,
} from "./types.js";

/** Structured failure mirrored from the service's error bodies. */
export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
  }
}

export interface Transport {
  topics(): Promise<TopicInfo[]>;
  candidates(
    topic: string,
    sort: SortMode,
    offset: number,
    limit: number,
  ): Promise<CandidatePage>;
  storylines(topic?: string): Promise<Storyline[]>;
  storyline(id: number): Promise<Storyline>;
  createStoryline(payload: StorylinePayload): Promise<Storyline>;
  updateStoryline(id: number, payload: StorylinePayload): Promise<Storyline>;
  /** Abort whatever is in flight; called when the user navigates away. */
  cancel(): void;
}

/** True for cancellations triggered by our own cancel(), not real failures. */
export function isAbort(error: unknown): boolean {
  return error instanceof Error && error.name === "AbortError";
}

export function httpTransport(baseUrl = ""): Transport {
  let controller = new AbortController();

  async function request<T>(path: string, init: RequestInit = {}): Promise<T> {
    const response = await fetch(baseUrl + path, {
      ...init,
      signal: controller.signal,
    });
    let body: unknown = null;
    try {
      body = await response.json();
    } catch {
      // non-JSON error body; fall back to the status text below
    }
    if (!response.ok) {
      const record = (body ?? {}) as { code?: string; message?: string };
      throw new ApiError(
        response.status,
        record.code ?? "internal",
        record.message ?? response.statusText,
      );
    }
    return body as T;
  }

  const json = { "Content-Type": "application/json" };

  return {
    async topics() {
      const body = await request<{ topics: TopicInfo[] }>("/api/topics");
      return body.topics;
    },
    async candidates(topic, sort, offset, limit) {
      const query = new URLSearchParams({
        sort,
        offset: String(offset),
        limit: String(limit),
      });
      return request(
        `/api/topics/${encodeURIComponent(topic)}/candidates?${query}`,
      );
    },
    async storylines(topic) {
      const suffix =
        topic === undefined ? "" : `?topic=${encodeURIComponent(topic)}`;
      const body = await request<{ storylines: Storyline[] }>(
        `/api/storylines${suffix}`,
      );
      return body.storylines;
    },
    async storyline(id) {
      return request(`/api/storylines/${id}`);
    },
    async createStoryline(payload) {
      return request("/api/storylines", {
        method: "POST",
        headers: json,
        body: JSON.stringify(payload),
      });
    },
    async updateStoryline(id, payload) {
      return request(`/api/storylines/${id}`, {
        method: "PUT",
        headers: json,
        body: JSON.stringify(payload),
      });
    },
    cancel() {
      controller.abort();
      controller = new AbortController();
    },
  };
}
