/** In-memory service double built from recorded payloads.
 *
 * Backs two things: the offline demo mode (open the app with ?demo and no
 * server) and the end-to-end fixture server in the test suite. It mirrors
 * the real service's sorting, paging, validation, and error codes so the
 * UI cannot tell the difference.
 */

import { ApiError, type Transport } from "./api.js";
import {
  RECORDED_CANDIDATES,
  RECORDED_SEGMENT_IDS,
  RECORDED_TOPICS,
} from "./demo-data.js";
import type {
  CandidateRecord,
  SortMode,
  Storyline,
  StorylinePayload,
  TopicInfo,
} from "./types.js";
import { SORT_MODES } from "./types.js";

export interface MemoryData {
  topics: TopicInfo[];
  candidates: Record<string, CandidateRecord[]>;
  segmentIds: string[];
}

export function recordedData(): MemoryData {
  return {
    topics: RECORDED_TOPICS,
    candidates: RECORDED_CANDIDATES,
    segmentIds: RECORDED_SEGMENT_IDS,
  };
}

const SORT_KEYS: Record<SortMode, (c: CandidateRecord) => number> = {
  confidence: (c) => Math.max(...Object.values(c.scores)),
  importance: (c) => c.importance_a + c.importance_b,
  similarity: (c) => c.segment_similarity,
};

function segmentOrder(a: CandidateRecord, b: CandidateRecord): number {
  const left = [a.segment_a.doc_id, a.segment_a.index, a.segment_b.doc_id, a.segment_b.index];
  const right = [b.segment_a.doc_id, b.segment_a.index, b.segment_b.doc_id, b.segment_b.index];
  for (let i = 0; i < left.length; i++) {
    if (left[i] < right[i]) return -1;
    if (left[i] > right[i]) return 1;
  }
  return 0;
}

/** Descending by the sort key, ties broken by topic then segment identity. */
export function sortCandidates(
  records: CandidateRecord[],
  sort: SortMode,
): CandidateRecord[] {
  const key = SORT_KEYS[sort];
  return [...records].sort((a, b) => {
    const gap = key(b) - key(a);
    if (gap !== 0) return gap;
    if (a.topic !== b.topic) return a.topic < b.topic ? -1 : 1;
    return segmentOrder(a, b);
  });
}

const MAX_LIMIT = 500;

export function memoryTransport(data: MemoryData = recordedData()): Transport {
  const known = new Set(data.segmentIds);
  const storylines = new Map<number, Storyline>();
  let nextId = 1;

  function validatePayload(payload: StorylinePayload): void {
    if (typeof payload.title !== "string" || payload.title.trim() === "") {
      throw new ApiError(400, "bad_request", "title must not be blank");
    }
    if (!Array.isArray(payload.items) || payload.items.length === 0) {
      throw new ApiError(400, "bad_request", "a storyline needs at least one segment");
    }
    for (const item of payload.items) {
      if (!known.has(item.segment_id)) {
        throw new ApiError(400, "unknown_segment", `no segment ${item.segment_id}`);
      }
    }
  }

  function checkTitleClash(payload: StorylinePayload, skipId: number | null): void {
    for (const existing of storylines.values()) {
      if (existing.id === skipId) continue;
      if (existing.topic === payload.topic && existing.title === payload.title) {
        throw new ApiError(
          409,
          "duplicate_title",
          `a storyline titled ${payload.title} already exists for this topic`,
        );
      }
    }
  }

  function withOrders(payload: StorylinePayload): Storyline["items"] {
    return payload.items.map((item, i) => ({
      segment_id: item.segment_id,
      note: item.note,
      order: i,
    }));
  }

  return {
    async topics() {
      return data.topics;
    },
    async candidates(topic, sort, offset, limit) {
      const knownTopics = new Set(data.topics.map((t) => t.topic));
      if (!knownTopics.has(topic)) {
        throw new ApiError(404, "unknown_topic", `no topic ${topic}`);
      }
      if (!(SORT_MODES as readonly string[]).includes(sort)) {
        throw new ApiError(400, "bad_request", `unknown sort ${sort}`);
      }
      if (
        !Number.isInteger(offset) || offset < 0 ||
        !Number.isInteger(limit) || limit < 1 || limit > MAX_LIMIT
      ) {
        throw new ApiError(400, "bad_request", "offset/limit out of range");
      }
      const records = sortCandidates(data.candidates[topic] ?? [], sort);
      return {
        topic,
        sort,
        total: records.length,
        offset,
        limit,
        items: records.slice(offset, offset + limit),
      };
    },
    async storylines(topic) {
      const lines = [...storylines.values()].filter(
        (s) => topic === undefined || s.topic === topic,
      );
      lines.sort((a, b) =>
        a.modified === b.modified ? b.id - a.id : (a.modified < b.modified ? 1 : -1),
      );
      return lines;
    },
    async storyline(id) {
      const found = storylines.get(id);
      if (!found) throw new ApiError(404, "unknown_storyline", `no storyline ${id}`);
      return found;
    },
    async createStoryline(payload) {
      validatePayload(payload);
      checkTitleClash(payload, null);
      const now = new Date().toISOString();
      const storyline: Storyline = {
        id: nextId++,
        title: payload.title,
        topic: payload.topic,
        items: withOrders(payload),
        created: now,
        modified: now,
      };
      storylines.set(storyline.id, storyline);
      return storyline;
    },
    async updateStoryline(id, payload) {
      const existing = storylines.get(id);
      if (!existing) throw new ApiError(404, "unknown_storyline", `no storyline ${id}`);
      validatePayload(payload);
      checkTitleClash(payload, id);
      const updated: Storyline = {
        ...existing,
        title: payload.title,
        topic: payload.topic,
        items: withOrders(payload),
        modified: new Date().toISOString(),
      };
      storylines.set(id, updated);
      return updated;
    },
    cancel() {
      // Nothing in flight: every call resolves synchronously.
    },
  };
}

export function demoTransport(): Transport {
  return memoryTransport(recordedData());
}
