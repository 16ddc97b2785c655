/** Application state and the pure operations the views are built from. */

import type {
  CandidatePage,
  CandidateRecord,
  Label,
  SegmentRecord,
  SortMode,
  Storyline,
  StorylinePayload,
  TopicInfo,
} from "./types.js";

export type View = { kind: "topics" } | { kind: "topic"; topic: string };

export interface DraftItem {
  segment_id: string;
  note: string;
  /** Segment text remembered for display; the server only needs the id. */
  text: string;
}

export interface StorylineDraft {
  /** null until the first successful save; then the server-assigned id. */
  id: number | null;
  title: string;
  topic: string;
  items: DraftItem[];
  dirty: boolean;
  errors: { title?: string; items?: string };
}

export interface AppState {
  view: View;
  /** One-shot notice after a forced navigation (e.g. topic disappeared). */
  banner: string | null;
  /** Network failure message; rendered with a retry button. */
  error: string | null;
  topics: TopicInfo[] | null;
  page: CandidatePage | null;
  sort: SortMode;
  offset: number;
  limit: number;
  filter: Label | "all";
  expanded: Set<string>;
  draft: StorylineDraft;
  storylines: Storyline[];
  loading: boolean;
}

export const PAGE_LIMIT = 10;

export function emptyDraft(topic: string): StorylineDraft {
  return { id: null, title: "", topic, items: [], dirty: false, errors: {} };
}

export function initialState(): AppState {
  return {
    view: { kind: "topics" },
    banner: null,
    error: null,
    topics: null,
    page: null,
    sort: "confidence",
    offset: 0,
    limit: PAGE_LIMIT,
    filter: "all",
    expanded: new Set(),
    draft: emptyDraft(""),
    storylines: [],
    loading: false,
  };
}

export function rowKey(candidate: CandidateRecord): string {
  return `${candidate.segment_a.segment_id}|${candidate.segment_b.segment_id}`;
}

/** Score bars never overflow their track, whatever the payload says. */
export function clampScore(value: number): number {
  return Math.min(1, Math.max(0, value));
}

export function filterRows(
  items: CandidateRecord[],
  filter: Label | "all",
): CandidateRecord[] {
  if (filter === "all") return items;
  return items.filter((c) => c.predicted === filter);
}

/** Add a segment to the draft; duplicates are ignored. Returns true if added. */
export function addSegment(
  draft: StorylineDraft,
  segment: SegmentRecord,
): boolean {
  if (draft.items.some((item) => item.segment_id === segment.segment_id)) {
    return false;
  }
  draft.items.push({ segment_id: segment.segment_id, note: "", text: segment.text });
  draft.dirty = true;
  draft.errors.items = undefined;
  return true;
}

export function removeSegment(draft: StorylineDraft, segmentId: string): void {
  const before = draft.items.length;
  draft.items = draft.items.filter((item) => item.segment_id !== segmentId);
  if (draft.items.length !== before) draft.dirty = true;
}

/** Swap the item at index with its neighbour; out-of-range moves are no-ops. */
export function moveSegment(
  draft: StorylineDraft,
  index: number,
  delta: -1 | 1,
): void {
  const target = index + delta;
  if (index < 0 || index >= draft.items.length) return;
  if (target < 0 || target >= draft.items.length) return;
  const items = draft.items;
  [items[index], items[target]] = [items[target], items[index]];
  draft.dirty = true;
}

/** Move the item at `from` so it sits at `to` (drag-and-drop reorder). */
export function reorderSegment(
  draft: StorylineDraft,
  from: number,
  to: number,
): void {
  const n = draft.items.length;
  if (from < 0 || from >= n || to < 0 || to >= n || from === to) return;
  const [moved] = draft.items.splice(from, 1);
  draft.items.splice(to, 0, moved);
  draft.dirty = true;
}

/** Save is allowed once there is a title and at least one segment. */
export function canSave(draft: StorylineDraft): boolean {
  return draft.title.trim().length > 0 && draft.items.length > 0;
}

export function draftPayload(draft: StorylineDraft): StorylinePayload {
  return {
    title: draft.title,
    topic: draft.topic,
    items: draft.items.map((item) => ({
      segment_id: item.segment_id,
      note: item.note,
    })),
  };
}

/** Open a saved storyline for editing; texts come from the candidate page
 * when the segment is visible there, the id is always shown regardless. */
export function draftFromStoryline(
  storyline: Storyline,
  textOf: (segmentId: string) => string,
): StorylineDraft {
  const items = [...storyline.items].sort((a, b) => a.order - b.order);
  return {
    id: storyline.id,
    title: storyline.title,
    topic: storyline.topic,
    items: items.map((item) => ({
      segment_id: item.segment_id,
      note: item.note,
      text: textOf(item.segment_id),
    })),
    dirty: false,
    errors: {},
  };
}
