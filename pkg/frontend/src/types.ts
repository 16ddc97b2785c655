/** Payload shapes exchanged with the storyweave service. */

export const LABELS = [
  "Comparison",
  "Contingency",
  "Expansion",
  "Temporal",
  "None",
] as const;

export type Label = (typeof LABELS)[number];

/** Column shorthand used in the pipeline's text table; reused as bar captions. */
export const SHORT_LABELS: Record<Label, string> = {
  Comparison: "Co.",
  Contingency: "Ct.",
  Expansion: "E.",
  Temporal: "T.",
  None: "N.",
};

export const SORT_MODES = ["confidence", "importance", "similarity"] as const;

export type SortMode = (typeof SORT_MODES)[number];

export interface TopicInfo {
  topic: string;
  documents: number;
  candidates: number;
}

export interface SegmentRecord {
  segment_id: string;
  doc_id: string;
  index: number;
  text: string;
  token_count: number;
}

export interface CandidateRecord {
  topic: string;
  segment_a: SegmentRecord;
  segment_b: SegmentRecord;
  doc_similarity: number;
  segment_similarity: number;
  scores: Record<Label, number>;
  predicted: Label;
  importance_a: number;
  importance_b: number;
}

export interface CandidatePage {
  topic: string;
  sort: string;
  total: number;
  offset: number;
  limit: number;
  items: CandidateRecord[];
}

export interface StorylineItem {
  segment_id: string;
  note: string;
  order: number;
}

export interface Storyline {
  id: number;
  title: string;
  topic: string;
  items: StorylineItem[];
  created: string;
  modified: string;
}

/** Body for POST/PUT storyline requests; the server assigns order indices. */
export interface StorylinePayload {
  title: string;
  topic: string;
  items: { segment_id: string; note: string }[];
}
