/** HTML string builders. Pure: state in, markup out, no DOM access. */

import type { AppState, StorylineDraft } from "./state.js";
import { canSave, clampScore, filterRows, rowKey } from "./state.js";
import type { CandidateRecord, Storyline, TopicInfo } from "./types.js";
import { LABELS, SHORT_LABELS, SORT_MODES } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

export function formatScore(value: number): string {
  return value.toFixed(2);
}

function truncate(text: string, max = 90): string {
  return text.length <= max ? text : text.slice(0, max - 1) + "…";
}

export function renderError(message: string): string {
  return `<div class="error-banner" role="alert">
    <span>${escapeHtml(message)}</span>
    <button data-action="retry">Retry</button>
  </div>`;
}

export function renderBanner(message: string): string {
  return `<div class="banner">${escapeHtml(message)}</div>`;
}

export function renderTopicList(topics: TopicInfo[]): string {
  if (topics.length === 0) {
    return `<p class="empty-state">No topics loaded. Run the pipeline and point the service at its output directory.</p>`;
  }
  const rows = topics
    .map(
      (t) => `<tr class="topic-row" data-action="open-topic" data-topic="${escapeHtml(t.topic)}">
      <td class="topic-name">${escapeHtml(t.topic)}</td>
      <td class="count">${t.documents}</td>
      <td class="count">${t.candidates}</td>
    </tr>`,
    )
    .join("");
  return `<table class="topic-table">
    <thead><tr><th>Topic</th><th>Documents</th><th>Candidates</th></tr></thead>
    <tbody>${rows}</tbody>
  </table>`;
}

/** Five horizontal bars, the predicted label marked as the winner. */
export function renderScoreBars(candidate: CandidateRecord): string {
  return LABELS.map((label) => {
    const value = candidate.scores[label];
    const width = (clampScore(value) * 100).toFixed(0);
    const winner = label === candidate.predicted;
    return `<div class="score ${winner ? "winner" : ""}" data-label="${label}">
      <span class="score-label">${SHORT_LABELS[label]}</span>
      <span class="score-track"><span class="score-fill" style="width: ${width}%"></span></span>
      <span class="score-value">${formatScore(value)}</span>
    </div>`;
  }).join("");
}

function renderExpansion(candidate: CandidateRecord, draftIds: Set<string>): string {
  const key = rowKey(candidate);
  const side = (which: "a" | "b") => {
    const segment = which === "a" ? candidate.segment_a : candidate.segment_b;
    const importance = which === "a" ? candidate.importance_a : candidate.importance_b;
    const added = draftIds.has(segment.segment_id);
    return `<div class="segment-detail">
      <p class="segment-text">${escapeHtml(segment.text)}</p>
      <p class="segment-meta">source <code>${escapeHtml(segment.segment_id)}</code>
        &middot; ${segment.token_count} tokens
        &middot; importance ${formatScore(importance)}</p>
      <button data-action="add-${which}" data-key="${escapeHtml(key)}" ${added ? "disabled" : ""}>
        ${added ? "In storyline" : "Add to storyline"}
      </button>
    </div>`;
  };
  return `<tr class="expansion"><td colspan="4">
    <div class="expansion-grid">${side("a")}${side("b")}</div>
    <p class="pair-meta">document similarity ${formatScore(candidate.doc_similarity)}
      &middot; segment similarity ${formatScore(candidate.segment_similarity)}</p>
  </td></tr>`;
}

export function renderCandidateRow(
  candidate: CandidateRecord,
  expanded: boolean,
  draftIds: Set<string>,
): string {
  const key = rowKey(candidate);
  const row = `<tr class="candidate-row ${expanded ? "open" : ""}" data-action="toggle-row" data-key="${escapeHtml(key)}">
    <td class="snippet">${escapeHtml(truncate(candidate.segment_a.text))}</td>
    <td class="snippet">${escapeHtml(truncate(candidate.segment_b.text))}</td>
    <td class="predicted">${escapeHtml(candidate.predicted)}</td>
    <td class="bars">${renderScoreBars(candidate)}</td>
  </tr>`;
  return expanded ? row + renderExpansion(candidate, draftIds) : row;
}

function renderControls(state: AppState): string {
  const sortOptions = SORT_MODES.map(
    (mode) =>
      `<option value="${mode}" ${mode === state.sort ? "selected" : ""}>${mode}</option>`,
  ).join("");
  const filterOptions = ["all", ...LABELS]
    .map(
      (label) =>
        `<option value="${label}" ${label === state.filter ? "selected" : ""}>${label}</option>`,
    )
    .join("");
  // The pager reflects the page the server actually returned, so the range
  // label can never disagree with the rows below it while a load is in flight.
  const total = state.page?.total ?? 0;
  const offset = state.page?.offset ?? 0;
  const limit = state.page?.limit ?? state.limit;
  const from = total === 0 ? 0 : offset + 1;
  const to = Math.min(offset + limit, total);
  return `<div class="controls">
    <label>Sort <select data-action="sort">${sortOptions}</select></label>
    <label>Label <select data-action="filter">${filterOptions}</select></label>
    <span class="pager">
      <button data-action="prev" ${offset === 0 ? "disabled" : ""}>&larr;</button>
      <span class="page-range">${from}–${to} of ${total}</span>
      <button data-action="next" ${to >= total ? "disabled" : ""}>&rarr;</button>
    </span>
  </div>`;
}

function renderCandidateTable(state: AppState): string {
  if (state.page === null) {
    return `<p class="loading">Loading candidates…</p>`;
  }
  const draftIds = new Set(state.draft.items.map((item) => item.segment_id));
  const rows = filterRows(state.page.items, state.filter);
  if (rows.length === 0) {
    return `<p class="empty-state">No candidates on this page${state.filter === "all" ? "" : ` predicted ${state.filter}`}.</p>`;
  }
  const body = rows
    .map((c) => renderCandidateRow(c, state.expanded.has(rowKey(c)), draftIds))
    .join("");
  return `<table class="candidate-table">
    <thead><tr><th>Segment A</th><th>Segment B</th><th>Predicted</th><th>Scores</th></tr></thead>
    <tbody>${body}</tbody>
  </table>`;
}

function renderDraftItems(draft: StorylineDraft): string {
  if (draft.items.length === 0) {
    return `<p class="empty-state">Expand a candidate row and add segments.</p>`;
  }
  return `<ol class="draft-items">${draft.items
    .map(
      (item, i) => `<li class="draft-item" draggable="true" data-index="${i}">
      <span class="drag-handle" title="drag to reorder">☰</span>
      <span class="draft-text">${escapeHtml(item.text || item.segment_id)}</span>
      <input class="note" data-action="note" data-index="${i}"
             placeholder="note" value="${escapeHtml(item.note)}">
      <span class="draft-buttons">
        <button data-action="move-up" data-index="${i}" ${i === 0 ? "disabled" : ""}>↑</button>
        <button data-action="move-down" data-index="${i}" ${i === draft.items.length - 1 ? "disabled" : ""}>↓</button>
        <button data-action="remove-item" data-id="${escapeHtml(item.segment_id)}">×</button>
      </span>
    </li>`,
    )
    .join("")}</ol>`;
}

export function renderComposer(draft: StorylineDraft, saved: Storyline[]): string {
  const savedList =
    saved.length === 0
      ? `<p class="empty-state">No storylines saved for this topic yet.</p>`
      : `<ul class="storyline-list">${saved
          .map(
            (s) => `<li>
          <button data-action="load-storyline" data-id="${s.id}">${escapeHtml(s.title)}</button>
          <span class="count">${s.items.length} segments</span>
        </li>`,
          )
          .join("")}</ul>`;
  return `<aside class="composer">
    <h2>Storyline ${draft.dirty ? `<span class="dirty-badge">unsaved changes</span>` : ""}</h2>
    <label class="title-field">Title
      <input class="title" data-action="title" value="${escapeHtml(draft.title)}"
             placeholder="storyline title">
    </label>
    ${draft.errors.title ? `<p class="field-error" data-field="title">${escapeHtml(draft.errors.title)}</p>` : ""}
    ${renderDraftItems(draft)}
    ${draft.errors.items ? `<p class="field-error" data-field="items">${escapeHtml(draft.errors.items)}</p>` : ""}
    <div class="composer-buttons">
      <button class="save" data-action="save-draft" ${canSave(draft) ? "" : "disabled"}>
        ${draft.id === null ? "Save storyline" : "Save changes"}
      </button>
      <button data-action="new-draft">New</button>
      <button data-action="refresh-storylines" title="reload saved storylines">Refresh</button>
    </div>
    <h3>Saved</h3>
    ${savedList}
  </aside>`;
}

function renderTopicView(state: AppState, topic: string): string {
  return `<div class="topic-view">
    <nav><button data-action="back">&larr; topics</button>
      <h1>${escapeHtml(topic)}</h1></nav>
    <div class="topic-layout">
      <section class="candidates">
        ${renderControls(state)}
        ${renderCandidateTable(state)}
      </section>
      ${renderComposer(state.draft, state.storylines)}
    </div>
  </div>`;
}

export function renderApp(state: AppState): string {
  const chrome = `${state.error ? renderError(state.error) : ""}
    ${state.banner ? renderBanner(state.banner) : ""}`;
  if (state.view.kind === "topics") {
    const body =
      state.topics === null
        ? `<p class="loading">Loading topics…</p>`
        : renderTopicList(state.topics);
    return `${chrome}<div class="topics-view"><h1>storyweave</h1>${body}</div>`;
  }
  return chrome + renderTopicView(state, state.view.topic);
}
