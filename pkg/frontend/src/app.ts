/** Wires state, transport, and rendering together on a root element. */

import { ApiError, isAbort, type Transport } from "./api.js";
import {
  addSegment,
  canSave,
  draftFromStoryline,
  draftPayload,
  emptyDraft,
  initialState,
  moveSegment,
  removeSegment,
  reorderSegment,
  rowKey,
  type AppState,
} from "./state.js";
import { renderApp } from "./render.js";
import type { Label, SortMode } from "./types.js";

export interface App {
  /** Current state, exposed for debugging and tests. */
  state(): AppState;
}

function reachMessage(error: unknown): string {
  if (error instanceof ApiError) {
    return `Service error: ${error.message}`;
  }
  return "Cannot reach the storyweave service.";
}

export function boot(root: HTMLElement, transport: Transport): App {
  const state = initialState();
  let lastLoad: () => void = () => void loadTopics();
  let dragIndex: number | null = null;
  let pageSeq = 0;

  function paint(): void {
    root.innerHTML = renderApp(state);
  }

  /** Targeted updates while typing, so the input keeps its caret. */
  function refreshComposerChrome(): void {
    const save = root.querySelector<HTMLButtonElement>('[data-action="save-draft"]');
    if (save) save.disabled = !canSave(state.draft);
    const heading = root.querySelector(".composer h2");
    if (heading) {
      heading.innerHTML = `Storyline ${
        state.draft.dirty ? '<span class="dirty-badge">unsaved changes</span>' : ""
      }`;
    }
  }

  async function loadTopics(): Promise<void> {
    lastLoad = () => void loadTopics();
    try {
      state.topics = await transport.topics();
      state.error = null;
    } catch (error) {
      if (isAbort(error)) return;
      state.error = reachMessage(error);
    }
    paint();
  }

  async function loadPage(topic: string): Promise<void> {
    lastLoad = () => void loadPage(topic);
    const seq = ++pageSeq; // drop responses overtaken by a newer request
    try {
      const page = await transport.candidates(
        topic,
        state.sort,
        state.offset,
        state.limit,
      );
      if (seq !== pageSeq) return;
      if (state.view.kind !== "topic" || state.view.topic !== topic) return;
      state.page = page;
      state.error = null;
    } catch (error) {
      if (isAbort(error)) return;
      if (seq !== pageSeq) return;
      if (state.view.kind !== "topic" || state.view.topic !== topic) return;
      if (error instanceof ApiError && error.status === 404) {
        // The topic disappeared from under us: back to the list, with a note.
        state.view = { kind: "topics" };
        state.banner = error.message;
        state.page = null;
        paint();
        void loadTopics();
        return;
      }
      state.error = reachMessage(error);
    }
    paint();
  }

  async function refreshStorylines(topic: string): Promise<void> {
    state.storylines = await transport.storylines(topic);
  }

  async function loadStorylines(topic: string): Promise<void> {
    try {
      await refreshStorylines(topic);
      paint();
    } catch (error) {
      if (isAbort(error)) return;
      state.error = reachMessage(error);
      paint();
    }
  }

  function textOf(segmentId: string): string {
    for (const candidate of state.page?.items ?? []) {
      if (candidate.segment_a.segment_id === segmentId) return candidate.segment_a.text;
      if (candidate.segment_b.segment_id === segmentId) return candidate.segment_b.text;
    }
    const held = state.draft.items.find((item) => item.segment_id === segmentId);
    return held?.text ?? "";
  }

  function openTopic(topic: string): void {
    transport.cancel();
    state.view = { kind: "topic", topic };
    state.banner = null;
    state.error = null;
    state.page = null;
    state.sort = "confidence";
    state.offset = 0;
    state.filter = "all";
    state.expanded = new Set();
    state.draft = emptyDraft(topic);
    state.storylines = [];
    paint();
    void loadPage(topic);
    void loadStorylines(topic);
  }

  function goBack(): void {
    transport.cancel();
    state.view = { kind: "topics" };
    state.banner = null;
    state.page = null;
    paint();
    if (state.topics === null) void loadTopics();
  }

  async function saveDraft(): Promise<void> {
    const draft = state.draft;
    if (!canSave(draft)) {
      draft.errors.title = draft.title.trim() === "" ? "A title is required." : undefined;
      draft.errors.items =
        draft.items.length === 0 ? "Add at least one segment." : undefined;
      paint();
      return;
    }
    draft.errors = {};
    try {
      const saved =
        draft.id === null
          ? await transport.createStoryline(draftPayload(draft))
          : await transport.updateStoryline(draft.id, draftPayload(draft));
      state.draft = draftFromStoryline(saved, textOf);
      await refreshStorylines(draft.topic);
      paint();
    } catch (error) {
      if (isAbort(error)) return;
      if (error instanceof ApiError) {
        if (error.code === "unknown_segment") draft.errors.items = error.message;
        else draft.errors.title = error.message;
        paint();
        return;
      }
      state.error = reachMessage(error);
      paint();
    }
  }

  async function openStoryline(id: number): Promise<void> {
    try {
      const storyline = await transport.storyline(id);
      state.draft = draftFromStoryline(storyline, textOf);
      paint();
    } catch (error) {
      if (isAbort(error)) return;
      state.banner =
        error instanceof ApiError ? error.message : reachMessage(error);
      paint();
    }
  }

  function candidateByKey(key: string) {
    return state.page?.items.find((c) => rowKey(c) === key) ?? null;
  }

  function onClick(event: Event): void {
    const target = (event.target as HTMLElement).closest<HTMLElement>(
      "[data-action]",
    );
    if (!target || !root.contains(target)) return;
    switch (target.dataset.action) {
      case "open-topic":
        openTopic(target.dataset.topic ?? "");
        break;
      case "back":
        goBack();
        break;
      case "retry":
        state.error = null;
        paint();
        lastLoad();
        break;
      case "toggle-row": {
        const key = target.dataset.key ?? "";
        if (state.expanded.has(key)) state.expanded.delete(key);
        else state.expanded.add(key);
        paint();
        break;
      }
      case "add-a":
      case "add-b": {
        const candidate = candidateByKey(target.dataset.key ?? "");
        if (!candidate) break;
        const segment =
          target.dataset.action === "add-a" ? candidate.segment_a : candidate.segment_b;
        addSegment(state.draft, segment);
        paint();
        break;
      }
      case "prev":
        if (state.offset > 0 && state.view.kind === "topic") {
          state.offset = Math.max(0, state.offset - state.limit);
          void loadPage(state.view.topic);
        }
        break;
      case "next":
        if (
          state.view.kind === "topic" &&
          state.page !== null &&
          state.offset + state.limit < state.page.total
        ) {
          state.offset += state.limit;
          void loadPage(state.view.topic);
        }
        break;
      case "move-up":
      case "move-down":
        moveSegment(
          state.draft,
          Number(target.dataset.index),
          target.dataset.action === "move-up" ? -1 : 1,
        );
        paint();
        break;
      case "remove-item":
        removeSegment(state.draft, target.dataset.id ?? "");
        paint();
        break;
      case "save-draft":
        void saveDraft();
        break;
      case "new-draft":
        if (state.view.kind === "topic") {
          state.draft = emptyDraft(state.view.topic);
          paint();
        }
        break;
      case "load-storyline":
        void openStoryline(Number(target.dataset.id));
        break;
      case "refresh-storylines":
        if (state.view.kind === "topic") {
          void loadStorylines(state.view.topic);
        }
        break;
      default:
        break;
    }
  }

  function onChange(event: Event): void {
    const target = event.target as HTMLElement;
    const action = target.dataset.action;
    if (action === "sort" && state.view.kind === "topic") {
      state.sort = (target as HTMLSelectElement).value as SortMode;
      state.offset = 0;
      void loadPage(state.view.topic);
    } else if (action === "filter") {
      state.filter = (target as HTMLSelectElement).value as Label | "all";
      paint();
    }
  }

  function onInput(event: Event): void {
    const target = event.target as HTMLInputElement;
    if (target.dataset.action === "title") {
      state.draft.title = target.value;
      state.draft.dirty = true;
      state.draft.errors.title = undefined;
      refreshComposerChrome();
    } else if (target.dataset.action === "note") {
      const item = state.draft.items[Number(target.dataset.index)];
      if (item) {
        item.note = target.value;
        state.draft.dirty = true;
        refreshComposerChrome();
      }
    }
  }

  function onDragStart(event: DragEvent): void {
    const item = (event.target as HTMLElement).closest<HTMLElement>(".draft-item");
    dragIndex = item ? Number(item.dataset.index) : null;
  }

  function onDragOver(event: DragEvent): void {
    if (dragIndex !== null) event.preventDefault();
  }

  function onDrop(event: DragEvent): void {
    const item = (event.target as HTMLElement).closest<HTMLElement>(".draft-item");
    if (item && dragIndex !== null) {
      event.preventDefault();
      reorderSegment(state.draft, dragIndex, Number(item.dataset.index));
      paint();
    }
    dragIndex = null;
  }

  root.addEventListener("click", onClick);
  root.addEventListener("change", onChange);
  root.addEventListener("input", onInput);
  root.addEventListener("dragstart", onDragStart as EventListener);
  root.addEventListener("dragover", onDragOver as EventListener);
  root.addEventListener("drop", onDrop as EventListener);

  paint();
  void loadTopics();

  return { state: () => state };
}
