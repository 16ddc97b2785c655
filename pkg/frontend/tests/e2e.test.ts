/** End-to-end tests: the real app booted in a DOM, talking over real HTTP
 * to the fixture server. Covers the topic browser, the candidate table's
 * winner marking and paging, storyline create/reorder/save round-trips,
 * error surfacing, offline demo mode, and write isolation. */

import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { boot } from "../src/app.js";
import { httpTransport } from "../src/api.js";
import { RECORDED_TOPICS } from "../src/demo-data.js";
import { demoTransport, type MemoryData } from "../src/demo.js";
import type {
  CandidateRecord,
  Label,
  SegmentRecord,
  TopicInfo,
} from "../src/types.js";
import { LABELS } from "../src/types.js";
import { startFixtureServer, type FixtureServer } from "./fixture-server.js";

// ---------------------------------------------------------------- helpers

const servers: FixtureServer[] = [];

async function server(data?: MemoryData, port?: number): Promise<FixtureServer> {
  const srv = await startFixtureServer(data, port);
  servers.push(srv);
  return srv;
}

beforeEach(() => {
  document.body.innerHTML = "";
});

afterEach(async () => {
  while (servers.length > 0) {
    await servers.pop()!.close();
  }
});

function mount(): HTMLElement {
  const root = document.createElement("div");
  document.body.appendChild(root);
  return root;
}

function q<T extends Element>(root: ParentNode, selector: string): T {
  const found = root.querySelector(selector);
  if (!found) throw new Error(`no element matches ${selector}`);
  return found as T;
}

function qa(root: ParentNode, selector: string): HTMLElement[] {
  return [...root.querySelectorAll(selector)] as HTMLElement[];
}

function click(el: Element): void {
  el.dispatchEvent(new MouseEvent("click", { bubbles: true, cancelable: true }));
}

function setInput(el: HTMLInputElement, value: string): void {
  el.value = value;
  el.dispatchEvent(new Event("input", { bubbles: true }));
}

function setSelect(el: HTMLSelectElement, value: string): void {
  el.value = value;
  el.dispatchEvent(new Event("change", { bubbles: true }));
}

async function until(
  what: string,
  cond: () => boolean,
  timeout = 3000,
): Promise<void> {
  const deadline = Date.now() + timeout;
  while (Date.now() < deadline) {
    try {
      if (cond()) return;
    } catch {
      // treat "element not there yet" as a plain not-yet
    }
    await new Promise((resolve) => setTimeout(resolve, 10));
  }
  throw new Error(`timed out waiting for ${what}`);
}

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

// ------------------------------------------------------------- test data

let docCounter = 0;

function seg(text: string): SegmentRecord {
  const docId = `doc${String(docCounter++).padStart(3, "0")}`;
  return {
    segment_id: `${docId}:0`,
    doc_id: docId,
    index: 0,
    text,
    token_count: text.split(/\s+/).filter(Boolean).length,
  };
}

function scoresFor(label: Label, value = 0.9): Record<Label, number> {
  const scores = {} as Record<Label, number>;
  for (const l of LABELS) scores[l] = l === label ? value : 0.02;
  return scores;
}

function cand(
  topic: string,
  textA: string,
  textB: string,
  overrides: Partial<CandidateRecord> = {},
): CandidateRecord {
  return {
    topic,
    segment_a: seg(textA),
    segment_b: seg(textB),
    doc_similarity: 0.4,
    segment_similarity: 0.3,
    scores: scoresFor("Expansion"),
    predicted: "Expansion",
    importance_a: 0.5,
    importance_b: 0.5,
    ...overrides,
  };
}

function makeMany(topic: string, n: number): CandidateRecord[] {
  return Array.from({ length: n }, (_, i) =>
    cand(topic, `left text number ${i} of the batch`, `right text number ${i}`, {
      scores: scoresFor("Expansion", 0.99 - i * 0.01),
      importance_a: 0.01 * i,
      importance_b: 0,
    }),
  );
}

function dataFor(
  candidatesByTopic: Record<string, CandidateRecord[]>,
  extraTopics: TopicInfo[] = [],
): MemoryData {
  const ids = new Set<string>();
  for (const list of Object.values(candidatesByTopic)) {
    for (const c of list) {
      ids.add(c.segment_a.segment_id);
      ids.add(c.segment_b.segment_id);
    }
  }
  const topics = [
    ...Object.entries(candidatesByTopic).map(([topic, list]) => ({
      topic,
      documents: 2,
      candidates: list.length,
    })),
    ...extraTopics,
  ];
  return { topics, candidates: candidatesByTopic, segmentIds: [...ids].sort() };
}

async function openTopic(root: HTMLElement, topic: string): Promise<void> {
  await until("topic list", () => qa(root, ".topic-row").length > 0);
  click(q(root, `.topic-row[data-topic="${topic}"]`));
  await until(
    "candidate table or empty state",
    () =>
      root.querySelector(".candidate-table") !== null ||
      (root.querySelector(".empty-state") !== null &&
        root.querySelector(".loading") === null),
  );
}

function candidateRequests(srv: FixtureServer): string[] {
  return srv.log
    .filter((e) => e.method === "GET" && e.path.includes("/candidates"))
    .map((e) => e.path);
}

// ----------------------------------------------------------- topic browser

describe("topic browser", () => {
  it("renders one row per topic with its document and candidate counts", async () => {
    const topics = Array.from({ length: 28 }, (_, i) => ({
      topic: `survey topic ${String(i + 1).padStart(2, "0")}`,
      documents: (i * 3) % 7,
      candidates: (i * 5) % 11,
    }));
    const srv = await server({ topics, candidates: {}, segmentIds: [] });
    const root = mount();
    boot(root, httpTransport(srv.url));

    await until("28 topic rows", () => qa(root, ".topic-row").length === 28);
    const rows = qa(root, ".topic-row");
    rows.forEach((row, i) => {
      const cells = row.querySelectorAll("td");
      expect(cells[0].textContent?.trim()).toBe(topics[i].topic);
      expect(cells[1].textContent?.trim()).toBe(String(topics[i].documents));
      expect(cells[2].textContent?.trim()).toBe(String(topics[i].candidates));
    });
  });

  it("shows an empty state when the service has no topics", async () => {
    const srv = await server({ topics: [], candidates: {}, segmentIds: [] });
    const root = mount();
    boot(root, httpTransport(srv.url));

    await until("empty state", () => root.querySelector(".empty-state") !== null);
    expect(q(root, ".empty-state").textContent).toContain("No topics loaded");
  });

  it("surfaces a network failure and recovers via retry", async () => {
    const data = dataFor({ "solo topic": [] });
    const first = await startFixtureServer(data);
    const port = first.port;
    await first.close();

    const root = mount();
    boot(root, httpTransport(`http://127.0.0.1:${port}`));
    await until("error banner", () => root.querySelector(".error-banner") !== null);
    expect(q(root, ".error-banner").textContent).toContain(
      "Cannot reach the storyweave service.",
    );

    await server(data, port);
    click(q(root, '[data-action="retry"]'));
    await until("topic list after retry", () => qa(root, ".topic-row").length === 1);
    expect(root.querySelector(".error-banner")).toBeNull();
  });

  it("returns to the list with a notice when a topic vanishes server-side", async () => {
    const before = dataFor({ gone: [], stays: [] });
    const after = dataFor({ stays: [] });
    const srv = await server(before);
    const root = mount();
    boot(root, httpTransport(srv.url));

    await until("both topics", () => qa(root, ".topic-row").length === 2);
    srv.swapData(after);
    click(q(root, '.topic-row[data-topic="gone"]'));

    await until("banner", () => root.querySelector(".banner") !== null);
    expect(q(root, ".banner").textContent).toContain("no topic");
    await until("refreshed list", () => qa(root, ".topic-row").length === 1);
    expect(q(root, ".topic-row .topic-name").textContent?.trim()).toBe("stays");
  });
});

// --------------------------------------------------------- candidate table

describe("candidate table", () => {
  it("marks the predicted label as winner, scores verbatim from the wire", async () => {
    const topic = "tidal flats";
    const strong = cand(
      topic,
      "The band released a second record in the spring.",
      "The singer had moved to the district years before.",
      {
        scores: {
          Comparison: 0.01,
          Contingency: 0.01,
          Expansion: 0.04,
          Temporal: 0.93,
          None: 0.01,
        },
        predicted: "Temporal",
      },
    );
    // Prediction deliberately disagrees with the client-visible argmax: the
    // UI must trust the wire, not recompute.
    const disagree = cand(topic, "Mudbanks shift with every tide.", "Gulls follow the dredger.", {
      scores: {
        Comparison: 0.1,
        Contingency: 0.1,
        Expansion: 0.9,
        Temporal: 0.5,
        None: 0.1,
      },
      predicted: "Temporal",
    });
    const srv = await server(dataFor({ [topic]: [strong, disagree] }));
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    const rows = qa(root, ".candidate-row");
    expect(rows).toHaveLength(2);

    const winner0 = q(rows[0], ".score.winner");
    expect(winner0.getAttribute("data-label")).toBe("Temporal");
    expect(q(winner0, ".score-value").textContent).toBe("0.93");
    expect(qa(rows[0], ".score.winner")).toHaveLength(1);
    expect(q(rows[0], ".predicted").textContent?.trim()).toBe("Temporal");

    const winner1 = q(rows[1], ".score.winner");
    expect(winner1.getAttribute("data-label")).toBe("Temporal");
    const expansionBar = q(rows[1], '.score[data-label="Expansion"]');
    expect(expansionBar.classList.contains("winner")).toBe(false);
    expect(q(expansionBar, ".score-fill").getAttribute("style")).toBe("width: 90%");
  });

  it("clamps bar widths to the track while printing raw values", async () => {
    const topic = "tidal flats";
    const wild = cand(topic, "Overflow on one side.", "Underflow on the other.", {
      scores: {
        Comparison: 0.1,
        Contingency: 0.1,
        Expansion: 1.7,
        Temporal: -0.2,
        None: 0.1,
      },
      predicted: "Expansion",
    });
    const srv = await server(dataFor({ [topic]: [wild] }));
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    const row = q(root, ".candidate-row");
    const expansion = q(row, '.score[data-label="Expansion"]');
    expect(q(expansion, ".score-fill").getAttribute("style")).toBe("width: 100%");
    expect(q(expansion, ".score-value").textContent).toBe("1.70");
    const temporal = q(row, '.score[data-label="Temporal"]');
    expect(q(temporal, ".score-fill").getAttribute("style")).toBe("width: 0%");
    expect(q(temporal, ".score-value").textContent).toBe("-0.20");
  });

  it("filters by predicted label on the client without a new request", async () => {
    const topic = "tidal flats";
    const labels: Label[] = [
      "Temporal",
      "Expansion",
      "Temporal",
      "None",
      "Comparison",
      "Contingency",
    ];
    const records = labels.map((label, i) =>
      cand(topic, `label case ${i} first half`, `label case ${i} second half`, {
        scores: scoresFor(label, 0.9 - i * 0.01),
        predicted: label,
      }),
    );
    const srv = await server(dataFor({ [topic]: records }));
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    expect(qa(root, ".candidate-row")).toHaveLength(6);
    const requestsBefore = candidateRequests(srv).length;

    setSelect(q(root, 'select[data-action="filter"]'), "Temporal");
    await until(
      "filtered rows",
      () => qa(root, ".candidate-row").length === 2,
    );
    for (const row of qa(root, ".candidate-row .predicted")) {
      expect(row.textContent?.trim()).toBe("Temporal");
    }
    expect(candidateRequests(srv)).toHaveLength(requestsBefore);
  });

  it("re-requests from offset zero when the sort changes", async () => {
    const topic = "tidal flats";
    const srv = await server(dataFor({ [topic]: makeMany(topic, 25) }));
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    click(q(root, '[data-action="next"]'));
    await until("second page", () =>
      q(root, ".page-range").textContent!.includes("11–20"),
    );

    setSelect(q(root, 'select[data-action="sort"]'), "importance");
    await until("re-sorted first page", () =>
      q(root, ".candidate-row .snippet").textContent!.includes(
        "left text number 24",
      ),
    );
    const last = candidateRequests(srv).at(-1)!;
    expect(last).toContain("sort=importance");
    expect(last).toContain("offset=0");
    expect(q(root, ".page-range").textContent).toContain("1–10 of 25");
  });

  it("pages forward and back with the range label tracking", async () => {
    const topic = "tidal flats";
    const srv = await server(dataFor({ [topic]: makeMany(topic, 25) }));
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    expect(q(root, ".page-range").textContent).toContain("1–10 of 25");
    expect(
      q<HTMLButtonElement>(root, '[data-action="prev"]').disabled,
    ).toBe(true);
    const firstSnippet = q(root, ".candidate-row .snippet").textContent;

    click(q(root, '[data-action="next"]'));
    await until("page two", () =>
      q(root, ".page-range").textContent!.includes("11–20 of 25"),
    );
    expect(q(root, ".candidate-row .snippet").textContent).not.toBe(firstSnippet);

    click(q(root, '[data-action="next"]'));
    await until("page three", () =>
      q(root, ".page-range").textContent!.includes("21–25 of 25"),
    );
    expect(qa(root, ".candidate-row")).toHaveLength(5);
    expect(
      q<HTMLButtonElement>(root, '[data-action="next"]').disabled,
    ).toBe(true);

    click(q(root, '[data-action="prev"]'));
    await until("back to page two", () =>
      q(root, ".page-range").textContent!.includes("11–20 of 25"),
    );
  });

  it("expands a row to full text, provenance ids, and pair metrics", async () => {
    const topic = "tidal flats";
    const longText =
      "The western breakwater lamp was rebuilt after the storm season, and the keeper's log records every outage in pencil for the harbour board.";
    const record = cand(topic, longText, "A short counterpart segment.", {
      importance_a: 0.25,
      importance_b: 0.75,
      doc_similarity: 0.41,
      segment_similarity: 0.33,
    });
    const srv = await server(dataFor({ [topic]: [record] }));
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    const snippet = q(root, ".candidate-row .snippet").textContent ?? "";
    expect(snippet.endsWith("…")).toBe(true);
    expect(snippet.length).toBeLessThan(longText.length);
    expect(root.querySelector(".expansion")).toBeNull();

    click(q(root, ".candidate-row"));
    await until("expansion", () => root.querySelector(".expansion") !== null);
    const expansion = q(root, ".expansion");
    expect(q(expansion, ".segment-text").textContent).toBe(longText);
    expect(expansion.textContent).toContain(record.segment_a.segment_id);
    expect(expansion.textContent).toContain(record.segment_b.segment_id);
    expect(expansion.textContent).toContain("importance 0.25");
    expect(expansion.textContent).toContain("importance 0.75");
    expect(q(expansion, ".pair-meta").textContent).toContain(
      "document similarity 0.41",
    );
    expect(q(expansion, ".pair-meta").textContent).toContain(
      "segment similarity 0.33",
    );

    click(q(root, ".candidate-row"));
    await until("collapsed", () => root.querySelector(".expansion") === null);
  });
});

// ------------------------------------------------------- storyline composer

describe("storyline composer", () => {
  it("builds, saves, reorders, and round-trips a storyline through the API", async () => {
    const topic = "tidal flats";
    const record = cand(topic, "First segment text.", "Second segment text.");
    const srv = await server(dataFor({ [topic]: [record] }));
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    click(q(root, ".candidate-row"));
    await until("expansion", () => root.querySelector(".expansion") !== null);
    click(q(root, '[data-action="add-a"]'));
    await until("one draft item", () => qa(root, ".draft-item").length === 1);
    expect(
      q<HTMLButtonElement>(root, '[data-action="add-a"]').disabled,
    ).toBe(true);
    expect(q(root, '[data-action="add-a"]').textContent).toContain("In storyline");
    click(q(root, '[data-action="add-b"]'));
    await until("two draft items", () => qa(root, ".draft-item").length === 2);

    setInput(q(root, 'input.note[data-index="0"]'), "start here");
    setInput(q(root, "input.title"), "Mud and light");
    expect(q(root, ".dirty-badge").textContent).toContain("unsaved changes");
    const save = q<HTMLButtonElement>(root, '[data-action="save-draft"]');
    expect(save.disabled).toBe(false);
    expect(save.textContent).toContain("Save storyline");

    click(save);
    await until("saved list entry", () => qa(root, ".storyline-list li").length === 1);
    expect(root.querySelector(".dirty-badge")).toBeNull();
    expect(q(root, ".storyline-list").textContent).toContain("Mud and light");
    expect(q(root, ".storyline-list").textContent).toContain("2 segments");
    expect(q(root, '[data-action="save-draft"]').textContent).toContain(
      "Save changes",
    );

    const aId = record.segment_a.segment_id;
    const bId = record.segment_b.segment_id;
    const created = await (await fetch(`${srv.url}/api/storylines/1`)).json();
    expect(created.items).toEqual([
      { segment_id: aId, note: "start here", order: 0 },
      { segment_id: bId, note: "", order: 1 },
    ]);

    click(q(root, '[data-action="move-down"][data-index="0"]'));
    await until("dirty after reorder", () => root.querySelector(".dirty-badge") !== null);
    click(q(root, '[data-action="save-draft"]'));
    await until("clean after update", () => root.querySelector(".dirty-badge") === null);

    const updated = await (await fetch(`${srv.url}/api/storylines/1`)).json();
    expect(updated.items).toEqual([
      { segment_id: bId, note: "", order: 0 },
      { segment_id: aId, note: "start here", order: 1 },
    ]);
    expect(updated.created).toBe(created.created);

    const writes = srv.log.filter((e) => e.method !== "GET");
    expect(writes.map((e) => e.method)).toEqual(["POST", "PUT"]);
  });

  it("blocks saving client-side until a title and a segment exist", async () => {
    const topic = "tidal flats";
    const srv = await server(
      dataFor({ [topic]: [cand(topic, "One side.", "Other side.")] }),
    );
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    click(q(root, ".candidate-row"));
    await until("expansion", () => root.querySelector(".expansion") !== null);
    click(q(root, '[data-action="add-a"]'));
    await until("draft item", () => qa(root, ".draft-item").length === 1);

    const save = q<HTMLButtonElement>(root, '[data-action="save-draft"]');
    expect(save.disabled).toBe(true);
    // Strip the markup-level block and click anyway: the handler must refuse
    // on its own, so a stale DOM can never push an invalid save through.
    save.disabled = false;
    click(save);
    await until(
      "title error",
      () => root.querySelector('[data-field="title"]') !== null,
    );
    expect(q(root, '[data-field="title"]').textContent).toContain(
      "A title is required.",
    );

    click(q(root, '[data-action="new-draft"]'));
    await until("empty draft", () => qa(root, ".draft-item").length === 0);
    setInput(q(root, "input.title"), "Just a title");
    const save2 = q<HTMLButtonElement>(root, '[data-action="save-draft"]');
    expect(save2.disabled).toBe(true);
    save2.disabled = false;
    click(save2);
    await until(
      "items error",
      () => root.querySelector('[data-field="items"]') !== null,
    );
    expect(q(root, '[data-field="items"]').textContent).toContain(
      "Add at least one segment.",
    );

    expect(srv.log.filter((e) => e.method !== "GET")).toHaveLength(0);
  });

  it("shows duplicate-title conflicts inline without touching the saved list", async () => {
    const topic = "tidal flats";
    const srv = await server(
      dataFor({ [topic]: [cand(topic, "One side.", "Other side.")] }),
    );
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    click(q(root, ".candidate-row"));
    await until("expansion", () => root.querySelector(".expansion") !== null);
    click(q(root, '[data-action="add-a"]'));
    setInput(q(root, "input.title"), "Dup");
    click(q(root, '[data-action="save-draft"]'));
    await until("first save", () => qa(root, ".storyline-list li").length === 1);

    click(q(root, '[data-action="new-draft"]'));
    await until(
      "add button re-enabled",
      () => !q<HTMLButtonElement>(root, '[data-action="add-a"]').disabled,
    );
    click(q(root, '[data-action="add-a"]'));
    setInput(q(root, "input.title"), "Dup");
    click(q(root, '[data-action="save-draft"]'));

    await until(
      "conflict error",
      () => root.querySelector('[data-field="title"]') !== null,
    );
    expect(q(root, '[data-field="title"]').textContent).toContain("already exists");
    expect(qa(root, ".storyline-list li")).toHaveLength(1);
    expect(root.querySelector(".dirty-badge")).not.toBeNull();
    expect(srv.log.filter((e) => e.method === "POST")).toHaveLength(2);
  });

  it("surfaces unknown segments from the service as an items error", async () => {
    const topic = "tidal flats";
    const data = dataFor({ [topic]: [cand(topic, "One side.", "Other side.")] });
    data.segmentIds = []; // the service no longer knows any segment
    const srv = await server(data);
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    click(q(root, ".candidate-row"));
    await until("expansion", () => root.querySelector(".expansion") !== null);
    click(q(root, '[data-action="add-a"]'));
    setInput(q(root, "input.title"), "Stale draft");
    click(q(root, '[data-action="save-draft"]'));

    await until(
      "items error",
      () => root.querySelector('[data-field="items"]') !== null,
    );
    expect(q(root, '[data-field="items"]').textContent).toContain("no segment");
    expect(qa(root, ".storyline-list li")).toHaveLength(0);
  });

  it("lets the last writer win across two concurrent sessions", async () => {
    const topic = "tidal flats";
    const srv = await server(
      dataFor({ [topic]: [cand(topic, "One side.", "Other side.")] }),
    );
    const rootA = mount();
    boot(rootA, httpTransport(srv.url));
    await openTopic(rootA, topic);

    click(q(rootA, ".candidate-row"));
    await until("expansion A", () => rootA.querySelector(".expansion") !== null);
    click(q(rootA, '[data-action="add-a"]'));
    setInput(q(rootA, "input.title"), "Shared");
    click(q(rootA, '[data-action="save-draft"]'));
    await until("A saved", () => qa(rootA, ".storyline-list li").length === 1);

    const rootB = mount();
    boot(rootB, httpTransport(srv.url));
    await openTopic(rootB, topic);
    await until("B sees the storyline", () => qa(rootB, ".storyline-list li").length === 1);

    click(q(rootB, '[data-action="load-storyline"]'));
    await until(
      "B loaded the draft",
      () => q<HTMLInputElement>(rootB, "input.title").value === "Shared",
    );
    setInput(q(rootB, "input.title"), "Shared v2");
    click(q(rootB, '[data-action="save-draft"]'));
    await until("B saved", () =>
      q(rootB, ".storyline-list").textContent!.includes("Shared v2"),
    );

    click(q(rootA, '[data-action="load-storyline"]'));
    await until(
      "A sees B's edit",
      () => q<HTMLInputElement>(rootA, "input.title").value === "Shared v2",
    );
    click(q(rootA, '[data-action="refresh-storylines"]'));
    await until("A's list refreshed", () =>
      q(rootA, ".storyline-list").textContent!.includes("Shared v2"),
    );
  });
});

// --------------------------------------------------- isolation and offline

describe("isolation and offline", () => {
  it("never writes to analysis endpoints across a full session", async () => {
    const topic = "tidal flats";
    const srv = await server(dataFor({ [topic]: makeMany(topic, 12) }));
    const root = mount();
    boot(root, httpTransport(srv.url));
    await openTopic(root, topic);

    setSelect(q(root, 'select[data-action="sort"]'), "similarity");
    await until("re-sorted", () =>
      candidateRequests(srv).some((p) => p.includes("sort=similarity")),
    );
    click(q(root, '[data-action="next"]'));
    await until("page two", () =>
      q(root, ".page-range").textContent!.includes("11–12"),
    );
    click(q(root, ".candidate-row"));
    await until("expansion", () => root.querySelector(".expansion") !== null);
    click(q(root, '[data-action="add-a"]'));
    setInput(q(root, "input.title"), "Quiet session");
    click(q(root, '[data-action="save-draft"]'));
    await until("saved", () => qa(root, ".storyline-list li").length === 1);
    click(q(root, '[data-action="load-storyline"]'));
    click(q(root, '[data-action="refresh-storylines"]'));
    click(q(root, '[data-action="back"]'));
    await until("back on topics", () => qa(root, ".topic-row").length === 1);

    const writes = srv.log.filter((e) => e.method !== "GET");
    expect(writes.length).toBeGreaterThan(0);
    for (const entry of writes) {
      expect(entry.path.startsWith("/api/storylines")).toBe(true);
    }
  });

  it("runs fully offline in demo mode on the recorded fixture", async () => {
    const root = mount();
    boot(root, demoTransport());

    await until(
      "recorded topics",
      () => qa(root, ".topic-row").length === RECORDED_TOPICS.length,
    );
    const busiest = RECORDED_TOPICS.find((t) => t.candidates >= 10)!;
    click(q(root, `.topic-row[data-topic="${busiest.topic}"]`));
    await until("candidate rows", () => qa(root, ".candidate-row").length === 10);
    expect(q(root, ".page-range").textContent).toContain(`of ${busiest.candidates}`);

    click(q(root, ".candidate-row"));
    await until("expansion", () => root.querySelector(".expansion") !== null);
    click(q(root, '[data-action="add-a"]'));
    setInput(q(root, "input.title"), "Offline walk");
    click(q(root, '[data-action="save-draft"]'));
    await until("saved offline", () =>
      q(root, ".storyline-list").textContent!.includes("Offline walk"),
    );
  });

  it("cancels in-flight candidate loads when navigating away", async () => {
    const topic = "tidal flats";
    const srv = await server(dataFor({ [topic]: makeMany(topic, 12) }));
    srv.delays.candidates = 200;
    const root = mount();
    boot(root, httpTransport(srv.url));

    await until("topic list", () => qa(root, ".topic-row").length === 1);
    click(q(root, `.topic-row[data-topic="${topic}"]`));
    expect(root.textContent).toContain("Loading candidates");
    click(q(root, '[data-action="back"]'));
    await until("back on topics", () => qa(root, ".topic-row").length === 1);

    await sleep(450); // let the delayed response land, if it ever does
    expect(root.querySelector(".candidate-table")).toBeNull();
    expect(root.querySelector(".error-banner")).toBeNull();
    expect(qa(root, ".topic-row")).toHaveLength(1);
  });
});
