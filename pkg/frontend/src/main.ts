// Entry point: wires the fetch layer, interaction state, and renderers
// to the static controls in index.html.

import { fetchTreemap, postQuery } from "./api.js";
import { displayValue, regionFor, ViewState } from "./state.js";
import { renderLegend, renderTreemap } from "./render.js";
import type { TreemapPayload } from "./types.js";

const state = new ViewState();
let payload: TreemapPayload | null = null;

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const summaryInput = $<HTMLInputElement>("summary-id");
const loadBtn = $<HTMLButtonElement>("load-btn");
const svg = document.getElementById("treemap") as unknown as SVGSVGElement;
const legendEl = $<HTMLDivElement>("legend");
const queryInput = $<HTMLInputElement>("query-input");
const runBtn = $<HTMLButtonElement>("run-btn");
const resultEl = $<HTMLDivElement>("result");
const statusEl = $<HTMLDivElement>("status");
const debugEl = $<HTMLPreElement>("debug");

function redraw(): void {
  if (!payload) return;
  renderTreemap(svg, payload, state, (id) => {
    state.toggleCell(id);
    redraw();
  });
  renderLegend(legendEl, payload.legend, state, (label) => {
    state.toggleLabel(label);
    redraw();
  });
  debugEl.textContent = JSON.stringify(
    {
      summary: payload.summary_id,
      mode: payload.mode,
      region: regionFor(state.selected),
      hidden_labels: [...state.hiddenLabels].sort(),
    },
    null,
    2,
  );
}

async function load(): Promise<void> {
  statusEl.textContent = "loading…";
  try {
    payload = await fetchTreemap(summaryInput.value.trim());
    state.selected.clear();
    state.hiddenLabels.clear();
    statusEl.textContent = `${payload.cells.length} cells, ${payload.links.length} links (${payload.mode} mode)`;
    redraw();
  } catch (err) {
    statusEl.textContent = err instanceof Error ? err.message : String(err);
  }
}

async function run(): Promise<void> {
  if (!payload) {
    resultEl.textContent = "load a summary first";
    return;
  }
  resultEl.textContent = "…";
  try {
    const record = await postQuery(
      payload.summary_id,
      queryInput.value,
      regionFor(state.selected),
    );
    const scope =
      record.region === null ? "whole summary" : `cells ${record.region.join(", ")}`;
    resultEl.textContent = `${displayValue(record.estimate)} (${scope})`;
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") return;
    resultEl.textContent = err instanceof Error ? err.message : String(err);
  }
}

loadBtn.addEventListener("click", () => void load());
runBtn.addEventListener("click", () => void run());
queryInput.addEventListener("keydown", (ev) => {
  if (ev.key === "Enter") void run();
});

void load();
