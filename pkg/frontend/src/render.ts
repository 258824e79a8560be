// DOM rendering: treemap cells as SVG rects, superedge links as lines
// between cell centers, and an HTML legend with per-label checkboxes.

import type { Placed, Rect } from "./layout.js";
import { squarify } from "./layout.js";
import { visibleLinks, ViewState } from "./state.js";
import type { Cell, LegendEntry, TreemapPayload } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export function layoutCells(cells: readonly Cell[], bounds: Rect): Placed<Cell>[] {
  return squarify(cells, (c) => c.area, bounds);
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v);
  return el;
}

function tooltipText(cell: Cell): string {
  const lines = [
    `hypernode ${cell.id}`,
    `vertices: ${cell.area}`,
    `edges inside: ${cell.tooltip.eweight}`,
    `merged supernodes: ${cell.tooltip.supernode_count}`,
  ];
  for (const lp of cell.tooltip.top_lpercent) {
    lines.push(`  ${lp.label}: ${(lp.percent * 100).toFixed(1)}%`);
  }
  return lines.join("\n");
}

export function renderTreemap(
  svg: SVGSVGElement,
  payload: TreemapPayload,
  state: ViewState,
  onCellToggle: (id: number) => void,
): void {
  svg.replaceChildren();
  const bounds: Rect = {
    x: 0,
    y: 0,
    w: svg.viewBox.baseVal.width || svg.clientWidth || 640,
    h: svg.viewBox.baseVal.height || svg.clientHeight || 420,
  };
  const placed = layoutCells(payload.cells, bounds);
  const centers = new Map<number, { x: number; y: number }>();

  const cellGroup = svgEl("g", { "data-role": "cells" });
  for (const { item: cell, rect } of placed) {
    centers.set(cell.id, { x: rect.x + rect.w / 2, y: rect.y + rect.h / 2 });
    if (rect.w === 0 || rect.h === 0) continue;
    const selected = state.selected.has(cell.id);
    const r = svgEl("rect", {
      x: String(rect.x),
      y: String(rect.y),
      width: String(rect.w),
      height: String(rect.h),
      fill: cell.color,
      "fill-opacity": selected ? "0.95" : "0.6",
      stroke: selected ? "#111" : "#fff",
      "stroke-width": selected ? "3" : "1",
      "data-cell": String(cell.id),
    });
    r.style.cursor = "pointer";
    r.addEventListener("click", () => onCellToggle(cell.id));
    const title = svgEl("title", {});
    title.textContent = tooltipText(cell);
    r.appendChild(title);
    cellGroup.appendChild(r);
    if (rect.w > 40 && rect.h > 18) {
      const t = svgEl("text", {
        x: String(rect.x + 6),
        y: String(rect.y + 16),
        "font-size": "13",
        fill: "#111",
        "pointer-events": "none",
      });
      t.textContent = cell.label === null ? `#${cell.id}` : `${cell.label} (#${cell.id})`;
      cellGroup.appendChild(t);
    }
  }

  const linkGroup = svgEl("g", { "data-role": "links" });
  for (const link of visibleLinks(payload.links, state.hiddenLabels)) {
    const a = centers.get(link.src);
    const b = centers.get(link.dst);
    if (!a || !b) continue;
    const width = String(Math.max(1.5, Math.sqrt(link.weight) * 1.4));
    let el: SVGElement;
    if (link.src === link.dst) {
      el = svgEl("circle", {
        cx: String(a.x),
        cy: String(a.y - 14),
        r: "12",
        fill: "none",
        stroke: link.color,
        "stroke-width": width,
        "data-link-label": link.label,
      });
    } else {
      el = svgEl("line", {
        x1: String(a.x),
        y1: String(a.y),
        x2: String(b.x),
        y2: String(b.y),
        stroke: link.color,
        "stroke-width": width,
        "stroke-opacity": "0.85",
        "data-link-label": link.label,
      });
    }
    const title = svgEl("title", {});
    title.textContent = `${link.label}: ${link.src} → ${link.dst} (weight ${link.weight})`;
    el.appendChild(title);
    linkGroup.appendChild(el);
  }

  svg.appendChild(cellGroup);
  svg.appendChild(linkGroup);
}

export function renderLegend(
  container: HTMLElement,
  legend: readonly LegendEntry[],
  state: ViewState,
  onLabelToggle: (label: string) => void,
): void {
  container.replaceChildren();
  for (const entry of legend) {
    const row = document.createElement("label");
    row.className = "legend-row";
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = !state.hiddenLabels.has(entry.label);
    box.dataset.label = entry.label;
    box.addEventListener("change", () => onLabelToggle(entry.label));
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = entry.color;
    const text = document.createElement("span");
    text.textContent = `${entry.label} (${entry.total_weight})`;
    row.append(box, swatch, text);
    container.appendChild(row);
  }
}
