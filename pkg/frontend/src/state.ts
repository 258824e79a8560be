// UI interaction state: which cells are selected for region-limited
// queries, and which edge labels are hidden from the link overlay.
// Everything here is pure so it can be tested without a DOM.

import type { Link } from "./types.js";

export class ViewState {
  readonly selected = new Set<number>();
  readonly hiddenLabels = new Set<string>();

  toggleCell(id: number): void {
    if (this.selected.has(id)) {
      this.selected.delete(id);
    } else {
      this.selected.add(id);
    }
  }

  toggleLabel(label: string): void {
    if (this.hiddenLabels.has(label)) {
      this.hiddenLabels.delete(label);
    } else {
      this.hiddenLabels.add(label);
    }
  }
}

// Links whose label is not hidden. Hiding a label removes exactly the
// links carrying that label and nothing else.
export function visibleLinks(links: readonly Link[], hidden: ReadonlySet<string>): Link[] {
  return links.filter((l) => !hidden.has(l.label));
}

// Translate a cell selection into the region parameter of the query
// endpoint. No selection means no restriction (null), otherwise the
// sorted list of selected cell ids.
export function regionFor(selected: ReadonlySet<number>): number[] | null {
  if (selected.size === 0) return null;
  return [...selected].sort((a, b) => a - b);
}

// Human-facing rendering of an estimate: trim float noise to three
// decimals and drop a trailing ".0" so counts read as integers.
export function displayValue(estimate: number): string {
  return String(Math.round(estimate * 1000) / 1000);
}
