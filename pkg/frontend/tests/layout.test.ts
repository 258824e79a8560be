import { describe, expect, it } from "vitest";
import { squarify, type Placed, type Rect } from "../src/layout.js";

const BOUNDS: Rect = { x: 0, y: 0, w: 640, h: 420 };
const EPS = 1e-6;

function areaOf(r: Rect): number {
  return r.w * r.h;
}

function overlap(a: Rect, b: Rect): number {
  const w = Math.min(a.x + a.w, b.x + b.w) - Math.max(a.x, b.x);
  const h = Math.min(a.y + a.h, b.y + b.h) - Math.max(a.y, b.y);
  return Math.max(0, w) * Math.max(0, h);
}

function checkInvariants<T>(placed: Placed<T>[], bounds: Rect): void {
  for (const p of placed) {
    expect(p.rect.x).toBeGreaterThanOrEqual(bounds.x - EPS);
    expect(p.rect.y).toBeGreaterThanOrEqual(bounds.y - EPS);
    expect(p.rect.x + p.rect.w).toBeLessThanOrEqual(bounds.x + bounds.w + EPS);
    expect(p.rect.y + p.rect.h).toBeLessThanOrEqual(bounds.y + bounds.h + EPS);
  }
  for (let i = 0; i < placed.length; i++) {
    for (let j = i + 1; j < placed.length; j++) {
      expect(overlap(placed[i].rect, placed[j].rect)).toBeLessThanOrEqual(EPS);
    }
  }
}

describe("squarify", () => {
  it("preserves input order in the result", () => {
    const items = [3, 1, 4, 1, 5];
    const placed = squarify(items, (v) => v, BOUNDS);
    expect(placed.map((p) => p.item)).toEqual(items);
  });

  it("allocates area proportional to the weights", () => {
    const items = [10, 11, 2, 2];
    const placed = squarify(items, (v) => v, BOUNDS);
    const total = items.reduce((a, b) => a + b, 0);
    const full = BOUNDS.w * BOUNDS.h;
    for (let i = 0; i < items.length; i++) {
      expect(areaOf(placed[i].rect)).toBeCloseTo((items[i] / total) * full, 4);
    }
    checkInvariants(placed, BOUNDS);
  });

  it("stays inside bounds with many uneven weights", () => {
    const items = Array.from({ length: 23 }, (_, i) => ((i * 7919) % 97) + 1);
    const placed = squarify(items, (v) => v, BOUNDS);
    checkInvariants(placed, BOUNDS);
    const sum = placed.reduce((a, p) => a + areaOf(p.rect), 0);
    expect(sum).toBeCloseTo(BOUNDS.w * BOUNDS.h, 3);
  });

  it("gives a single item the whole canvas", () => {
    const placed = squarify([42], (v) => v, BOUNDS);
    expect(placed[0].rect).toEqual(BOUNDS);
  });

  it("handles an empty list", () => {
    expect(squarify([], () => 1, BOUNDS)).toEqual([]);
  });

  it("collapses zero-weight items to empty rects without disturbing the rest", () => {
    const items = [5, 0, 7];
    const placed = squarify(items, (v) => v, BOUNDS);
    expect(areaOf(placed[1].rect)).toBe(0);
    const full = BOUNDS.w * BOUNDS.h;
    expect(areaOf(placed[0].rect)).toBeCloseTo((5 / 12) * full, 4);
    expect(areaOf(placed[2].rect)).toBeCloseTo((7 / 12) * full, 4);
    checkInvariants(placed, BOUNDS);
  });

  it("respects an offset origin", () => {
    const bounds: Rect = { x: 50, y: 30, w: 200, h: 100 };
    const placed = squarify([1, 2, 3], (v) => v, bounds);
    checkInvariants(placed, bounds);
  });

  it("keeps aspect ratios reasonable for equal weights", () => {
    const placed = squarify([1, 1, 1, 1], (v) => v, { x: 0, y: 0, w: 400, h: 400 });
    for (const p of placed) {
      const ratio = Math.max(p.rect.w / p.rect.h, p.rect.h / p.rect.w);
      expect(ratio).toBeLessThanOrEqual(2 + EPS);
    }
  });
});
