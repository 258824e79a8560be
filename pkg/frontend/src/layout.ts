// Squarified treemap layout: greedy row packing that keeps cell aspect
// ratios close to 1 by laying each row along the shorter free side.

export interface Rect {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface Placed<T> {
  item: T;
  rect: Rect;
}

interface Scaled<T> {
  item: T;
  scaled: number;
  order: number;
}

function worstAspect(row: number[], side: number): number {
  const sum = row.reduce((a, b) => a + b, 0);
  if (sum === 0 || side === 0) return Infinity;
  let max = -Infinity;
  let min = Infinity;
  for (const r of row) {
    if (r > max) max = r;
    if (r < min) min = r;
  }
  const s2 = sum * sum;
  const w2 = side * side;
  return Math.max((w2 * max) / s2, s2 / (w2 * min));
}

export function squarify<T>(
  items: readonly T[],
  area: (item: T) => number,
  bounds: Rect,
): Placed<T>[] {
  const out: Placed<T>[] = new Array(items.length);
  const positive: Scaled<T>[] = [];
  let total = 0;
  items.forEach((item, order) => {
    const a = area(item);
    if (a > 0) {
      positive.push({ item, scaled: a, order });
      total += a;
    } else {
      out[order] = { item, rect: { x: bounds.x, y: bounds.y, w: 0, h: 0 } };
    }
  });
  if (total > 0) {
    const factor = (bounds.w * bounds.h) / total;
    for (const p of positive) p.scaled *= factor;
  }
  positive.sort((a, b) => b.scaled - a.scaled || a.order - b.order);

  let free: Rect = { ...bounds };
  let row: Scaled<T>[] = [];

  const layoutRow = (entries: Scaled<T>[], last: boolean) => {
    const sum = entries.reduce((a, e) => a + e.scaled, 0);
    if (sum === 0) return;
    const vertical = free.w >= free.h;
    const side = vertical ? free.h : free.w;
    const thickness = last ? (vertical ? free.w : free.h) : sum / side;
    let offset = 0;
    for (const e of entries) {
      const span = e.scaled / thickness;
      const rect: Rect = vertical
        ? { x: free.x, y: free.y + offset, w: thickness, h: span }
        : { x: free.x + offset, y: free.y, w: span, h: thickness };
      out[e.order] = { item: e.item, rect };
      offset += span;
    }
    if (vertical) {
      free = { x: free.x + thickness, y: free.y, w: free.w - thickness, h: free.h };
    } else {
      free = { x: free.x, y: free.y + thickness, w: free.w, h: free.h - thickness };
    }
  };

  for (const entry of positive) {
    const side = Math.min(free.w, free.h);
    const current = row.map((e) => e.scaled);
    if (
      row.length === 0 ||
      worstAspect([...current, entry.scaled], side) <= worstAspect(current, side)
    ) {
      row.push(entry);
    } else {
      layoutRow(row, false);
      row = [entry];
    }
  }
  if (row.length > 0) layoutRow(row, true);
  return out;
}
