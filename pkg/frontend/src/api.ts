// Thin client for the summary service. Uses relative URLs so the
// bundle works wherever the service mounts it.

import type { QueryRecord, TreemapPayload } from "./types.js";

export async function fetchTreemap(summaryId: string): Promise<TreemapPayload> {
  const res = await fetch(`/summaries/${encodeURIComponent(summaryId)}/treemap`);
  if (!res.ok) {
    throw new Error(`treemap request failed: ${res.status}`);
  }
  return (await res.json()) as TreemapPayload;
}

let inflight: AbortController | null = null;

// Single-flight query: firing a new query cancels the one still in the
// air, so a slow response can never overwrite a newer result.
export async function postQuery(
  summaryId: string,
  query: string,
  region: number[] | null,
  compareExact = false,
): Promise<QueryRecord> {
  if (inflight) inflight.abort();
  const ctrl = new AbortController();
  inflight = ctrl;
  try {
    const body: Record<string, unknown> = { query, compare_exact: compareExact };
    if (region !== null) body.region = region;
    const res = await fetch(`/summaries/${encodeURIComponent(summaryId)}/query`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal: ctrl.signal,
    });
    if (!res.ok) {
      let detail = `query request failed: ${res.status}`;
      try {
        const payload = (await res.json()) as { detail?: string };
        if (payload.detail) detail = payload.detail;
      } catch {
        // non-JSON error body, keep the status line
      }
      throw new Error(detail);
    }
    return (await res.json()) as QueryRecord;
  } finally {
    if (inflight === ctrl) inflight = null;
  }
}
