// Shapes of the service's JSON payloads, mirrored field for field.

export interface TopLPercent {
  label: string;
  percent: number;
}

export interface CellTooltip {
  eweight: number;
  supernode_count: number;
  top_lpercent: TopLPercent[];
}

export interface Cell {
  id: number;
  area: number;
  label: string | null;
  color: string;
  tooltip: CellTooltip;
}

export interface Link {
  src: number;
  dst: number;
  label: string;
  weight: number;
  color: string;
}

export interface LegendEntry {
  label: string;
  color: string;
  total_weight: number;
}

export interface TreemapPayload {
  summary_id: string;
  graph_id: string;
  mode: string;
  cells: Cell[];
  links: Link[];
  legend: LegendEntry[];
}

export interface ExactComparison {
  value: number;
  relative_error_pct: number;
  exact_us: number;
  approx_us: number;
  time_gain_pct: number | null;
}

export interface QueryRecord {
  query: string;
  estimate: number;
  region: number[] | null;
  exact?: ExactComparison;
}

export interface QueryRequest {
  query: string;
  region?: number[];
  node_estimate?: string;
  compare_exact?: boolean;
}
