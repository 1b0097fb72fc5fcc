// Typed client for the read-only fairness-audit API. The UI never computes
// scores itself; every number shown on screen comes from these endpoints.

export type Notion = "individual" | "group";

export interface FairnessConfig {
  notion: Notion;
  k: number;
  attribute?: string;
  value?: string;
}

export interface GroupConfigs {
  [attribute: string]: string[];
}

export interface DatasetDescriptor {
  id: string;
  name: string;
  n: number;
  m: number;
  embeddings: string[];
  configs: {
    individual_hops: number[];
    group_top_k: number[];
    group_attributes: GroupConfigs;
  };
}

export interface HistogramBin {
  lo: number;
  hi: number;
  count: number;
}

export interface SummaryReport {
  n: number;
  m: number;
  density: number;
  average_degree: number;
  clustering_coefficient: number;
  triangle_count: number;
  component_count: number;
  degree_histogram: HistogramBin[];
}

export interface OverviewNode {
  id: string;
  x: number;
  y: number;
  score: number;
}

export interface OverviewResponse {
  dataset: string;
  embedding: string;
  config: FairnessConfig;
  color_domain: [number, number];
  nodes: OverviewNode[];
  edges: [string, string][];
}

export interface ScoreRow {
  id: string;
  score?: number;
  raw?: number;
  normalized?: number;
}

export interface ScoresResponse {
  rows: ScoreRow[];
  sort: string;
  dir: string;
}

export interface SubgraphNode {
  id: string;
  annotation: number | string;
}

export interface DiagnosticBundle {
  focal: string;
  focal_score: number;
  config: FairnessConfig;
  subgraph: { nodes: SubgraphNode[]; edges: [string, string][] };
  points: { id: string; x: number; y: number }[];
  context_extents: { x: [number, number]; y: [number, number] };
  focal_extents: { x: [number, number]; y: [number, number] };
}

export interface FetchHooks {
  onStart?: () => void;
  onSettle?: () => void;
}

function configParams(embedding: string, config: FairnessConfig): URLSearchParams {
  const params = new URLSearchParams({ embedding, notion: config.notion, k: String(config.k) });
  if (config.notion === "group") {
    params.set("attribute", config.attribute ?? "");
    params.set("value", config.value ?? "");
  }
  return params;
}

export class ApiClient {
  constructor(private base: string, private hooks: FetchHooks = {}) {}

  // Returns the raw body alongside the parsed value so callers can compare
  // server responses byte-for-byte (the diagnose table relies on this).
  async getText(path: string): Promise<string> {
    this.hooks.onStart?.();
    try {
      const resp = await fetch(this.base + path);
      const text = await resp.text();
      if (!resp.ok) {
        let detail = text;
        try {
          detail = JSON.parse(text).detail ?? text;
        } catch {
          // not JSON: report the body as-is
        }
        throw new Error(`${resp.status}: ${detail}`);
      }
      return text;
    } finally {
      this.hooks.onSettle?.();
    }
  }

  private async getJson<T>(path: string): Promise<T> {
    return JSON.parse(await this.getText(path)) as T;
  }

  datasets(): Promise<DatasetDescriptor[]> {
    return this.getJson("/datasets");
  }

  summary(dataset: string): Promise<SummaryReport> {
    return this.getJson(`/datasets/${encodeURIComponent(dataset)}/summary`);
  }

  overview(dataset: string, embedding: string, config: FairnessConfig): Promise<OverviewResponse> {
    const params = configParams(embedding, config);
    return this.getJson(`/datasets/${encodeURIComponent(dataset)}/overview?${params}`);
  }

  scoresPath(dataset: string, embedding: string, config: FairnessConfig, sort: string, dir: string): string {
    const params = configParams(embedding, config);
    params.set("sort", sort);
    params.set("dir", dir);
    return `/datasets/${encodeURIComponent(dataset)}/scores?${params}`;
  }

  async scoresRaw(
    dataset: string, embedding: string, config: FairnessConfig, sort: string, dir: string,
  ): Promise<{ text: string; body: ScoresResponse }> {
    const text = await this.getText(this.scoresPath(dataset, embedding, config, sort, dir));
    return { text, body: JSON.parse(text) as ScoresResponse };
  }

  diagnose(
    dataset: string, node: string, embedding: string, config: FairnessConfig,
  ): Promise<DiagnosticBundle> {
    const params = configParams(embedding, config);
    return this.getJson(
      `/datasets/${encodeURIComponent(dataset)}/diagnose/${encodeURIComponent(node)}?${params}`,
    );
  }
}
