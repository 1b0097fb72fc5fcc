// Diagnose view: sortable score table, the focal node's relevant subgraph,
// the matching projected points, and the context legend. The subgraph and
// scatter panels are linked: brushing either one highlights the same node
// id set in both.

import { ApiClient, DiagnosticBundle, FairnessConfig, OverviewResponse, ScoreRow } from "./api.js";
import { annotationColor, FOCAL_COLOR } from "./color.js";
import { el, clear } from "./dom.js";
import { tooltipText, hopLabel } from "./format.js";
import { NetworkPanel } from "./network.js";
import { ScatterPanel, renderContextLegend } from "./scatter.js";
import { ScoreTable, SortDir, SortKey } from "./table.js";
import { Tooltip } from "./tooltip.js";
import { BrushRect } from "./brush.js";

export interface DiagnoseHosts {
  table: Element;
  subgraph: Element;
  scatter: Element;
  legend: Element;
  caption: Element;
}

const FOCAL_RADIUS = 3.2;
const NODE_RADIUS = 1.9;

export class DiagnoseView {
  readonly table: ScoreTable;
  readonly subgraphPanel: NetworkPanel;
  readonly scatterPanel: ScatterPanel;
  private bundle: DiagnosticBundle | null = null;
  private scoreById = new Map<string, number>();
  private lastScoresText = "";
  private syncing = false;

  constructor(
    private api: ApiClient,
    private hosts: DiagnoseHosts,
    tooltip: Tooltip,
    private onFocalRequest: (id: string) => void,
    private onSortRequest: (sort: SortKey, dir: SortDir) => void,
  ) {
    this.table = new ScoreTable(hosts.table, {
      onSortRequest: (sort, dir) => this.onSortRequest(sort, dir),
      onSelect: (id) => this.onFocalRequest(id),
    });
    const hover = (id: string | null, event: MouseEvent | null) => {
      if (id === null || event === null) {
        tooltip.hide();
        return;
      }
      const score = this.scoreById.get(id);
      const annotation = this.annotationOf(id);
      const base = score !== undefined ? tooltipText(id, score) : id;
      tooltip.show(annotation === null ? base : `${base} (${annotation})`, event);
    };
    // brushing one panel mirrors the same id set in the other
    this.subgraphPanel = new NetworkPanel(hosts.subgraph, {
      onHover: hover,
      onBrush: (ids) => this.mirror(this.scatterPanel, ids),
    });
    this.scatterPanel = new ScatterPanel(hosts.scatter, {
      onHover: hover,
      onBrush: (ids) => this.mirror(this.subgraphPanel, ids),
    });
  }

  private mirror(target: { highlight(ids: Set<string>): void }, ids: Set<string>): void {
    if (this.syncing) {
      return;
    }
    this.syncing = true;
    target.highlight(ids);
    this.syncing = false;
  }

  setScores(rows: ScoreRow[], sort: SortKey, dir: SortDir, rawText: string): void {
    this.lastScoresText = rawText;
    this.scoreById = new Map(
      rows.map((r) => [r.id, (r.normalized ?? r.score ?? 0) as number]),
    );
    this.table.setRows(rows, sort, dir);
  }

  scoresText(): string {
    return this.lastScoresText;
  }

  renderBundle(
    bundle: DiagnosticBundle,
    layoutPositions: Map<string, { x: number; y: number }>,
    attributeDomain: string[] | null,
  ): void {
    this.bundle = bundle;
    this.table.setSelected(bundle.focal);

    const nodes = bundle.subgraph.nodes.map((node) => {
      const pos = layoutPositions.get(node.id) ?? { x: 0.5, y: 0.5 };
      const isFocal = node.id === bundle.focal;
      return {
        id: node.id,
        x: pos.x,
        y: pos.y,
        fill: isFocal ? FOCAL_COLOR : annotationColor(node.annotation, attributeDomain),
        radius: isFocal ? FOCAL_RADIUS : NODE_RADIUS,
        tooltip: node.id,
      };
    });
    this.subgraphPanel.render(nodes, bundle.subgraph.edges);

    const annotations = new Map(bundle.subgraph.nodes.map((n) => [n.id, n.annotation]));
    this.scatterPanel.render(
      bundle.points.map((p) => {
        const isFocal = p.id === bundle.focal;
        const annotation = annotations.get(p.id);
        return {
          id: p.id,
          x: p.x,
          y: p.y,
          fill: isFocal
            ? FOCAL_COLOR
            : annotationColor(annotation ?? 0, attributeDomain),
          radius: isFocal ? FOCAL_RADIUS : NODE_RADIUS,
          tooltip: p.id,
        };
      }),
      bundle.focal_extents,
    );
    renderContextLegend(
      this.hosts.legend, bundle.context_extents, bundle.focal_extents, bundle.points,
    );
    clear(this.hosts.caption);
    this.hosts.caption.appendChild(
      el(
        "p",
        { class: "diagnose-caption" },
        `focal node ${bundle.focal}: score ${bundle.focal_score.toFixed(4)}; ` +
          `${bundle.subgraph.nodes.length} nodes in the relevant subgraph`,
      ),
    );
  }

  // Select everything in the scatterplot; used by the "select all" button
  // and exercised directly by the contract tests.
  brushAll(): Set<string> {
    if (!this.bundle) {
      return new Set();
    }
    const rect: BrushRect = {
      x0: this.bundle.context_extents.x[0],
      y0: this.bundle.context_extents.y[0],
      x1: this.bundle.context_extents.x[1],
      y1: this.bundle.context_extents.y[1],
    };
    return this.scatterPanel.applyBrushRect(rect);
  }

  clearBrush(): void {
    this.scatterPanel.applyBrushRect(null);
  }

  private annotationOf(id: string): string | null {
    if (!this.bundle) {
      return null;
    }
    const node = this.bundle.subgraph.nodes.find((n) => n.id === id);
    if (!node) {
      return null;
    }
    if (typeof node.annotation === "number") {
      return hopLabel(node.annotation);
    }
    return `${this.bundle.config.attribute ?? "label"} = ${node.annotation}`;
  }

  // Load everything the view needs for one focal node.
  async load(
    dataset: string,
    embedding: string,
    config: FairnessConfig,
    focal: string,
    overview: OverviewResponse,
    attributeDomain: string[] | null,
  ): Promise<void> {
    const bundle = await this.api.diagnose(dataset, focal, embedding, config);
    const positions = new Map(
      overview.nodes.map((n) => [n.id, { x: n.x, y: n.y }]),
    );
    this.renderBundle(bundle, positions, attributeDomain);
  }
}
