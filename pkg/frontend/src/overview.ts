// Overview: summary statistics panel, degree bar chart, and the
// side-by-side network comparison. Both network panels share one
// sequential color scale over the union of the two score domains so the
// same score has the same color on either side.

import { OverviewResponse, SummaryReport } from "./api.js";
import { sequentialColor } from "./color.js";
import { el, svgEl, clear } from "./dom.js";
import { formatMetric, tooltipText } from "./format.js";
import { NetworkPanel } from "./network.js";
import { Tooltip } from "./tooltip.js";

export function renderSummaryTable(host: Element, report: SummaryReport): void {
  clear(host);
  const rows: [string, string][] = [
    ["nodes", String(report.n)],
    ["edges", String(report.m)],
    ["density", formatMetric(report.density)],
    ["average degree", formatMetric(report.average_degree)],
    ["clustering coefficient", formatMetric(report.clustering_coefficient)],
    ["triangles", String(report.triangle_count)],
    ["connected components", String(report.component_count)],
  ];
  const table = el("table", { class: "summary-table" });
  for (const [label, value] of rows) {
    const tr = el("tr");
    tr.appendChild(el("td", {}, label));
    tr.appendChild(el("td", { class: "value" }, value));
    table.appendChild(tr);
  }
  host.appendChild(table);
}

export function renderDegreeChart(host: Element, report: SummaryReport): void {
  clear(host);
  const W = 100;
  const H = 60;
  const svg = svgEl("svg", {
    class: "degree-chart",
    viewBox: `0 0 ${W} ${H}`,
    preserveAspectRatio: "none",
  });
  const bins = report.degree_histogram;
  const peak = Math.max(1, ...bins.map((b) => b.count));
  const barWidth = bins.length ? W / bins.length : W;
  bins.forEach((bin, i) => {
    const height = (bin.count / peak) * (H - 4);
    const bar = svgEl("rect", {
      x: i * barWidth + 0.5,
      y: H - height,
      width: Math.max(0.5, barWidth - 1),
      height,
      class: "degree-bar",
      "data-count": bin.count,
    });
    bar.appendChild(svgEl("title"));
    bar.querySelector("title")!.textContent = `degree ${formatMetric(bin.lo)}..${formatMetric(bin.hi)}: ${bin.count}`;
    svg.appendChild(bar);
  });
  host.appendChild(svg);
}

export function unionDomain(
  a: [number, number], b: [number, number],
): [number, number] {
  return [Math.min(a[0], b[0]), Math.max(a[1], b[1])];
}

export class OverviewComparison {
  readonly left: NetworkPanel;
  readonly right: NetworkPanel;

  constructor(
    leftHost: Element,
    rightHost: Element,
    tooltip: Tooltip,
  ) {
    const hover = (panel: "left" | "right") =>
      (id: string | null, event: MouseEvent | null) => {
        if (id === null || event === null) {
          tooltip.hide();
          return;
        }
        const score = this.scores[panel].get(id);
        if (score !== undefined) {
          tooltip.show(tooltipText(id, score), event);
        }
      };
    this.left = new NetworkPanel(leftHost, { onHover: hover("left") });
    this.right = new NetworkPanel(rightHost, { onHover: hover("right") });
  }

  private scores = {
    left: new Map<string, number>(),
    right: new Map<string, number>(),
  };

  render(leftData: OverviewResponse, rightData: OverviewResponse): void {
    const domain = unionDomain(leftData.color_domain, rightData.color_domain);
    for (const [panel, data, side] of [
      [this.left, leftData, "left"],
      [this.right, rightData, "right"],
    ] as const) {
      this.scores[side] = new Map(data.nodes.map((n) => [n.id, n.score]));
      panel.render(
        data.nodes.map((n) => ({
          id: n.id,
          x: n.x,
          y: n.y,
          fill: sequentialColor(n.score, domain),
          radius: 1.6,
          tooltip: tooltipText(n.id, n.score),
        })),
        data.edges,
      );
    }
  }
}
