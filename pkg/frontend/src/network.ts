// SVG network panel: positioned nodes colored by score or annotation,
// a filtered edge set, hover tooltips, wheel zoom, and brush-driven
// highlighting. Used by both the overview comparison and the diagnose
// subgraph view.

import { HIGHLIGHT_COLOR } from "./color.js";
import { svgEl, clear } from "./dom.js";
import { LabeledPoint, BrushRect, brushSelect } from "./brush.js";

export interface NetworkNodeDatum {
  id: string;
  x: number;
  y: number;
  fill: string;
  radius: number;
  tooltip: string;
}

export interface NetworkPanelOptions {
  onHover?: (id: string | null, event: MouseEvent | null) => void;
  onBrush?: (ids: Set<string>) => void;
}

const VIEW = 100; // internal coordinate system; positions arrive in [0, 1]

export class NetworkPanel {
  readonly svg: SVGSVGElement;
  private circles = new Map<string, SVGCircleElement>();
  private baseFill = new Map<string, string>();
  private points: LabeledPoint[] = [];
  private zoomBox = { x: 0, y: 0, size: VIEW };

  constructor(host: Element, private options: NetworkPanelOptions = {}) {
    this.svg = svgEl("svg", {
      class: "network-panel",
      viewBox: `0 0 ${VIEW} ${VIEW}`,
      preserveAspectRatio: "xMidYMid meet",
    });
    host.appendChild(this.svg);
    this.svg.addEventListener("wheel", (event) => this.handleWheel(event as WheelEvent));
    this.svg.addEventListener("mousedown", (event) => {
      this.panFrom = [(event as MouseEvent).clientX, (event as MouseEvent).clientY];
    });
    this.svg.addEventListener("mousemove", (event) => this.handlePan(event as MouseEvent));
    this.svg.addEventListener("mouseup", () => (this.panFrom = null));
    this.svg.addEventListener("mouseleave", () => (this.panFrom = null));
  }

  private panFrom: [number, number] | null = null;

  private handlePan(event: MouseEvent): void {
    if (!this.panFrom || this.zoomBox.size >= VIEW) {
      return;
    }
    const rect = this.svg.getBoundingClientRect();
    const unit = this.zoomBox.size / (rect.width || VIEW);
    const dx = (event.clientX - this.panFrom[0]) * unit;
    const dy = (event.clientY - this.panFrom[1]) * unit;
    this.panFrom = [event.clientX, event.clientY];
    this.zoomBox.x = Math.max(0, Math.min(VIEW - this.zoomBox.size, this.zoomBox.x - dx));
    this.zoomBox.y = Math.max(0, Math.min(VIEW - this.zoomBox.size, this.zoomBox.y - dy));
    this.svg.setAttribute(
      "viewBox",
      `${this.zoomBox.x} ${this.zoomBox.y} ${this.zoomBox.size} ${this.zoomBox.size}`,
    );
  }

  render(nodes: NetworkNodeDatum[], edges: [string, string][]): void {
    clear(this.svg);
    this.circles.clear();
    this.baseFill.clear();
    this.resetZoom();
    const place = new Map<string, [number, number]>();
    this.points = nodes.map((n) => ({ id: n.id, x: n.x, y: n.y }));
    for (const node of nodes) {
      // flip y so larger layout y draws upward
      place.set(node.id, [node.x * VIEW, (1 - node.y) * VIEW]);
    }
    const edgeLayer = svgEl("g", { class: "edges" });
    for (const [a, b] of edges) {
      const pa = place.get(a);
      const pb = place.get(b);
      if (!pa || !pb) {
        continue;
      }
      edgeLayer.appendChild(
        svgEl("line", { x1: pa[0], y1: pa[1], x2: pb[0], y2: pb[1], class: "edge" }),
      );
    }
    this.svg.appendChild(edgeLayer);
    const nodeLayer = svgEl("g", { class: "nodes" });
    for (const node of nodes) {
      const [cx, cy] = place.get(node.id)!;
      const circle = svgEl("circle", {
        cx,
        cy,
        r: node.radius,
        fill: node.fill,
        class: "node",
        "data-id": node.id,
      });
      circle.addEventListener("mouseenter", (event) =>
        this.options.onHover?.(node.id, event as MouseEvent),
      );
      circle.addEventListener("mouseleave", () => this.options.onHover?.(null, null));
      nodeLayer.appendChild(circle);
      this.circles.set(node.id, circle);
      this.baseFill.set(node.id, node.fill);
    }
    this.svg.appendChild(nodeLayer);
  }

  // Brushing in unit coordinates; mirrors the scatterplot's contract.
  applyBrushRect(rect: BrushRect | null): Set<string> {
    const ids = rect ? brushSelect(this.points, rect) : new Set<string>();
    this.highlight(ids);
    this.options.onBrush?.(ids);
    return ids;
  }

  highlight(ids: Set<string>): void {
    for (const [id, circle] of this.circles) {
      if (ids.has(id)) {
        circle.classList.add("highlighted");
        circle.setAttribute("stroke", HIGHLIGHT_COLOR);
        circle.setAttribute("stroke-width", "1.5");
      } else {
        circle.classList.remove("highlighted");
        circle.removeAttribute("stroke");
        circle.removeAttribute("stroke-width");
      }
    }
  }

  highlightedIds(): Set<string> {
    const out = new Set<string>();
    for (const [id, circle] of this.circles) {
      if (circle.classList.contains("highlighted")) {
        out.add(id);
      }
    }
    return out;
  }

  fillOf(id: string): string | null {
    return this.circles.get(id)?.getAttribute("fill") ?? null;
  }

  private resetZoom(): void {
    this.zoomBox = { x: 0, y: 0, size: VIEW };
    this.svg.setAttribute("viewBox", `0 0 ${VIEW} ${VIEW}`);
  }

  private handleWheel(event: WheelEvent): void {
    event.preventDefault();
    const factor = event.deltaY < 0 ? 0.85 : 1 / 0.85;
    const size = Math.min(VIEW, Math.max(VIEW / 40, this.zoomBox.size * factor));
    // zoom about the box center; pixel-accurate anchoring needs layout, which
    // keeps this identical between browser and headless runs
    const cx = this.zoomBox.x + this.zoomBox.size / 2;
    const cy = this.zoomBox.y + this.zoomBox.size / 2;
    this.zoomBox = {
      x: Math.max(0, Math.min(VIEW - size, cx - size / 2)),
      y: Math.max(0, Math.min(VIEW - size, cy - size / 2)),
      size,
    };
    this.svg.setAttribute(
      "viewBox",
      `${this.zoomBox.x} ${this.zoomBox.y} ${size} ${size}`,
    );
  }
}
