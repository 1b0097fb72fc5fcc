// Projection scatterplot with a rectangular brush, plus the compact
// context legend that conveys where the focal subset sits inside the
// global projection.

import { svgEl, clear } from "./dom.js";
import { HIGHLIGHT_COLOR } from "./color.js";
import { LabeledPoint, BrushRect, brushSelect, normalizeRect } from "./brush.js";
import { linearScale, padded, LinearScale } from "./scale.js";

export interface ScatterPointDatum extends LabeledPoint {
  fill: string;
  radius: number;
  tooltip: string;
}

export interface ScatterOptions {
  onHover?: (id: string | null, event: MouseEvent | null) => void;
  onBrush?: (ids: Set<string>) => void;
}

const W = 100;
const H = 100;

export class ScatterPanel {
  readonly svg: SVGSVGElement;
  private circles = new Map<string, SVGCircleElement>();
  private points: LabeledPoint[] = [];
  private sx: LinearScale = linearScale([0, 1], [0, W]);
  private sy: LinearScale = linearScale([0, 1], [H, 0]);
  private brushStart: [number, number] | null = null;
  private brushRectEl: SVGRectElement | null = null;

  constructor(host: Element, private options: ScatterOptions = {}) {
    this.svg = svgEl("svg", {
      class: "scatter-panel",
      viewBox: `0 0 ${W} ${H}`,
      preserveAspectRatio: "xMidYMid meet",
    });
    host.appendChild(this.svg);
    this.svg.addEventListener("mousedown", (e) => this.beginBrush(e as MouseEvent));
    this.svg.addEventListener("mousemove", (e) => this.moveBrush(e as MouseEvent));
    this.svg.addEventListener("mouseup", () => this.endBrush());
  }

  render(points: ScatterPointDatum[], extents?: { x: [number, number]; y: [number, number] }): void {
    clear(this.svg);
    this.circles.clear();
    this.points = points.map((p) => ({ id: p.id, x: p.x, y: p.y }));
    const xDomain = padded(extents?.x ?? [Math.min(...points.map((p) => p.x)), Math.max(...points.map((p) => p.x))]);
    const yDomain = padded(extents?.y ?? [Math.min(...points.map((p) => p.y)), Math.max(...points.map((p) => p.y))]);
    this.sx = linearScale(xDomain, [0, W]);
    this.sy = linearScale(yDomain, [H, 0]);
    const layer = svgEl("g", { class: "points" });
    for (const p of points) {
      const circle = svgEl("circle", {
        cx: this.sx(p.x),
        cy: this.sy(p.y),
        r: p.radius,
        fill: p.fill,
        class: "point",
        "data-id": p.id,
      });
      circle.addEventListener("mouseenter", (event) =>
        this.options.onHover?.(p.id, event as MouseEvent),
      );
      circle.addEventListener("mouseleave", () => this.options.onHover?.(null, null));
      layer.appendChild(circle);
      this.circles.set(p.id, circle);
    }
    this.svg.appendChild(layer);
  }

  // The brush operates in data coordinates so it can be driven headlessly;
  // mouse handlers below translate pixels into the same call.
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

  private svgCoords(event: MouseEvent): [number, number] {
    const rect = this.svg.getBoundingClientRect();
    const px = rect.width ? ((event.clientX - rect.left) / rect.width) * W : 0;
    const py = rect.height ? ((event.clientY - rect.top) / rect.height) * H : 0;
    return [px, py];
  }

  private beginBrush(event: MouseEvent): void {
    this.brushStart = this.svgCoords(event);
    this.brushRectEl?.remove();
    this.brushRectEl = svgEl("rect", { class: "brush", fill: "rgba(100,150,220,0.2)" });
    this.svg.appendChild(this.brushRectEl);
  }

  private moveBrush(event: MouseEvent): void {
    if (!this.brushStart || !this.brushRectEl) {
      return;
    }
    const [x0, y0] = this.brushStart;
    const [x1, y1] = this.svgCoords(event);
    this.brushRectEl.setAttribute("x", String(Math.min(x0, x1)));
    this.brushRectEl.setAttribute("y", String(Math.min(y0, y1)));
    this.brushRectEl.setAttribute("width", String(Math.abs(x1 - x0)));
    this.brushRectEl.setAttribute("height", String(Math.abs(y1 - y0)));
    this.applyBrushRect(this.pixelRectToData(x0, y0, x1, y1));
  }

  private endBrush(): void {
    this.brushStart = null;
    this.brushRectEl?.remove();
    this.brushRectEl = null;
  }

  private pixelRectToData(x0: number, y0: number, x1: number, y1: number): BrushRect {
    return normalizeRect(
      this.sx.invert(x0), this.sy.invert(y0), this.sx.invert(x1), this.sy.invert(y1),
    );
  }
}

// Context legend: the global projection's bounding box drawn to scale with
// the focal subset's box highlighted inside it, plus the focal points.
export function renderContextLegend(
  host: Element,
  context: { x: [number, number]; y: [number, number] },
  focal: { x: [number, number]; y: [number, number] },
  points: LabeledPoint[],
): void {
  clear(host);
  const svg = svgEl("svg", {
    class: "context-legend",
    viewBox: `0 0 ${W} ${H}`,
    preserveAspectRatio: "xMidYMid meet",
  });
  const sx = linearScale(padded(context.x, 0.04), [0, W]);
  const sy = linearScale(padded(context.y, 0.04), [H, 0]);
  svg.appendChild(
    svgEl("rect", {
      x: sx(context.x[0]),
      y: sy(context.y[1]),
      width: sx(context.x[1]) - sx(context.x[0]),
      height: sy(context.y[0]) - sy(context.y[1]),
      class: "context-box",
    }),
  );
  svg.appendChild(
    svgEl("rect", {
      x: sx(focal.x[0]),
      y: sy(focal.y[1]),
      width: Math.max(1, sx(focal.x[1]) - sx(focal.x[0])),
      height: Math.max(1, sy(focal.y[0]) - sy(focal.y[1])),
      class: "focal-box",
    }),
  );
  for (const p of points) {
    svg.appendChild(
      svgEl("circle", { cx: sx(p.x), cy: sy(p.y), r: 1.2, class: "context-point" }),
    );
  }
  host.appendChild(svg);
}
