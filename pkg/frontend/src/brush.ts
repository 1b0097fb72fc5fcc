// Brush geometry in data coordinates, shared by the scatterplot and the
// subgraph panel so a selection in one can be mirrored in the other.

export interface LabeledPoint {
  id: string;
  x: number;
  y: number;
}

export interface BrushRect {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export function normalizeRect(ax: number, ay: number, bx: number, by: number): BrushRect {
  return {
    x0: Math.min(ax, bx),
    y0: Math.min(ay, by),
    x1: Math.max(ax, bx),
    y1: Math.max(ay, by),
  };
}

export function brushSelect(points: LabeledPoint[], rect: BrushRect): Set<string> {
  const out = new Set<string>();
  for (const p of points) {
    if (p.x >= rect.x0 && p.x <= rect.x1 && p.y >= rect.y0 && p.y <= rect.y1) {
      out.add(p.id);
    }
  }
  return out;
}
