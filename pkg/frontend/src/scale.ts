// Minimal linear scales for SVG placement.

export interface LinearScale {
  (value: number): number;
  invert(pixel: number): number;
}

export function linearScale(domain: [number, number], range: [number, number]): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as LinearScale;
  scale.invert = (pixel: number) => d0 + ((pixel - r0) / (r1 - r0 || 1)) * span;
  return scale;
}

export function extentOf(values: number[]): [number, number] {
  if (values.length === 0) {
    return [0, 1];
  }
  let lo = values[0];
  let hi = values[0];
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return [lo, hi];
}

// Symmetric padding so points do not sit on the panel border.
export function padded(extent: [number, number], fraction = 0.08): [number, number] {
  const [lo, hi] = extent;
  const pad = (hi - lo || 1) * fraction;
  return [lo - pad, hi + pad];
}
