// Color encodings. Scores use a single-hue light-to-dark sequential ramp
// (dark = more unfair); red is reserved for the focal node. Hop distances
// get an ordinal scale, attribute values a categorical one.

export const FOCAL_COLOR = "#d62728";
export const HIGHLIGHT_COLOR = "#ff9f1c";

// Pure function of (score, domain): equal inputs always yield the same
// string, which is what keeps the two overview panels comparable.
export function sequentialColor(score: number, domain: [number, number]): string {
  const [lo, hi] = domain;
  let t = hi > lo ? (score - lo) / (hi - lo) : 0;
  t = Math.min(1, Math.max(0, t));
  const lightness = 92 - 62 * t;
  return `hsl(215, 65%, ${lightness.toFixed(2)}%)`;
}

const HOP_COLORS = ["#9ecae1", "#4292c6", "#2171b5", "#08519c", "#08306b"];

export function hopColor(hop: number): string {
  if (hop <= 0) {
    return FOCAL_COLOR;
  }
  return HOP_COLORS[Math.min(hop - 1, HOP_COLORS.length - 1)];
}

const CATEGORY_COLORS = [
  "#e6c229", "#7eb26d", "#8e6bbf", "#5fa8d3", "#d1726b", "#6b7f94",
];

export function categoryColor(index: number): string {
  return CATEGORY_COLORS[((index % CATEGORY_COLORS.length) + CATEGORY_COLORS.length) % CATEGORY_COLORS.length];
}

// Annotation color for a diagnose-view node: hop count for the individual
// notion, attribute value (looked up in the domain) for the group notion.
export function annotationColor(
  annotation: number | string, domain: string[] | null,
): string {
  if (typeof annotation === "number") {
    return hopColor(annotation);
  }
  const index = domain ? domain.indexOf(annotation) : -1;
  return categoryColor(index >= 0 ? index : 0);
}
