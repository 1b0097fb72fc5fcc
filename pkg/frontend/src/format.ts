// Text shown to the user; tests assert these exact strings.

export function tooltipText(id: string, score: number): string {
  return `${id}: ${score.toFixed(4)}`;
}

export function hopLabel(hop: number): string {
  return hop === 0 ? "focal" : `${hop} hop${hop === 1 ? "" : "s"}`;
}

export function formatMetric(value: number): string {
  if (Number.isInteger(value)) {
    return String(value);
  }
  return value.toPrecision(4);
}

// On-demand definitions surfaced in tooltips next to the notion selector.
export const NOTION_DEFINITIONS: Record<string, string> = {
  individual:
    "Individual fairness: sum of squared embedding distances from a node to " +
    "its k-hop neighbors, divided by degree and scaled so the worst node is 1. " +
    "Higher means the node sits farther from its own neighborhood.",
  group:
    "Group fairness: 1/|Z| minus the share of the node's top-k recommended " +
    "(non-connected, most similar) nodes carrying the chosen attribute value. " +
    "0 is equal representation; positive means under-representation.",
};
