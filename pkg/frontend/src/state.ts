// Single mutable view state; main.ts owns all transitions.

import { DatasetDescriptor, FairnessConfig } from "./api.js";

export interface ViewState {
  datasets: DatasetDescriptor[];
  dataset: DatasetDescriptor | null;
  leftEmbedding: string | null;
  rightEmbedding: string | null;
  config: FairnessConfig;
  focal: string | null;
  sort: "id" | "score";
  dir: "asc" | "desc";
  brushSelection: Set<string>;
}

export function initialState(): ViewState {
  return {
    datasets: [],
    dataset: null,
    leftEmbedding: null,
    rightEmbedding: null,
    config: { notion: "individual", k: 1 },
    focal: null,
    sort: "score",
    dir: "desc",
    brushSelection: new Set(),
  };
}

// First valid configuration for a dataset, preferring the individual notion.
export function defaultConfig(descriptor: DatasetDescriptor): FairnessConfig {
  const hops = descriptor.configs.individual_hops;
  if (hops.length > 0) {
    return { notion: "individual", k: hops[0] };
  }
  const attrs = Object.keys(descriptor.configs.group_attributes).sort();
  const attribute = attrs[0];
  return {
    notion: "group",
    k: descriptor.configs.group_top_k[0],
    attribute,
    value: descriptor.configs.group_attributes[attribute]?.[0],
  };
}
