// Application wiring: selector state, data loading, and view refresh.

import { ApiClient, DatasetDescriptor, FairnessConfig, OverviewResponse } from "./api.js";
import { DiagnoseView } from "./diagnose.js";
import { el, clear } from "./dom.js";
import { NOTION_DEFINITIONS } from "./format.js";
import { OverviewComparison, renderDegreeChart, renderSummaryTable } from "./overview.js";
import { LoadingTracker } from "./spinner.js";
import { initialState, defaultConfig, ViewState } from "./state.js";
import { Tooltip } from "./tooltip.js";

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node;
}

function fillSelect(select: HTMLSelectElement, values: string[], selected?: string): void {
  clear(select);
  for (const value of values) {
    const option = el("option", { value }, value);
    if (value === selected) {
      option.setAttribute("selected", "selected");
    }
    select.appendChild(option);
  }
}

export function bootstrap(apiBase = ""): void {
  const tracker = new LoadingTracker(byId("spinner"), byId("banner"));
  const api = new ApiClient(apiBase, { onStart: tracker.onStart, onSettle: tracker.onSettle });
  const tooltip = new Tooltip(document.body);
  const state: ViewState = initialState();

  const datasetSel = byId("dataset-select") as HTMLSelectElement;
  const leftSel = byId("left-embedding") as HTMLSelectElement;
  const rightSel = byId("right-embedding") as HTMLSelectElement;
  const notionSel = byId("notion-select") as HTMLSelectElement;
  const kSel = byId("k-select") as HTMLSelectElement;
  const attrSel = byId("attribute-select") as HTMLSelectElement;
  const valueSel = byId("value-select") as HTMLSelectElement;
  const diagSel = byId("diagnose-embedding") as HTMLSelectElement;
  byId("notion-info").setAttribute(
    "title",
    `${NOTION_DEFINITIONS.individual}\n\n${NOTION_DEFINITIONS.group}`,
  );

  const comparison = new OverviewComparison(byId("panel-left"), byId("panel-right"), tooltip);
  const diagnose = new DiagnoseView(
    api,
    {
      table: byId("diag-table"),
      subgraph: byId("diag-subgraph"),
      scatter: byId("diag-scatter"),
      legend: byId("diag-legend"),
      caption: byId("diag-caption"),
    },
    tooltip,
    (id) => {
      state.focal = id;
      void refreshDiagnose();
    },
    (sort, dir) => {
      state.sort = sort;
      state.dir = dir;
      void refreshScores();
    },
  );
  byId("brush-all").addEventListener("click", () => {
    state.brushSelection = diagnose.brushAll();
  });
  byId("brush-clear").addEventListener("click", () => {
    diagnose.clearBrush();
    state.brushSelection = new Set();
  });

  let lastOverview: { left: OverviewResponse; right: OverviewResponse } | null = null;

  function currentConfig(): FairnessConfig {
    return { ...state.config };
  }

  function blankViews(): void {
    for (const id of ["panel-left", "panel-right", "diag-subgraph", "diag-scatter", "diag-legend"]) {
      const host = byId(id);
      for (const svg of host.querySelectorAll("svg")) {
        clear(svg);
      }
    }
  }

  function attributeDomain(): string[] | null {
    if (state.config.notion !== "group" || !state.dataset || !state.config.attribute) {
      return null;
    }
    return state.dataset.configs.group_attributes[state.config.attribute] ?? null;
  }

  function syncConfigSelectors(): void {
    const descriptor = state.dataset;
    if (!descriptor) {
      return;
    }
    const isGroup = state.config.notion === "group";
    byId("group-config").classList.toggle("hidden", !isGroup);
    const ks = isGroup ? descriptor.configs.group_top_k : descriptor.configs.individual_hops;
    fillSelect(kSel, ks.map(String), String(state.config.k));
    if (isGroup) {
      const attrs = Object.keys(descriptor.configs.group_attributes).sort();
      fillSelect(attrSel, attrs, state.config.attribute);
      const values = state.config.attribute
        ? descriptor.configs.group_attributes[state.config.attribute] ?? []
        : [];
      fillSelect(valueSel, values, state.config.value);
    }
  }

  async function refreshScores(): Promise<void> {
    if (!state.dataset || !diagSel.value) {
      return;
    }
    try {
      const { text, body } = await api.scoresRaw(
        state.dataset.id, diagSel.value, currentConfig(), state.sort, state.dir,
      );
      diagnose.setScores(body.rows, state.sort as "id" | "score", state.dir, text);
    } catch (err) {
      tracker.fail(String(err));
    }
  }

  async function refreshDiagnose(): Promise<void> {
    if (!state.dataset || !state.focal || !lastOverview) {
      return;
    }
    const side = diagSel.value === state.rightEmbedding ? "right" : "left";
    try {
      await diagnose.load(
        state.dataset.id,
        diagSel.value,
        currentConfig(),
        state.focal,
        lastOverview[side],
        attributeDomain(),
      );
    } catch (err) {
      tracker.fail(String(err));
    }
  }

  async function refreshAll(): Promise<void> {
    const descriptor = state.dataset;
    if (!descriptor || !state.leftEmbedding || !state.rightEmbedding) {
      return;
    }
    syncConfigSelectors();
    try {
      const [summary, left, right] = await Promise.all([
        api.summary(descriptor.id),
        api.overview(descriptor.id, state.leftEmbedding, currentConfig()),
        api.overview(descriptor.id, state.rightEmbedding, currentConfig()),
      ]);
      renderSummaryTable(byId("summary-table"), summary);
      renderDegreeChart(byId("degree-chart"), summary);
      comparison.render(left, right);
      byId("caption-left").textContent = state.leftEmbedding;
      byId("caption-right").textContent = state.rightEmbedding;
      lastOverview = { left, right };
      await refreshScores();
      if (state.focal) {
        await refreshDiagnose();
      }
    } catch (err) {
      blankViews();
      tracker.fail(String(err));
    }
  }

  function selectDataset(descriptor: DatasetDescriptor): void {
    state.dataset = descriptor;
    state.focal = null;
    state.config = defaultConfig(descriptor);
    state.leftEmbedding = descriptor.embeddings[0] ?? null;
    state.rightEmbedding = descriptor.embeddings[1] ?? descriptor.embeddings[0] ?? null;
    fillSelect(leftSel, descriptor.embeddings, state.leftEmbedding ?? undefined);
    fillSelect(rightSel, descriptor.embeddings, state.rightEmbedding ?? undefined);
    fillSelect(diagSel, descriptor.embeddings, state.leftEmbedding ?? undefined);
    fillSelect(
      notionSel,
      [
        ...(descriptor.configs.individual_hops.length ? ["individual"] : []),
        ...(descriptor.configs.group_top_k.length ? ["group"] : []),
      ],
      state.config.notion,
    );
    void refreshAll();
  }

  datasetSel.addEventListener("change", () => {
    const descriptor = state.datasets.find((d) => d.id === datasetSel.value);
    if (descriptor) {
      selectDataset(descriptor);
    }
  });
  for (const [sel, key] of [
    [leftSel, "leftEmbedding"],
    [rightSel, "rightEmbedding"],
  ] as const) {
    sel.addEventListener("change", () => {
      state[key] = sel.value;
      void refreshAll();
    });
  }
  diagSel.addEventListener("change", () => void refreshScores());
  notionSel.addEventListener("change", () => {
    const descriptor = state.dataset;
    if (!descriptor) {
      return;
    }
    if (notionSel.value === "group") {
      const attrs = Object.keys(descriptor.configs.group_attributes).sort();
      state.config = {
        notion: "group",
        k: descriptor.configs.group_top_k[0],
        attribute: attrs[0],
        value: descriptor.configs.group_attributes[attrs[0]]?.[0],
      };
    } else {
      state.config = { notion: "individual", k: descriptor.configs.individual_hops[0] };
    }
    void refreshAll();
  });
  kSel.addEventListener("change", () => {
    state.config.k = Number(kSel.value);
    void refreshAll();
  });
  attrSel.addEventListener("change", () => {
    const descriptor = state.dataset;
    if (!descriptor) {
      return;
    }
    state.config.attribute = attrSel.value;
    state.config.value = descriptor.configs.group_attributes[attrSel.value]?.[0];
    void refreshAll();
  });
  valueSel.addEventListener("change", () => {
    state.config.value = valueSel.value;
    void refreshAll();
  });

  void (async () => {
    try {
      state.datasets = await api.datasets();
      fillSelect(datasetSel, state.datasets.map((d) => d.id));
      if (state.datasets.length) {
        selectDataset(state.datasets[0]);
      } else {
        tracker.fail("no datasets loaded; run the precompute step first");
      }
    } catch (err) {
      tracker.fail(String(err));
    }
  })();
}

// Browser entry point; tests import the modules directly instead.
if (typeof document !== "undefined" && document.getElementById("dataset-select")) {
  bootstrap("");
}
