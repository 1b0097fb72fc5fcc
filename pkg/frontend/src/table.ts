// Interactive score table. Row order always comes verbatim from the
// /scores endpoint (the server owns sorting and tie-breaking); header
// clicks request a re-fetch, the search box filters without reordering.

import { ScoreRow } from "./api.js";
import { el, clear } from "./dom.js";

export type SortKey = "id" | "score";
export type SortDir = "asc" | "desc";

export interface ScoreTableOptions {
  onSortRequest: (sort: SortKey, dir: SortDir) => void;
  onSelect: (id: string) => void;
}

function scoreOf(row: ScoreRow): number {
  return (row.normalized ?? row.score ?? 0) as number;
}

export class ScoreTable {
  private root: HTMLElement;
  private body: HTMLTableSectionElement;
  private search = "";
  private rows: ScoreRow[] = [];
  private sort: SortKey = "id";
  private dir: SortDir = "asc";
  private selected: string | null = null;

  constructor(host: Element, private options: ScoreTableOptions) {
    this.root = el("div", { class: "score-table" });
    const searchBox = el("input", {
      type: "search",
      placeholder: "filter by node id",
      class: "table-search",
    });
    searchBox.addEventListener("input", () => {
      this.search = searchBox.value.trim();
      this.renderBody();
    });
    const table = el("table");
    const head = el("thead");
    const headRow = el("tr");
    for (const key of ["id", "score"] as SortKey[]) {
      const th = el("th", { "data-sort": key }, key === "id" ? "node id" : "score");
      th.appendChild(el("span", { class: "sort-arrow" }, ""));
      th.addEventListener("click", () => {
        const dir: SortDir = this.sort === key && this.dir === "asc" ? "desc" : "asc";
        this.options.onSortRequest(key, dir);
      });
      headRow.appendChild(th);
    }
    head.appendChild(headRow);
    table.appendChild(head);
    this.body = el("tbody");
    table.appendChild(this.body);
    this.root.appendChild(searchBox);
    this.root.appendChild(table);
    host.appendChild(this.root);
  }

  setRows(rows: ScoreRow[], sort: SortKey, dir: SortDir): void {
    this.rows = rows;
    this.sort = sort;
    this.dir = dir;
    for (const th of this.root.querySelectorAll("th")) {
      const arrow = th.querySelector(".sort-arrow")!;
      arrow.textContent = th.getAttribute("data-sort") === sort ? (dir === "asc" ? " ↑" : " ↓") : "";
    }
    this.renderBody();
  }

  setSelected(id: string | null): void {
    this.selected = id;
    this.renderBody();
  }

  visibleIds(): string[] {
    return Array.from(this.body.querySelectorAll("tr")).map(
      (tr) => tr.getAttribute("data-id") ?? "",
    );
  }

  private renderBody(): void {
    clear(this.body);
    for (const row of this.rows) {
      if (this.search && !row.id.includes(this.search)) {
        continue;
      }
      const tr = el("tr", { "data-id": row.id });
      if (row.id === this.selected) {
        tr.classList.add("selected");
      }
      tr.appendChild(el("td", {}, row.id));
      tr.appendChild(el("td", {}, scoreOf(row).toFixed(4)));
      tr.addEventListener("click", () => this.options.onSelect(row.id));
      this.body.appendChild(tr);
    }
  }
}
