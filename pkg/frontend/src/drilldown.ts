// Sub-national drill-down (views G-H): sortable province table, per-node
// trend, city list for a selected province, and a Hubei shortcut.

import type { ApiClient } from "./api";
import { formatCount } from "./format";
import { LatestGate } from "./state";
import { TrendView } from "./trend";
import type { HierarchyNodeDoc } from "./types";

type ColumnKey = "confirmed" | "daily_confirmed" | "cured" | "deaths" | "active";

const COLUMNS: Array<{ key: ColumnKey; label: string }> = [
  { key: "confirmed", label: "confirmed" },
  { key: "daily_confirmed", label: "daily increment" },
  { key: "cured", label: "cured" },
  { key: "deaths", label: "deaths" },
  { key: "active", label: "active" },
];

export class DrilldownView {
  private table: HTMLTableElement;
  private cityList: HTMLDivElement;
  private trend: TrendView;
  private gate = new LatestGate();
  private root: HierarchyNodeDoc | null = null;
  private sortBy: ColumnKey = "confirmed";

  constructor(
    private readonly host: HTMLElement,
    private readonly api: ApiClient,
  ) {
    const shortcut = document.createElement("button");
    shortcut.type = "button";
    shortcut.className = "hubei-shortcut";
    shortcut.textContent = "Hubei province detail";
    shortcut.addEventListener("click", () => void this.selectNode("CN/Hubei"));

    this.table = document.createElement("table");
    this.table.className = "drilldown-table";
    this.cityList = document.createElement("div");
    this.cityList.className = "city-list";
    const trendHost = document.createElement("div");
    trendHost.className = "drilldown-trend";
    host.append(shortcut, this.table, this.cityList, trendHost);
    this.trend = new TrendView(trendHost, api);
  }

  async show(country: string): Promise<void> {
    const tag = this.gate.next();
    const doc = await this.api.hierarchy(country);
    if (!this.gate.isCurrent(tag)) return;
    this.root = doc;
    this.host.classList.toggle("drilldown-empty", doc.children.length === 0);
    this.renderTable();
    await this.trend.show(doc.path);
  }

  async refresh(): Promise<void> {
    if (this.root) await this.show(this.root.region.country);
  }

  setSort(column: ColumnKey): void {
    this.sortBy = column;
    this.renderTable();
  }

  async selectNode(path: string): Promise<void> {
    await this.trend.show(path);
    const node = this.findNode(path);
    this.renderCities(node);
  }

  private findNode(path: string): HierarchyNodeDoc | null {
    const walk = (node: HierarchyNodeDoc): HierarchyNodeDoc | null => {
      if (node.path === path) return node;
      for (const child of node.children) {
        const found = walk(child);
        if (found) return found;
      }
      return null;
    };
    return this.root ? walk(this.root) : null;
  }

  private sortedChildren(): HierarchyNodeDoc[] {
    if (!this.root) return [];
    const key = this.sortBy;
    return [...this.root.children].sort(
      (a, b) => (b.values?.[key] ?? -1) - (a.values?.[key] ?? -1),
    );
  }

  private renderTable(): void {
    this.table.textContent = "";
    const head = this.table.createTHead().insertRow();
    const nameHeader = document.createElement("th");
    nameHeader.textContent = "region";
    head.appendChild(nameHeader);
    for (const column of COLUMNS) {
      const th = document.createElement("th");
      th.textContent = column.label;
      th.dataset.column = column.key;
      if (column.key === this.sortBy) th.classList.add("sorted");
      th.addEventListener("click", () => this.setSort(column.key));
      head.appendChild(th);
    }
    const body = this.table.createTBody();
    for (const child of this.sortedChildren()) {
      const row = body.insertRow();
      row.dataset.path = child.path;
      const nameCell = row.insertCell();
      const link = document.createElement("a");
      link.href = "#";
      link.textContent = child.display_name;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        void this.selectNode(child.path);
      });
      nameCell.appendChild(link);
      for (const column of COLUMNS) {
        row.insertCell().textContent = formatCount(child.values?.[column.key] ?? null);
      }
    }
  }

  private renderCities(node: HierarchyNodeDoc | null): void {
    this.cityList.textContent = "";
    if (!node || !node.children.length) return;
    const title = document.createElement("div");
    title.className = "city-list-title";
    title.textContent = `${node.display_name} cities`;
    this.cityList.appendChild(title);
    const list = document.createElement("ul");
    for (const city of node.children) {
      const item = document.createElement("li");
      const link = document.createElement("a");
      link.href = "#";
      link.dataset.path = city.path;
      link.textContent = `${city.display_name} (${formatCount(city.values?.confirmed ?? null)})`;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        void this.trend.show(city.path);
      });
      item.appendChild(link);
      list.appendChild(item);
    }
    this.cityList.appendChild(list);
  }
}
