// Multi-country comparison (views C-F): one line per country for a
// switchable metric, click a line to zoom to that country, linear/log
// toggle for cumulative metrics.

import type { ApiClient } from "./api";
import { Chart } from "./charts";
import { seriesColor } from "./colors";
import { LatestGate, MAX_COMPARISON_REGIONS, type StateStore } from "./state";
import {
  CUMULATIVE_METRICS,
  type CompareDoc,
  type MapDoc,
  type MetricId,
} from "./types";

const METRIC_CHOICES: Array<{ id: MetricId; label: string }> = [
  { id: "mortality_rate", label: "mortality rate" },
  { id: "total_confirmed", label: "total confirmed" },
  { id: "active", label: "existing confirmed" },
  { id: "per_million", label: "per million" },
  { id: "cure_rate", label: "cure rate" },
];

export class ComparisonView {
  private chart: Chart;
  private gate = new LatestGate();
  private controls: HTMLDivElement;
  private chips: HTMLDivElement;
  private notice: HTMLDivElement;
  private names = new Map<string, string>();
  private lastDoc: CompareDoc | null = null;

  constructor(
    host: HTMLElement,
    private readonly api: ApiClient,
    private readonly state: StateStore,
  ) {
    this.controls = document.createElement("div");
    this.controls.className = "compare-controls";
    this.chips = document.createElement("div");
    this.chips.className = "compare-chips";
    this.notice = document.createElement("div");
    this.notice.className = "compare-notice";
    const chartHost = document.createElement("div");
    chartHost.className = "compare-chart";
    host.append(this.controls, this.chips, this.notice, chartHost);
    this.chart = new Chart(chartHost, { width: 760, height: 320 });
    this.renderControls();
  }

  /** Default pre-selection: the top countries by confirmed on the map. */
  defaultSelection(map: MapDoc, count = 5): string[] {
    for (const entry of map.entries) this.names.set(entry.country, entry.display_name);
    return [...map.entries]
      .sort((a, b) => b.confirmed - a.confirmed || a.country.localeCompare(b.country))
      .slice(0, count)
      .map((entry) => entry.country);
  }

  async refresh(): Promise<void> {
    const { comparisonRegions, comparisonMetric } = this.state.current;
    this.renderControls();
    this.renderChips();
    if (!comparisonRegions.length) {
      this.chart.render([]);
      return;
    }
    const tag = this.gate.next();
    const doc = await this.api.compare(comparisonRegions, comparisonMetric);
    if (!this.gate.isCurrent(tag)) return;
    this.lastDoc = doc;
    this.renderDoc(doc);
  }

  addRegion(path: string): void {
    if (!this.state.addComparisonRegion(path)) {
      this.notice.textContent = `at most ${MAX_COMPARISON_REGIONS} regions can be compared`;
      return;
    }
    this.notice.textContent = "";
    void this.refresh();
  }

  removeRegion(path: string): void {
    this.state.removeComparisonRegion(path);
    this.notice.textContent = "";
    void this.refresh();
  }

  setMetric(metric: MetricId): void {
    this.state.setMetric(metric);
    void this.refresh();
  }

  renderDoc(doc: CompareDoc): void {
    this.chart.render(
      doc.regions.map((path, i) => ({
        id: path,
        label: this.names.get(path) ?? path,
        color: seriesColor(i),
        kind: "line" as const,
        axis: "left" as const,
        points: doc.dates.map((date, j) => ({ x: date, y: doc.values[i][j] })),
      })),
    );
  }

  get lastRendered(): CompareDoc | null {
    return this.lastDoc;
  }

  private renderControls(): void {
    const metric = this.state.current.comparisonMetric;
    this.controls.textContent = "";
    for (const choice of METRIC_CHOICES) {
      const button = document.createElement("button");
      button.type = "button";
      button.className = "metric-button";
      button.dataset.metric = choice.id;
      if (choice.id === metric) button.classList.add("metric-active");
      button.textContent = choice.label;
      button.addEventListener("click", () => this.setMetric(choice.id));
      this.controls.appendChild(button);
    }
    if (CUMULATIVE_METRICS.includes(metric)) {
      const toggle = document.createElement("button");
      toggle.type = "button";
      toggle.className = "scale-toggle";
      toggle.textContent = this.chart.leftScale === "log" ? "log scale" : "linear scale";
      toggle.addEventListener("click", () => {
        this.chart.setLeftScale(this.chart.leftScale === "log" ? "linear" : "log");
        toggle.textContent = this.chart.leftScale === "log" ? "log scale" : "linear scale";
      });
      this.controls.appendChild(toggle);
    }
  }

  private renderChips(): void {
    this.chips.textContent = "";
    for (const path of this.state.current.comparisonRegions) {
      const chip = document.createElement("span");
      chip.className = "chip";
      chip.dataset.region = path;
      chip.textContent = this.names.get(path) ?? path;
      const remove = document.createElement("button");
      remove.type = "button";
      remove.className = "chip-remove";
      remove.textContent = "×";
      remove.addEventListener("click", () => this.removeRegion(path));
      chip.appendChild(remove);
      this.chips.appendChild(chip);
    }
  }
}
