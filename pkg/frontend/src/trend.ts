// National/regional trend view (view B): cumulative counts as
// circle-marked lines on the left axis, daily increments as bars on the
// right axis.

import type { ApiClient } from "./api";
import { Chart } from "./charts";
import { LatestGate } from "./state";
import type { SeriesDoc } from "./types";

const CUMULATIVE: Array<{ id: string; label: string; field: keyof SeriesDoc["points"][number]; color: string }> = [
  { id: "confirmed", label: "confirmed", field: "confirmed", color: "#d94e0e" },
  { id: "cured", label: "cured", field: "cured", color: "#2ca02c" },
  { id: "deaths", label: "deaths", field: "deaths", color: "#4d4d4d" },
  { id: "active", label: "under treatment", field: "active", color: "#1f77b4" },
];

const DAILY: Array<{ id: string; label: string; field: keyof SeriesDoc["points"][number]; color: string }> = [
  { id: "daily_confirmed", label: "daily new", field: "daily_confirmed", color: "#fdae77" },
  { id: "daily_cured", label: "daily cured", field: "daily_cured", color: "#9edd9e" },
  { id: "daily_deaths", label: "daily deaths", field: "daily_deaths", color: "#b0b0b0" },
];

export class TrendView {
  private chart: Chart;
  private title: HTMLHeadingElement;
  private gate = new LatestGate();
  private currentPath: string | null = null;

  constructor(
    host: HTMLElement,
    private readonly api: ApiClient,
  ) {
    this.title = document.createElement("h3");
    this.title.className = "view-title";
    this.title.textContent = "Trend";
    const chartHost = document.createElement("div");
    chartHost.className = "trend-chart";
    host.append(this.title, chartHost);
    this.chart = new Chart(chartHost, { width: 760, height: 320 });
  }

  get regionPath(): string | null {
    return this.currentPath;
  }

  async show(path: string): Promise<void> {
    this.currentPath = path;
    const tag = this.gate.next();
    const doc = await this.api.series(path);
    if (!this.gate.isCurrent(tag)) return; // a newer selection won
    this.renderDoc(doc);
  }

  async refresh(): Promise<void> {
    if (this.currentPath !== null) await this.show(this.currentPath);
  }

  renderDoc(doc: SeriesDoc): void {
    this.title.textContent = `Trend: ${doc.display_name}`;
    this.chart.render([
      ...CUMULATIVE.map((spec) => ({
        id: spec.id,
        label: spec.label,
        color: spec.color,
        kind: "line" as const,
        axis: "left" as const,
        marker: true,
        points: doc.points.map((p) => ({ x: p.date, y: p[spec.field] as number })),
      })),
      ...DAILY.map((spec) => ({
        id: spec.id,
        label: spec.label,
        color: spec.color,
        kind: "bar" as const,
        axis: "right" as const,
        points: doc.points.map((p) => ({ x: p.date, y: p[spec.field] as number })),
      })),
    ]);
  }
}
