// Dashboard view state and its invariants.

import { METRIC_IDS, type MetricId } from "./types";

export const MAX_COMPARISON_REGIONS = 10;

export interface ViewState {
  selectedRegion: string | null; // region path, e.g. "CN/Hubei"
  comparisonRegions: string[]; // distinct country paths, at most 10
  comparisonMetric: MetricId;
  dateRange: { from: string; to: string } | null;
  hoveredCountry: string | null;
}

export type Listener = (state: ViewState) => void;

export class StateStore {
  private state: ViewState = {
    selectedRegion: null,
    comparisonRegions: [],
    comparisonMetric: "total_confirmed",
    dateRange: null,
    hoveredCountry: null,
  };
  private listeners: Listener[] = [];

  get current(): ViewState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  selectRegion(path: string | null): void {
    this.state = { ...this.state, selectedRegion: path };
    this.emit();
  }

  hoverCountry(code: string | null): void {
    // hover is high-frequency; track it without notifying subscribers
    this.state = { ...this.state, hoveredCountry: code };
  }

  setMetric(metric: MetricId): void {
    if (!METRIC_IDS.includes(metric)) {
      throw new Error(`unknown metric ${metric}`);
    }
    this.state = { ...this.state, comparisonMetric: metric };
    this.emit();
  }

  setComparisonRegions(paths: string[]): void {
    const distinct = [...new Set(paths)];
    if (distinct.length > MAX_COMPARISON_REGIONS) {
      throw new Error(`at most ${MAX_COMPARISON_REGIONS} regions`);
    }
    this.state = { ...this.state, comparisonRegions: distinct };
    this.emit();
  }

  /** Returns false (and leaves state alone) when the limit is reached. */
  addComparisonRegion(path: string): boolean {
    if (this.state.comparisonRegions.includes(path)) return true;
    if (this.state.comparisonRegions.length >= MAX_COMPARISON_REGIONS) {
      return false;
    }
    this.state = {
      ...this.state,
      comparisonRegions: [...this.state.comparisonRegions, path],
    };
    this.emit();
    return true;
  }

  removeComparisonRegion(path: string): void {
    this.state = {
      ...this.state,
      comparisonRegions: this.state.comparisonRegions.filter((p) => p !== path),
    };
    this.emit();
  }
}

/**
 * Tags async responses so a stale one can never clobber a newer request:
 * take a tag before fetching, check it when the response lands.
 */
export class LatestGate {
  private seq = 0;

  next(): number {
    return ++this.seq;
  }

  isCurrent(tag: number): boolean {
    return tag === this.seq;
  }
}
