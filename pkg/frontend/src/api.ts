// Thin typed client over the read-only JSON API. GET only, by design.

import type {
  CompareDoc,
  HierarchyNodeDoc,
  MapDoc,
  MetaDoc,
  MetricId,
  SearchDoc,
  SeriesDoc,
  SummaryDoc,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function getJson<T>(url: string): Promise<T> {
  const response = await fetch(url, { method: "GET" });
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, body.code ?? "internal", body.message ?? url);
  }
  return body as T;
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  meta(): Promise<MetaDoc> {
    return getJson(`${this.base}/api/v1/meta`);
  }

  summary(date?: string): Promise<SummaryDoc> {
    const query = date ? `?date=${encodeURIComponent(date)}` : "";
    return getJson(`${this.base}/api/v1/summary${query}`);
  }

  worldMap(date?: string): Promise<MapDoc> {
    const query = date ? `?date=${encodeURIComponent(date)}` : "";
    return getJson(`${this.base}/api/v1/map${query}`);
  }

  search(q: string): Promise<SearchDoc> {
    return getJson(`${this.base}/api/v1/regions?q=${encodeURIComponent(q)}`);
  }

  series(path: string): Promise<SeriesDoc> {
    const encoded = path.split("/").map(encodeURIComponent).join("/");
    return getJson(`${this.base}/api/v1/regions/${encoded}/series`);
  }

  compare(
    regions: string[],
    metric: MetricId,
    range?: { from: string; to: string },
  ): Promise<CompareDoc> {
    const params = new URLSearchParams();
    params.set("regions", regions.join(","));
    params.set("metric", metric);
    if (range) {
      params.set("from", range.from);
      params.set("to", range.to);
    }
    return getJson(`${this.base}/api/v1/compare?${params.toString()}`);
  }

  hierarchy(country: string): Promise<HierarchyNodeDoc> {
    return getJson(`${this.base}/api/v1/hierarchy/${encodeURIComponent(country)}`);
  }
}
