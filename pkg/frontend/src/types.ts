// Document shapes of the /api/v1 JSON contract.

export type MetricId =
  | "total_confirmed"
  | "cured"
  | "deaths"
  | "active"
  | "daily_confirmed"
  | "daily_cured"
  | "daily_deaths"
  | "mortality_rate"
  | "cure_rate"
  | "per_million";

export const METRIC_IDS: MetricId[] = [
  "total_confirmed",
  "cured",
  "deaths",
  "active",
  "daily_confirmed",
  "daily_cured",
  "daily_deaths",
  "mortality_rate",
  "cure_rate",
  "per_million",
];

export const RATE_METRICS: MetricId[] = ["mortality_rate", "cure_rate"];

// metrics whose values accumulate; these get the log-scale toggle
export const CUMULATIVE_METRICS: MetricId[] = [
  "total_confirmed",
  "cured",
  "deaths",
  "active",
  "per_million",
];

export interface RegionRef {
  country: string;
  province: string | null;
  city: string | null;
}

export interface MetaDoc {
  version_id: number;
  as_of: string;
  region_count: number;
  date_range: { from: string; to: string } | null;
}

export interface SummaryDoc {
  data_date: string | null;
  version_id: number;
  as_of: string;
  countries_affected: number;
  total_confirmed: number;
  total_cured: number;
  total_deaths: number;
  total_active: number;
}

export interface MapEntryDoc {
  country: string;
  display_name: string;
  confirmed: number;
  bucket: number;
}

export interface MapDoc {
  date: string | null;
  entries: MapEntryDoc[];
  totals: Omit<SummaryDoc, "data_date" | "version_id" | "as_of">;
}

export interface SearchResultDoc extends RegionRef {
  path: string;
  display_name: string;
}

export interface SearchDoc {
  query: string;
  results: SearchResultDoc[];
}

export interface PointDoc {
  date: string;
  confirmed: number;
  cured: number;
  deaths: number;
  daily_confirmed: number;
  daily_cured: number;
  daily_deaths: number;
  active: number;
  active_clamped: boolean;
  mortality_rate: number | null;
  cure_rate: number | null;
  per_million: number | null;
}

export interface SeriesDoc {
  region: RegionRef;
  path: string;
  display_name: string;
  points: PointDoc[];
}

export interface CompareDoc {
  metric: MetricId;
  from: string;
  to: string;
  regions: string[];
  dates: string[];
  values: (number | null)[][];
}

export interface HierarchyValuesDoc {
  date: string;
  confirmed: number;
  daily_confirmed: number;
  cured: number;
  deaths: number;
  active: number;
}

export interface HierarchyNodeDoc {
  region: RegionRef;
  path: string;
  display_name: string;
  values: HierarchyValuesDoc | null;
  children: HierarchyNodeDoc[];
}
