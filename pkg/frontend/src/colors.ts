// Sequential 8-step ramp for the choropleth, indexed by the API's log10
// bucket (0 = no cases = lightest, 7 = a million and up = darkest).

export const BUCKET_RAMP: readonly string[] = [
  "#fff5eb",
  "#fee8d4",
  "#fdd0a8",
  "#fdae77",
  "#fc8d4d",
  "#f16b29",
  "#d94e0e",
  "#a63603",
];

export const UNMATCHED_FILL = "#e3e7eb"; // countries without API data

export function bucketColor(bucket: number): string {
  const clamped = Math.min(Math.max(bucket, 0), BUCKET_RAMP.length - 1);
  return BUCKET_RAMP[clamped];
}

export const SERIES_PALETTE: readonly string[] = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#e377c2",
  "#bcbd22",
  "#7f7f7f",
];

export function seriesColor(index: number): string {
  return SERIES_PALETTE[index % SERIES_PALETTE.length];
}
