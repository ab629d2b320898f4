// Display formatting. The only arithmetic allowed here is percent
// scaling (rate x 100); every underlying number comes from the API.

export function formatCount(value: number | null): string {
  if (value === null) return "–";
  return value.toLocaleString("en-US");
}

export function formatPercent(rate: number | null): string {
  if (rate === null) return "–";
  return `${(rate * 100).toFixed(2)}%`;
}

export function formatPerMillion(value: number | null): string {
  if (value === null) return "–";
  return value.toFixed(1);
}

export function formatMetricValue(metric: string, value: number | null): string {
  if (metric === "mortality_rate" || metric === "cure_rate") {
    return formatPercent(value);
  }
  if (metric === "per_million") return formatPerMillion(value);
  return formatCount(value);
}
