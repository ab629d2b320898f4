// World choropleth (view A): countries filled by case bucket, hover
// highlights the outline with a tooltip, click selects the country.
// API countries missing from the geometry go to a diagnostics list.

import { BUCKET_RAMP, UNMATCHED_FILL, bucketColor } from "./colors";
import { formatCount } from "./format";
import type { WorldGeometry } from "./geometry";
import type { MapDoc, MapEntryDoc } from "./types";

export interface ChoroplethHooks {
  onSelect: (countryCode: string) => void;
  onHover?: (countryCode: string | null) => void;
}

export class ChoroplethView {
  private tooltip: HTMLDivElement;
  private diagnostics: HTMLDivElement;
  private svgHost: HTMLDivElement;

  constructor(
    private readonly host: HTMLElement,
    private readonly geometry: WorldGeometry,
    private readonly hooks: ChoroplethHooks,
  ) {
    this.svgHost = document.createElement("div");
    this.svgHost.className = "map-host";
    this.tooltip = document.createElement("div");
    this.tooltip.className = "map-tooltip";
    this.tooltip.style.display = "none";
    this.diagnostics = document.createElement("div");
    this.diagnostics.className = "map-diagnostics";
    host.append(this.svgHost, this.tooltip, this.diagnostics);
  }

  render(doc: MapDoc): void {
    const byCountry = new Map(doc.entries.map((e) => [e.country, e]));
    const drawn = new Set<string>();

    const ns = "http://www.w3.org/2000/svg";
    const svg = document.createElementNS(ns, "svg");
    svg.setAttribute("viewBox", `0 0 ${this.geometry.width} ${this.geometry.height}`);
    svg.setAttribute("class", "choropleth");

    for (const shape of this.geometry.shapes) {
      const entry = byCountry.get(shape.alpha2);
      const path = document.createElementNS(ns, "path");
      path.setAttribute("d", shape.pathData);
      path.setAttribute("class", "country");
      path.setAttribute("data-country", shape.alpha2);
      path.setAttribute("fill", entry ? bucketColor(entry.bucket) : UNMATCHED_FILL);
      if (entry) {
        path.setAttribute("data-bucket", String(entry.bucket));
        drawn.add(shape.alpha2);
      }
      path.addEventListener("mouseenter", (event) => {
        path.classList.add("country-hover");
        this.hooks.onHover?.(shape.alpha2);
        this.showTooltip(event, entry ?? null, shape.name);
      });
      path.addEventListener("mouseleave", () => {
        path.classList.remove("country-hover");
        this.hooks.onHover?.(null);
        this.tooltip.style.display = "none";
      });
      if (entry) {
        path.addEventListener("click", () => this.hooks.onSelect(shape.alpha2));
      }
      svg.appendChild(path);
    }

    this.svgHost.textContent = "";
    this.svgHost.appendChild(svg);
    this.renderLegend();
    this.renderDiagnostics(doc.entries.filter((e) => !drawn.has(e.country)));
  }

  private showTooltip(event: MouseEvent, entry: MapEntryDoc | null, fallback: string): void {
    const name = entry?.display_name ?? fallback;
    const confirmed = entry ? formatCount(entry.confirmed) : "no data";
    this.tooltip.textContent = `${name}: ${confirmed}`;
    this.tooltip.style.display = "block";
    this.tooltip.style.left = `${event.pageX + 12}px`;
    this.tooltip.style.top = `${event.pageY + 12}px`;
  }

  private renderLegend(): void {
    let legend = this.host.querySelector<HTMLDivElement>(".map-legend");
    if (!legend) {
      legend = document.createElement("div");
      legend.className = "map-legend";
      this.host.insertBefore(legend, this.diagnostics);
    }
    legend.textContent = "";
    const labels = ["0", "1+", "10+", "100+", "1k+", "10k+", "100k+", "1M+"];
    BUCKET_RAMP.forEach((color, bucket) => {
      const item = document.createElement("span");
      item.className = "map-legend-item";
      const swatch = document.createElement("span");
      swatch.className = "legend-swatch";
      swatch.style.background = color;
      item.append(swatch, labels[bucket]);
      legend!.appendChild(item);
    });
  }

  private renderDiagnostics(missing: MapEntryDoc[]): void {
    this.diagnostics.textContent = "";
    if (!missing.length) return;
    const title = document.createElement("div");
    title.className = "diagnostics-title";
    title.textContent = `${missing.length} region(s) without map geometry:`;
    this.diagnostics.appendChild(title);
    const list = document.createElement("ul");
    for (const entry of missing) {
      const item = document.createElement("li");
      item.dataset.country = entry.country;
      item.textContent = `${entry.display_name} (${entry.country}): ${formatCount(entry.confirmed)}`;
      list.appendChild(item);
    }
    this.diagnostics.appendChild(list);
  }
}
