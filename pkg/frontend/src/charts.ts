// Hand-rolled SVG charts: dual-axis line/bar trends and multi-line
// comparisons. SVG (not canvas) so the scripted walkthrough can run
// under jsdom and everything stays inspectable in the DOM.

import { scaleLinear, scaleLog, type ScaleContinuousNumeric } from "d3-scale";

export interface ChartPoint {
  x: string; // ISO date
  y: number | null; // null renders as a gap (no segment, no bar)
}

export interface ChartSeries {
  id: string;
  label: string;
  color: string;
  kind: "line" | "bar";
  axis: "left" | "right";
  marker?: boolean;
  points: ChartPoint[];
}

export interface ChartOptions {
  width?: number;
  height?: number;
  leftScale?: "linear" | "log";
  onSeriesClick?: (id: string | null) => void;
}

const MARGIN = { top: 12, right: 52, bottom: 28, left: 64 };

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS("http://www.w3.org/2000/svg", tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

function niceTicks(scale: ScaleContinuousNumeric<number, number>, count: number): number[] {
  return scale.ticks(count);
}

export class Chart {
  private hidden = new Set<string>();
  private isolated: string | null = null;
  private series: ChartSeries[] = [];
  private leftScaleKind: "linear" | "log";

  constructor(
    private readonly host: HTMLElement,
    private readonly options: ChartOptions = {},
  ) {
    this.leftScaleKind = options.leftScale ?? "linear";
  }

  setLeftScale(kind: "linear" | "log"): void {
    this.leftScaleKind = kind;
    this.draw();
  }

  get leftScale(): "linear" | "log" {
    return this.leftScaleKind;
  }

  toggleSeries(id: string): void {
    if (this.hidden.has(id)) this.hidden.delete(id);
    else this.hidden.add(id);
    this.draw();
  }

  isolateSeries(id: string | null): void {
    this.isolated = this.isolated === id ? null : id;
    this.options.onSeriesClick?.(this.isolated);
    this.draw();
  }

  render(series: ChartSeries[]): void {
    this.series = series;
    const known = new Set(series.map((s) => s.id));
    if (this.isolated && !known.has(this.isolated)) this.isolated = null;
    for (const id of [...this.hidden]) if (!known.has(id)) this.hidden.delete(id);
    this.draw();
  }

  private visibleSeries(): ChartSeries[] {
    let visible = this.series.filter((s) => !this.hidden.has(s.id));
    if (this.isolated !== null) {
      // isolation dims rather than removes; axes fit the isolated one
      visible = visible.length ? visible : [];
    }
    return visible;
  }

  private axisSeries(): ChartSeries[] {
    const visible = this.visibleSeries();
    if (this.isolated === null) return visible;
    const isolated = visible.filter((s) => s.id === this.isolated);
    return isolated.length ? isolated : visible;
  }

  private draw(): void {
    this.host.textContent = "";
    const width = this.options.width ?? 720;
    const height = this.options.height ?? 300;
    const inner = {
      w: width - MARGIN.left - MARGIN.right,
      h: height - MARGIN.top - MARGIN.bottom,
    };

    const visible = this.visibleSeries();
    const dates = [...new Set(this.series.flatMap((s) => s.points.map((p) => p.x)))].sort();
    if (!dates.length || !visible.length) {
      const empty = document.createElement("div");
      empty.className = "chart-empty";
      empty.textContent = "no data";
      this.host.appendChild(empty);
      this.renderLegend();
      return;
    }
    const xIndex = new Map(dates.map((d, i) => [d, i]));
    const xPos = (date: string) =>
      MARGIN.left + ((xIndex.get(date) ?? 0) / Math.max(dates.length - 1, 1)) * inner.w;
    const slot = inner.w / Math.max(dates.length, 1);

    const axisSeries = this.axisSeries();
    const leftValues = axisSeries
      .filter((s) => s.axis === "left")
      .flatMap((s) => s.points.map((p) => p.y))
      .filter((y): y is number => y !== null);
    const rightValues = axisSeries
      .filter((s) => s.axis === "right")
      .flatMap((s) => s.points.map((p) => p.y))
      .filter((y): y is number => y !== null);

    const leftMax = leftValues.length ? Math.max(...leftValues) : 1;
    let left: ScaleContinuousNumeric<number, number>;
    if (this.leftScaleKind === "log") {
      const positives = leftValues.filter((v) => v > 0);
      const leftMin = positives.length ? Math.min(...positives) : 1;
      left = scaleLog()
        .domain([Math.max(leftMin, 1e-6), Math.max(leftMax, 1)])
        .range([MARGIN.top + inner.h, MARGIN.top]);
    } else {
      left = scaleLinear()
        .domain([0, Math.max(leftMax, 1)])
        .range([MARGIN.top + inner.h, MARGIN.top]);
    }
    const right = scaleLinear()
      .domain([0, Math.max(rightValues.length ? Math.max(...rightValues) : 1, 1)])
      .range([MARGIN.top + inner.h, MARGIN.top]);

    const svg = svgEl("svg", {
      viewBox: `0 0 ${width} ${height}`,
      width,
      height,
      class: "chart",
      role: "img",
    });

    // gridlines + left axis labels
    for (const tick of niceTicks(left, 5)) {
      const y = left(tick);
      svg.appendChild(
        svgEl("line", {
          x1: MARGIN.left, x2: MARGIN.left + inner.w, y1: y, y2: y,
          class: "grid-line",
        }),
      );
      const label = svgEl("text", { x: MARGIN.left - 6, y: y + 3, class: "axis-label left" });
      label.textContent = tick.toLocaleString("en-US");
      svg.appendChild(label);
    }
    if (visible.some((s) => s.axis === "right")) {
      for (const tick of niceTicks(right, 4)) {
        const label = svgEl("text", {
          x: MARGIN.left + inner.w + 6, y: right(tick) + 3,
          class: "axis-label right",
        });
        label.textContent = tick.toLocaleString("en-US");
        svg.appendChild(label);
      }
    }
    // x labels, at most 7
    const step = Math.max(1, Math.ceil(dates.length / 7));
    for (let i = 0; i < dates.length; i += step) {
      const label = svgEl("text", {
        x: xPos(dates[i]), y: MARGIN.top + inner.h + 18, class: "axis-label x",
      });
      label.textContent = dates[i].slice(5); // MM-DD
      svg.appendChild(label);
    }

    const barSeries = visible.filter((s) => s.kind === "bar");
    const barWidth = Math.max(Math.min(slot / Math.max(barSeries.length, 1) * 0.7, 14), 1);
    barSeries.forEach((series, lane) => {
      const dimmed = this.isolated !== null && series.id !== this.isolated;
      const group = svgEl("g", {
        class: `series bars series-${series.id}`,
        "data-series": series.id,
        opacity: dimmed ? 0.15 : 1,
      });
      for (const point of series.points) {
        if (point.y === null) continue; // gap day: no bar at all
        const scale = series.axis === "left" ? left : right;
        const y = scale(Math.max(point.y, series.axis === "left" && this.leftScaleKind === "log" ? 1e-6 : 0));
        const x = xPos(point.x) - (barSeries.length * barWidth) / 2 + lane * barWidth;
        group.appendChild(
          svgEl("rect", {
            x, y: Math.min(y, MARGIN.top + inner.h),
            width: barWidth,
            height: Math.max(MARGIN.top + inner.h - y, 0),
            fill: series.color,
            "data-date": point.x,
          }),
        );
      }
      group.addEventListener("click", () => this.isolateSeries(series.id));
      svg.appendChild(group);
    });

    for (const series of visible.filter((s) => s.kind === "line")) {
      const dimmed = this.isolated !== null && series.id !== this.isolated;
      const scale = series.axis === "left" ? left : right;
      const group = svgEl("g", {
        class: `series line series-${series.id}`,
        "data-series": series.id,
        opacity: dimmed ? 0.15 : 1,
      });
      let d = "";
      let pen = false;
      for (const point of series.points) {
        if (point.y === null || (this.leftScaleKind === "log" && series.axis === "left" && point.y <= 0)) {
          pen = false; // gap breaks the path
          continue;
        }
        const x = xPos(point.x);
        const y = scale(point.y);
        d += `${pen ? "L" : "M"}${x.toFixed(1)},${y.toFixed(1)}`;
        pen = true;
      }
      const path = svgEl("path", { d, fill: "none", stroke: series.color, "stroke-width": 1.8 });
      group.appendChild(path);
      if (series.marker) {
        for (const point of series.points) {
          if (point.y === null) continue;
          if (this.leftScaleKind === "log" && series.axis === "left" && point.y <= 0) continue;
          group.appendChild(
            svgEl("circle", {
              cx: xPos(point.x), cy: scale(point.y), r: 2.4,
              fill: "#fff", stroke: series.color, "stroke-width": 1.4,
              "data-date": point.x,
            }),
          );
        }
      }
      group.addEventListener("click", () => this.isolateSeries(series.id));
      svg.appendChild(group);
    }

    this.host.appendChild(svg);
    this.renderLegend();
  }

  private renderLegend(): void {
    const legend = document.createElement("div");
    legend.className = "chart-legend";
    for (const series of this.series) {
      const item = document.createElement("button");
      item.type = "button";
      item.className = "legend-item";
      item.dataset.series = series.id;
      if (this.hidden.has(series.id)) item.classList.add("legend-hidden");
      const swatch = document.createElement("span");
      swatch.className = "legend-swatch";
      swatch.style.background = series.color;
      item.appendChild(swatch);
      item.appendChild(document.createTextNode(series.label));
      item.addEventListener("click", () => this.toggleSeries(series.id));
      legend.appendChild(item);
    }
    this.host.appendChild(legend);
  }
}
