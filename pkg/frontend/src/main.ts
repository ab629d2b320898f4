// Dashboard bootstrap: layout, tab wiring, initial loads, version polling.

import { ApiClient } from "./api";
import { ChoroplethView } from "./choropleth";
import { ComparisonView } from "./comparison";
import codesJson from "./country-codes.json";
import { DrilldownView } from "./drilldown";
import { formatCount } from "./format";
import { loadGeometry, type WorldGeometry } from "./geometry";
import { MetaPoller } from "./meta";
import { SearchBox } from "./search";
import { StateStore } from "./state";
import { TrendView } from "./trend";
import type { MapDoc, SearchResultDoc, SummaryDoc } from "./types";

const CODES = codesJson as Record<string, { alpha2: string; name: string; continent: string }>;
const CONTINENT_BY_ALPHA2 = new Map(
  Object.values(CODES).map((c) => [c.alpha2, c.continent]),
);

export type TabId = "map" | "trend" | "compare" | "drilldown";

export interface App {
  state: StateStore;
  map: ChoroplethView;
  trend: TrendView;
  comparison: ComparisonView;
  drilldown: DrilldownView;
  poller: MetaPoller;
  activeTab: () => TabId;
  showTab: (tab: TabId) => void;
  refreshVisible: () => Promise<void>;
}

function section(root: HTMLElement, id: TabId, title: string): HTMLElement {
  const el = document.createElement("section");
  el.id = `view-${id}`;
  el.className = "view-section";
  const heading = document.createElement("h2");
  heading.textContent = title;
  el.appendChild(heading);
  root.appendChild(el);
  return el;
}

function renderSummary(strip: HTMLElement, doc: SummaryDoc): void {
  strip.textContent = "";
  const cells: Array<[string, number]> = [
    ["countries affected", doc.countries_affected],
    ["confirmed", doc.total_confirmed],
    ["cured", doc.total_cured],
    ["deaths", doc.total_deaths],
    ["under treatment", doc.total_active],
  ];
  for (const [label, value] of cells) {
    const cell = document.createElement("div");
    cell.className = "summary-cell";
    const number = document.createElement("div");
    number.className = "summary-number";
    number.textContent = formatCount(value);
    const caption = document.createElement("div");
    caption.className = "summary-label";
    caption.textContent = label;
    cell.append(number, caption);
    strip.appendChild(cell);
  }
  if (doc.data_date) {
    const date = document.createElement("div");
    date.className = "summary-date";
    date.textContent = `as of ${doc.data_date}`;
    strip.appendChild(date);
  }
}

function renderCountryPanel(
  panel: HTMLElement,
  map: MapDoc,
  onPick: (path: string) => void,
): void {
  panel.textContent = "";
  const groups = new Map<string, typeof map.entries>();
  for (const entry of map.entries) {
    const continent = CONTINENT_BY_ALPHA2.get(entry.country) ?? "Other";
    if (!groups.has(continent)) groups.set(continent, []);
    groups.get(continent)!.push(entry);
  }
  for (const continent of [...groups.keys()].sort()) {
    const details = document.createElement("details");
    details.className = "continent-group";
    details.dataset.continent = continent;
    const summary = document.createElement("summary");
    summary.textContent = `${continent} (${groups.get(continent)!.length})`;
    details.appendChild(summary);
    const list = document.createElement("ul");
    for (const entry of groups.get(continent)!) {
      const item = document.createElement("li");
      const link = document.createElement("a");
      link.href = "#";
      link.dataset.country = entry.country;
      link.textContent = `${entry.display_name} — ${formatCount(entry.confirmed)}`;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        onPick(entry.country);
      });
      item.appendChild(link);
      list.appendChild(item);
    }
    details.appendChild(list);
    panel.appendChild(details);
  }
}

export async function boot(
  root: HTMLElement,
  api: ApiClient = new ApiClient(),
  geometry?: WorldGeometry,
): Promise<App> {
  const state = new StateStore();

  const header = document.createElement("header");
  const title = document.createElement("h1");
  title.textContent = "COVID-19 tracking";
  const searchHost = document.createElement("div");
  searchHost.className = "search-host";
  const metaInfo = document.createElement("div");
  metaInfo.className = "meta-info";
  header.append(title, searchHost, metaInfo);

  const summaryStrip = document.createElement("div");
  summaryStrip.className = "summary-strip";

  const nav = document.createElement("nav");
  nav.className = "tabs";
  const main = document.createElement("main");

  root.textContent = "";
  root.append(header, summaryStrip, nav, main);

  const mapSection = section(main, "map", "World map");
  const mapHost = document.createElement("div");
  mapHost.className = "map-section-host";
  const countryPanel = document.createElement("aside");
  countryPanel.className = "country-panel";
  mapSection.append(mapHost, countryPanel);
  const trendSection = section(main, "trend", "National trends");
  const compareSection = section(main, "compare", "Country comparisons");
  const drillSection = section(main, "drilldown", "Spreading dynamics in China");

  const tabs: Record<TabId, HTMLElement> = {
    map: mapSection,
    trend: trendSection,
    compare: compareSection,
    drilldown: drillSection,
  };
  let active: TabId = "map";
  const buttons = new Map<TabId, HTMLButtonElement>();
  const showTab = (tab: TabId): void => {
    active = tab;
    for (const [id, sectionEl] of Object.entries(tabs) as [TabId, HTMLElement][]) {
      sectionEl.style.display = id === tab ? "" : "none";
      buttons.get(id)?.classList.toggle("tab-active", id === tab);
    }
  };
  const labels: Record<TabId, string> = {
    map: "World map",
    trend: "Trends",
    compare: "Comparisons",
    drilldown: "China detail",
  };
  for (const id of Object.keys(tabs) as TabId[]) {
    const button = document.createElement("button");
    button.type = "button";
    button.className = "tab-button";
    button.dataset.tab = id;
    button.textContent = labels[id];
    button.addEventListener("click", () => showTab(id));
    buttons.set(id, button);
    nav.appendChild(button);
  }

  const geo = geometry ?? (await loadGeometry());
  const trend = new TrendView(trendSection, api);
  const comparison = new ComparisonView(compareSection, api, state);
  const drilldown = new DrilldownView(drillSection, api);

  const openTrend = (path: string): void => {
    state.selectRegion(path);
    showTab("trend");
    void trend.show(path);
  };

  const map = new ChoroplethView(mapHost, geo, {
    onSelect: openTrend,
    onHover: (code) => state.hoverCountry(code),
  });

  new SearchBox(searchHost, api, (result: SearchResultDoc) => {
    openTrend(result.path);
    if (result.province) {
      void drilldown
        .show(result.country)
        .then(() => drilldown.selectNode(result.path));
    }
  });

  const refreshSummary = async (): Promise<void> => {
    renderSummary(summaryStrip, await api.summary());
  };
  const refreshMap = async (): Promise<void> => {
    const doc = await api.worldMap();
    map.render(doc);
    renderCountryPanel(countryPanel, doc, openTrend);
  };

  const refreshVisible = async (): Promise<void> => {
    await refreshSummary(); // always on screen
    if (active === "map") await refreshMap();
    if (active === "trend") await trend.refresh();
    if (active === "compare") await comparison.refresh();
    if (active === "drilldown") await drilldown.refresh();
  };

  const poller = new MetaPoller(
    api,
    () => void refreshVisible(),
    (versionId, asOf) => {
      metaInfo.textContent = `dataset v${versionId} · ${asOf}`;
    },
  );

  // initial loads: summary, map + default comparison selection, China tree
  await poller.poll();
  await refreshSummary();
  const mapDoc = await api.worldMap();
  map.render(mapDoc);
  renderCountryPanel(countryPanel, mapDoc, openTrend);
  state.setComparisonRegions(comparison.defaultSelection(mapDoc));
  await comparison.refresh();
  try {
    await drilldown.show("CN");
  } catch {
    // no sub-national data in this dataset: hide the drill-down tab
    buttons.get("drilldown")!.style.display = "none";
  }
  showTab("map");
  poller.start();

  return {
    state,
    map,
    trend,
    comparison,
    drilldown,
    poller,
    activeTab: () => active,
    showTab,
    refreshVisible,
  };
}

// browser entry (tests import boot() directly instead)
const rootEl = typeof document !== "undefined" ? document.getElementById("app") : null;
if (rootEl instanceof HTMLElement && import.meta.env?.MODE !== "test") {
  boot(rootEl).catch((error) => {
    rootEl.textContent = `failed to start dashboard: ${error}`;
    console.error(error);
  });
}
