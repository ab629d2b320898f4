// Debounced region search box; selecting a result navigates to it.

import type { ApiClient } from "./api";
import { LatestGate } from "./state";
import type { SearchResultDoc } from "./types";

const DEBOUNCE_MS = 250;

export class SearchBox {
  private input: HTMLInputElement;
  private suggestions: HTMLUListElement;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private gate = new LatestGate();

  constructor(
    host: HTMLElement,
    private readonly api: ApiClient,
    private readonly onPick: (result: SearchResultDoc) => void,
  ) {
    this.input = document.createElement("input");
    this.input.type = "search";
    this.input.placeholder = "search nation or city…";
    this.input.className = "search-input";
    this.suggestions = document.createElement("ul");
    this.suggestions.className = "search-suggestions";
    this.suggestions.style.display = "none";
    host.append(this.input, this.suggestions);

    this.input.addEventListener("input", () => this.onInput());
  }

  private onInput(): void {
    const query = this.input.value.trim();
    if (this.timer !== null) clearTimeout(this.timer);
    if (!query) {
      this.close();
      return;
    }
    this.timer = setTimeout(() => void this.runQuery(query), DEBOUNCE_MS);
  }

  private async runQuery(query: string): Promise<void> {
    const tag = this.gate.next();
    const doc = await this.api.search(query);
    if (!this.gate.isCurrent(tag)) return; // stale response discarded
    this.renderSuggestions(doc.results);
  }

  private renderSuggestions(results: SearchResultDoc[]): void {
    this.suggestions.textContent = "";
    this.suggestions.style.display = "block";
    if (!results.length) {
      const hint = document.createElement("li");
      hint.className = "search-empty";
      hint.textContent = "no matching region";
      this.suggestions.appendChild(hint);
      return;
    }
    for (const result of results) {
      const item = document.createElement("li");
      const button = document.createElement("button");
      button.type = "button";
      button.dataset.path = result.path;
      button.textContent =
        result.display_name + (result.province || result.city ? ` (${result.path})` : "");
      button.addEventListener("click", () => {
        this.close();
        this.input.value = result.display_name;
        this.onPick(result);
      });
      item.appendChild(button);
      this.suggestions.appendChild(item);
    }
  }

  private close(): void {
    this.suggestions.style.display = "none";
    this.suggestions.textContent = "";
  }
}
