// Shared test plumbing: a strict fetch mock that serves the recorded API
// responses plus the bundled world geometry, and records every request.

import { createRequire } from "node:module";
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { vi } from "vitest";

const here = dirname(fileURLToPath(import.meta.url));
const fixtureDir = join(here, "fixtures");
const require = createRequire(import.meta.url);

const manifest: Record<string, string> = JSON.parse(
  readFileSync(join(fixtureDir, "manifest.json"), "utf-8"),
);

function loadFixture(file: string): unknown {
  return JSON.parse(readFileSync(join(fixtureDir, file), "utf-8"));
}

const topology = JSON.parse(
  readFileSync(require.resolve("world-atlas/countries-110m.json"), "utf-8"),
);

export interface FetchMock {
  requests: string[];
  reset: () => void;
  /** Serve a canned response for an extra URL (already-decoded form). */
  stub: (url: string, body: unknown, status?: number) => void;
}

function jsonResponse(body: unknown, status = 200) {
  return {
    ok: status < 400,
    status,
    json: async () => body,
  };
}

export function installFetchMock(): FetchMock {
  const requests: string[] = [];
  const extras = new Map<string, { body: unknown; status: number }>();

  vi.stubGlobal(
    "fetch",
    vi.fn(async (input: unknown) => {
      const raw = String(input);
      let url = raw.replace(/^https?:\/\/[^/]+/, "");
      try {
        url = decodeURIComponent(url);
      } catch {
        /* keep raw form */
      }
      requests.push(url);
      if (url === "/countries-110m.json") return jsonResponse(topology);
      const extra = extras.get(url);
      if (extra) return jsonResponse(extra.body, extra.status);
      const file = manifest[url];
      if (file) return jsonResponse(loadFixture(file));
      throw new Error(`unexpected request in test: ${url}`);
    }),
  );

  return {
    requests,
    reset: () => requests.splice(0, requests.length),
    stub: (url, body, status = 200) => extras.set(url, { body, status }),
  };
}

export function fixture<T>(name: string): T {
  return loadFixture(`${name}.json`) as T;
}

export async function flush(): Promise<void> {
  // drain chained microtasks from awaited fetches
  for (let i = 0; i < 20; i++) await Promise.resolve();
}
