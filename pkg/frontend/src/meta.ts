// Poll /api/v1/meta and trigger refetches when a new version publishes.

import type { ApiClient } from "./api";

export const POLL_INTERVAL_MS = 60_000;

export class MetaPoller {
  private versionId: number | null = null;
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly onNewVersion: () => void,
    private readonly onMeta?: (versionId: number, asOf: string) => void,
  ) {}

  async poll(): Promise<void> {
    const meta = await this.api.meta();
    this.onMeta?.(meta.version_id, meta.as_of);
    if (this.versionId !== null && meta.version_id !== this.versionId) {
      this.onNewVersion();
    }
    this.versionId = meta.version_id;
  }

  start(): void {
    if (this.timer !== null) return;
    this.timer = setInterval(() => {
      this.poll().catch(() => undefined); // transient poll failures are fine
    }, POLL_INTERVAL_MS);
  }

  stop(): void {
    if (this.timer !== null) clearInterval(this.timer);
    this.timer = null;
  }
}
