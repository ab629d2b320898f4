#!/usr/bin/env python3
"""Record API responses over the bundled fixtures for the dashboard tests.

The dashboard's scripted walkthrough runs against these canned responses,
so they must come from the real server. Rerun after changing the API or
the snapshot fixtures.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from epitrack.api import create_app
from epitrack.ingest import SourceDescriptor, ingest_snapshot
from epitrack.store import DatasetStore

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "frontend" / "test" / "fixtures"

RECORDINGS = {
    "meta": "/api/v1/meta",
    "summary": "/api/v1/summary",
    "map": "/api/v1/map",
    "search_hub": "/api/v1/regions?q=hub",
    "search_italy": "/api/v1/regions?q=italy",
    "search_nomatch": "/api/v1/regions?q=zzzz-no-such",
    "series_IT": "/api/v1/regions/IT/series",
    "series_ES": "/api/v1/regions/ES/series",
    "series_US": "/api/v1/regions/US/series",
    "series_CN": "/api/v1/regions/CN/series",
    "series_CN_Hubei": "/api/v1/regions/CN/Hubei/series",
    "series_CN_Hubei_Wuhan": "/api/v1/regions/CN/Hubei/Wuhan/series",
    "hierarchy_CN": "/api/v1/hierarchy/CN",
    "compare_default": "/api/v1/compare?regions=US,ES,IT,FR,DE&metric=total_confirmed",
    "compare_per_million_IT_ES": "/api/v1/compare?regions=IT,ES&metric=per_million",
    "compare_mortality_IT_ES": "/api/v1/compare?regions=IT,ES&metric=mortality_rate",
}


def main() -> None:
    store = DatasetStore()
    ingest_snapshot(
        [
            SourceDescriptor("canonical_csv", str(ROOT / "tests/fixtures/world_20200410.csv")),
            SourceDescriptor("dxy_json", str(ROOT / "tests/fixtures/dxy_20200410.json")),
        ],
        store,
    )
    client = TestClient(create_app(store))
    OUT.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for name, url in RECORDINGS.items():
        response = client.get(url)
        assert response.status_code == 200, (url, response.status_code)
        (OUT / f"{name}.json").write_text(
            json.dumps(response.json(), indent=1, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        manifest[url] = f"{name}.json"
    (OUT / "manifest.json").write_text(
        json.dumps(manifest, indent=1) + "\n", encoding="utf-8"
    )
    print(f"recorded {len(manifest)} responses into {OUT}")


if __name__ == "__main__":
    main()
