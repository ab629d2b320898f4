"""Read-only HTTP JSON API over the store and metrics engine.

Every handler pins one dataset version for its whole lifetime, so a
response is internally consistent and repeatable until the next ingest.
Dates travel as YYYY-MM-DD strings, rates as decimal fractions; formatting
into percentages is the dashboard's job.

Error bodies are ``{"status": ..., "code": ..., "message": ...}`` with
code one of not_found / invalid_argument / internal.
"""

from __future__ import annotations

import datetime as dt
import logging
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import metrics
from .errors import InvalidArgumentError
from .ingest.canonical import format_timestamp
from .model import RegionId, RegionMeta
from .store import DatasetStore, DatasetVersion, children, resolve_region

log = logging.getLogger(__name__)


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message

    @classmethod
    def invalid(cls, message: str) -> "ApiError":
        return cls(400, "invalid_argument", message)

    @classmethod
    def not_found(cls, message: str) -> "ApiError":
        return cls(404, "not_found", message)


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"status": status, "code": code, "message": message},
    )


def _parse_day(raw: str | None, fallback: dt.date | None) -> dt.date | None:
    if raw is None or raw == "":
        return fallback
    try:
        return dt.date.fromisoformat(raw)
    except ValueError:
        raise ApiError.invalid(f"malformed date {raw!r}; expected YYYY-MM-DD") from None


def _parse_region_path(raw: str) -> RegionId:
    try:
        return RegionId.from_path(raw)
    except InvalidArgumentError as exc:
        raise ApiError.invalid(str(exc)) from None


def _region_doc(region: RegionId) -> dict:
    return {"country": region.country, "province": region.province, "city": region.city}


def _point_doc(point: metrics.DerivedPoint) -> dict:
    return {
        "date": point.date.isoformat(),
        "confirmed": point.confirmed,
        "cured": point.cured,
        "deaths": point.deaths,
        "daily_confirmed": point.daily_confirmed,
        "daily_cured": point.daily_cured,
        "daily_deaths": point.daily_deaths,
        "active": point.active,
        "active_clamped": point.active_clamped,
        "mortality_rate": point.mortality_rate,
        "cure_rate": point.cure_rate,
        "per_million": point.per_million,
    }


def _summary_doc(summary: metrics.WorldSummary) -> dict:
    return {
        "countries_affected": summary.countries_affected,
        "total_confirmed": summary.total_confirmed,
        "total_cured": summary.total_cured,
        "total_deaths": summary.total_deaths,
        "total_active": summary.total_active,
    }


def _display_name(version: DatasetVersion, region: RegionId) -> str:
    meta: RegionMeta | None = version.registry.get(region)
    if meta is not None:
        return meta.display_name
    return region.city or region.province or region.country


def create_app(store: DatasetStore, asset_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["GET"], allow_headers=["*"]
    )

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError):
        return _error_response(exc.status, exc.code, exc.message)

    @app.exception_handler(StarletteHTTPException)
    async def handle_http_error(_request: Request, exc: StarletteHTTPException):
        code = {404: "not_found", 400: "invalid_argument"}.get(exc.status_code, "internal")
        return _error_response(exc.status_code, code, str(exc.detail))

    @app.exception_handler(Exception)
    async def handle_crash(_request: Request, exc: Exception):
        log.exception("unhandled error: %s", exc)
        return _error_response(500, "internal", "internal server error")

    @app.get("/healthz")
    async def healthz():
        return PlainTextResponse("ok")

    @app.get("/api/v1/meta")
    async def meta():
        version = store.current()
        rng = version.date_range()
        return {
            "version_id": version.version_id,
            "as_of": format_timestamp(version.as_of),
            "region_count": len(version.registry),
            "date_range": None
            if rng is None
            else {"from": rng[0].isoformat(), "to": rng[1].isoformat()},
        }

    @app.get("/api/v1/summary")
    async def summary(request: Request):
        version = store.current()
        day = _parse_day(request.query_params.get("date"), version.latest_date())
        doc = {
            "data_date": None if day is None else day.isoformat(),
            "version_id": version.version_id,
            "as_of": format_timestamp(version.as_of),
        }
        if day is None:
            doc.update(_summary_doc(metrics.WorldSummary(0, 0, 0, 0, 0)))
        else:
            doc.update(_summary_doc(metrics.world_summary(version, day)))
        return doc

    @app.get("/api/v1/map")
    async def world_map(request: Request):
        version = store.current()
        day = _parse_day(request.query_params.get("date"), version.latest_date())
        if day is None:
            return {
                "date": None,
                "entries": [],
                "totals": _summary_doc(metrics.WorldSummary(0, 0, 0, 0, 0)),
            }
        snapshot = metrics.map_snapshot(version, day)
        return {
            "date": snapshot.date.isoformat(),
            "entries": [
                {
                    "country": entry.country.country,
                    "display_name": _display_name(version, entry.country),
                    "confirmed": entry.confirmed,
                    "bucket": entry.bucket,
                }
                for entry in snapshot.entries
            ],
            "totals": _summary_doc(snapshot.totals),
        }

    @app.get("/api/v1/regions")
    async def search(request: Request):
        version = store.current()
        query = request.query_params.get("q", "")
        if not query.strip():
            raise ApiError.invalid("q must be a non-empty search string")
        matches = resolve_region(query, version)
        return {
            "query": query,
            "results": [
                {**_region_doc(region), "path": region.path, "display_name": name}
                for region, name in matches
            ],
        }

    def _series_response(version: DatasetVersion, region: RegionId):
        if region not in version.registry:
            raise ApiError.not_found(f"unknown region {region}")
        series = metrics.effective_series(version, region)
        if series is None:
            raise ApiError.not_found(f"no data for region {region}")
        points = metrics.derive_series(series, version.registry.get(region))
        return {
            "region": _region_doc(region),
            "path": region.path,
            "display_name": _display_name(version, region),
            "points": [_point_doc(p) for p in points],
        }

    @app.get("/api/v1/regions/{country}/series")
    async def country_series(country: str):
        return _series_response(store.current(), _parse_region_path(country))

    @app.get("/api/v1/regions/{country}/{province}/series")
    async def province_series(country: str, province: str):
        return _series_response(
            store.current(), _parse_region_path(f"{country}/{province}")
        )

    @app.get("/api/v1/regions/{country}/{province}/{city}/series")
    async def city_series(country: str, province: str, city: str):
        return _series_response(
            store.current(), _parse_region_path(f"{country}/{province}/{city}")
        )

    @app.get("/api/v1/compare")
    async def compare_endpoint(request: Request):
        version = store.current()
        params = request.query_params
        raw_regions = params.get("regions", "")
        tokens = [t for t in raw_regions.split(",") if t.strip()]
        if not tokens:
            raise ApiError.invalid("regions must list 1..10 region paths")
        if len(tokens) > metrics.MAX_COMPARE_REGIONS:
            raise ApiError.invalid(
                f"regions must list at most {metrics.MAX_COMPARE_REGIONS} regions"
            )
        regions = []
        for token in tokens:
            region = _parse_region_path(token.strip())
            if region not in version.registry:
                raise ApiError.not_found(f"unknown region {region}")
            regions.append(region)
        metric = params.get("metric", "")
        if metric not in metrics.METRICS:
            raise ApiError.invalid(
                f"unknown metric {metric!r}; expected one of {sorted(metrics.METRICS)}"
            )
        rng = version.date_range()
        from_day = _parse_day(params.get("from"), rng[0] if rng else None)
        to_day = _parse_day(params.get("to"), rng[1] if rng else None)
        if from_day is None or to_day is None:
            raise ApiError.invalid("store is empty; from/to are required")
        if from_day > to_day:
            raise ApiError.invalid(f"from {from_day} is after to {to_day}")
        table = metrics.compare(version, regions, metric, from_day, to_day)
        return {
            "metric": table.metric,
            "from": from_day.isoformat(),
            "to": to_day.isoformat(),
            "regions": [r.path for r in table.regions],
            "dates": [d.isoformat() for d in table.dates],
            "values": [list(row) for row in table.values],
        }

    @app.get("/api/v1/hierarchy/{country}")
    async def hierarchy(country: str):
        version = store.current()
        region = _parse_region_path(country)
        if region.level != 0:
            raise ApiError.invalid("hierarchy root must be a country code")
        if region not in version.registry:
            raise ApiError.not_found(f"unknown country {region}")
        return _hierarchy_node(version, region)

    def _hierarchy_node(version: DatasetVersion, region: RegionId) -> dict:
        series = metrics.effective_series(version, region)
        values = None
        if series is not None and len(series):
            last = series.last_repaired()
            previous_confirmed = (
                int(series.repaired.confirmed[-2]) if len(series) > 1 else 0
            )
            values = {
                "date": last.date.isoformat(),
                "confirmed": last.confirmed,
                "daily_confirmed": last.confirmed - previous_confirmed,
                "cured": last.cured,
                "deaths": last.deaths,
                "active": max(last.confirmed - last.cured - last.deaths, 0),
            }
        child_nodes = [
            _hierarchy_node(version, child) for child in children(region, version)
        ]
        child_nodes.sort(
            key=lambda node: (
                -(node["values"]["confirmed"] if node["values"] else -1),
                node["path"],
            )
        )
        return {
            "region": _region_doc(region),
            "path": region.path,
            "display_name": _display_name(version, region),
            "values": values,
            "children": child_nodes,
        }

    if asset_dir is not None and Path(asset_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(asset_dir), html=True), name="assets")

    return app
