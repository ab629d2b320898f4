"""Operator CLI: ingest snapshots, serve the API, export series, validate feeds.

Exit codes are a stable scripting contract: 0 success, 1 domain failure,
2 environment failure, 64 usage error. Reports go to stdout as JSON lines;
logs go to stderr.
"""

from __future__ import annotations

import json
import logging
import socket
import sys
from pathlib import Path

import click

from . import metrics
from .errors import EpitrackError, IngestError, InvalidArgumentError
from .ingest import SourceDescriptor, ingest_snapshot, validate_sources
from .model import RegionId
from .store import DatasetStore

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_ENV = 2
EXIT_USAGE = 64

WAL_FILENAME = "versions.wal"

EXPORT_METRICS = list(metrics.METRICS)

log = logging.getLogger("epitrack")


def _wal_path(data_dir: str) -> Path:
    return Path(data_dir) / WAL_FILENAME


def _parse_sources(specs: tuple[str, ...]) -> list[SourceDescriptor]:
    try:
        return [SourceDescriptor.parse(spec) for spec in specs]
    except InvalidArgumentError as exc:
        raise click.UsageError(str(exc)) from None


def _emit(doc: dict) -> None:
    click.echo(json.dumps(doc, separators=(",", ":")))


@click.group()
def cli() -> None:
    """Pandemic case-count tracking platform."""
    logging.basicConfig(
        stream=sys.stderr, level=logging.INFO, format="%(levelname)s %(name)s: %(message)s"
    )


data_dir_option = click.option(
    "--data-dir",
    envvar="EPITRACK_DATA_DIR",
    required=True,
    help="Directory holding the persistence file [env: EPITRACK_DATA_DIR]",
)


@cli.command("ingest")
@click.option(
    "--source", "sources", multiple=True, required=True, help="Snapshot source as kind=location"
)
@data_dir_option
def cmd_ingest(sources: tuple[str, ...], data_dir: str) -> int:
    """Fetch sources, merge, repair, and publish a new dataset version."""
    descs = _parse_sources(sources)
    data_path = Path(data_dir)
    try:
        data_path.mkdir(parents=True, exist_ok=True)
        probe = data_path / ".write-probe"
        probe.touch()
        probe.unlink()
    except OSError as exc:
        log.error("data dir %s not writable: %s", data_dir, exc)
        return EXIT_ENV
    store = DatasetStore(wal_path=_wal_path(data_dir))
    try:
        _version, report = ingest_snapshot(descs, store)
    except IngestError as exc:
        log.error("ingest aborted: %s", exc)
        return EXIT_ENV
    _emit(report.to_dict())
    return EXIT_OK


@cli.command("serve")
@click.option("--listen", default="127.0.0.1:8000", show_default=True, help="host:port")
@data_dir_option
@click.option("--assets", default=None, help="Static dashboard asset directory")
def cmd_serve(listen: str, data_dir: str, assets: str | None) -> int:
    """Serve the read-only JSON API (and dashboard assets when configured)."""
    import uvicorn

    from .api import create_app

    host, _, port_text = listen.rpartition(":")
    if not host or not port_text.isdigit():
        raise click.UsageError(f"--listen must be host:port, got {listen!r}")
    port = int(port_text)

    store = DatasetStore(wal_path=_wal_path(data_dir))
    app = create_app(store, asset_dir=assets)

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        sock.bind((host, port))
    except OSError as exc:
        log.error("cannot listen on %s: %s", listen, exc)
        sock.close()
        return EXIT_ENV
    log.info("serving on %s (version %s)", listen, store.current().version_id)
    server = uvicorn.Server(
        uvicorn.Config(app, log_level="warning", timeout_graceful_shutdown=10)
    )
    try:
        server.run(sockets=[sock])
    except KeyboardInterrupt:
        pass  # uvicorn re-raises the interrupt after finishing in-flight requests
    return EXIT_OK


@cli.command("export")
@click.option("--region", required=True, help="Region path, e.g. CN or CN/Hubei")
@click.option(
    "--metric",
    "metric_names",
    multiple=True,
    type=click.Choice(EXPORT_METRICS),
    help="Metric column(s); default: all",
)
@click.option("--format", "fmt", type=click.Choice(["csv"]), default="csv", show_default=True)
@data_dir_option
def cmd_export(region: str, metric_names: tuple[str, ...], fmt: str, data_dir: str) -> int:
    """Write one region's derived series to stdout as CSV."""
    del fmt  # only csv exists
    try:
        region_id = RegionId.from_path(region)
    except InvalidArgumentError as exc:
        raise click.UsageError(str(exc)) from None
    store = DatasetStore(wal_path=_wal_path(data_dir))
    version = store.current()
    if region_id not in version.registry:
        log.error("unknown region %s", region_id)
        return EXIT_DOMAIN
    series = metrics.effective_series(version, region_id)
    points = (
        metrics.derive_series(series, version.registry.get(region_id))
        if series is not None
        else []
    )
    columns = list(metric_names) if metric_names else EXPORT_METRICS
    attrs = [metrics.METRICS[name] for name in columns]
    lines = ["date," + ",".join(columns)]
    for point in points:
        cells = []
        for attr in attrs:
            value = getattr(point, attr)
            cells.append("" if value is None else repr(value) if isinstance(value, float) else str(value))
        lines.append(point.date.isoformat() + "," + ",".join(cells))
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


@cli.command("validate")
@click.option(
    "--source", "sources", multiple=True, required=True, help="Snapshot source as kind=location"
)
def cmd_validate(sources: tuple[str, ...]) -> int:
    """Parse and normalize sources without publishing; report problems."""
    descs = _parse_sources(sources)
    report = validate_sources(descs)
    _emit(report)
    return EXIT_OK if not report["errors"] else EXIT_DOMAIN


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        result = cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return EXIT_DOMAIN
    except click.exceptions.Abort:
        return EXIT_ENV
    except EpitrackError as exc:
        log.error("%s", exc)
        return EXIT_DOMAIN
    if isinstance(result, int):
        return result
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
