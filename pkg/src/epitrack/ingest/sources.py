"""Snapshot source descriptors and retrieval."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import httpx

from ..errors import InvalidArgumentError, SourceError, TransientFetchError

KINDS = ("canonical_csv", "dxy_json")

CONNECT_TIMEOUT = 10.0
TOTAL_TIMEOUT = 60.0
MAX_REDIRECTS = 5


@dataclass(frozen=True)
class SourceDescriptor:
    kind: str
    location: str

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvalidArgumentError(f"unknown source kind {self.kind!r}; expected one of {KINDS}")
        if not self.location:
            raise InvalidArgumentError("source location must be non-empty")

    @classmethod
    def parse(cls, spec: str) -> "SourceDescriptor":
        """Parse the CLI form ``kind=location``."""
        kind, sep, location = spec.partition("=")
        if not sep:
            raise InvalidArgumentError(f"source {spec!r} must look like kind=location")
        return cls(kind=kind.strip(), location=location.strip())


def fetch_source(desc: SourceDescriptor) -> bytes:
    """Fetch raw bytes from a local file or an HTTP(S) URL."""
    if desc.location.startswith(("http://", "https://")):
        timeout = httpx.Timeout(TOTAL_TIMEOUT, connect=CONNECT_TIMEOUT)
        try:
            with httpx.Client(
                follow_redirects=True, max_redirects=MAX_REDIRECTS, timeout=timeout
            ) as client:
                response = client.get(desc.location)
        except httpx.TransportError as exc:
            raise TransientFetchError(f"{desc.location}: {exc}") from exc
        except (httpx.HTTPError, httpx.InvalidURL) as exc:
            raise SourceError(f"{desc.location}: {exc}") from exc
        if response.status_code >= 400:
            raise SourceError(f"{desc.location}: HTTP {response.status_code}")
        return response.content

    path = Path(desc.location)
    try:
        return path.read_bytes()
    except OSError as exc:
        raise SourceError(f"{desc.location}: {exc}") from exc
