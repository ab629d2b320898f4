"""Exception hierarchy shared across the package.

Errors split along the lines callers care about: bad caller input
(InvalidArgumentError), missing data (NotFoundError), broken staged data
(ValidationError), unparseable source bytes (ParseError), and source
retrieval problems (TransientFetchError is retryable, SourceError is not).
"""

from __future__ import annotations


class EpitrackError(Exception):
    """Base class for package errors."""


class InvalidArgumentError(EpitrackError):
    """A caller-supplied argument is malformed or out of range."""


class NotFoundError(EpitrackError):
    """A referenced region, series, or resource does not exist."""


class ValidationError(EpitrackError):
    """Staged data violates a store invariant.

    Carries enough context (region/date/field) to locate the offending
    record.
    """

    def __init__(self, message: str, *, region=None, date=None, field: str | None = None):
        super().__init__(message)
        self.region = region
        self.date = date
        self.field = field


class ParseError(EpitrackError):
    """Source bytes could not be parsed; ``line`` is 1-based when known."""

    def __init__(self, message: str, *, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class FetchError(EpitrackError):
    """A source could not be retrieved."""


class TransientFetchError(FetchError):
    """Network-level failure (timeout, refused connection); retryable."""


class SourceError(FetchError):
    """The source responded but is unusable (e.g. HTTP status >= 400)."""


class IngestError(EpitrackError):
    """The ingest run as a whole failed; the current version is unchanged."""
