"""The canonical CSV interchange format.

UTF-8, LF line endings, comma separator, no quoting: a field containing a
comma cannot be represented and is rejected on both paths. The same grammar
is used for snapshot sources and for the store's persistence blocks, so
parse and serialize must stay bit-exact inverses for clean data.
"""

from __future__ import annotations

import datetime as dt
import re
from typing import Iterable

from ..errors import InvalidArgumentError, ParseError
from ..model import RawRow

HEADER = "observed_at,country,province,city,confirmed,cured,deaths"

_COUNT_RE = re.compile(r"[0-9]+")


def _parse_timestamp(text: str, line: int) -> dt.datetime:
    if text.endswith("Z"):
        text = text[:-1] + "+00:00"
    try:
        parsed = dt.datetime.fromisoformat(text)
    except ValueError:
        raise ParseError(f"unparseable timestamp {text!r}", line=line) from None
    if parsed.tzinfo is None:
        raise ParseError(f"timestamp {text!r} lacks a UTC offset", line=line)
    # second precision end to end; sub-second input would not round-trip
    return parsed.astimezone(dt.timezone.utc).replace(microsecond=0)


def _parse_count(text: str, name: str, line: int) -> int:
    if text.startswith("-"):
        raise ParseError(f"negative {name} {text!r}", line=line)
    if not _COUNT_RE.fullmatch(text):
        raise ParseError(f"non-integer {name} {text!r}", line=line)
    return int(text)


def parse_canonical_csv(data: bytes) -> list[RawRow]:
    """Parse canonical CSV bytes into raw rows; errors carry line numbers."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8: {exc}") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("missing header", line=1)
    if lines[0] != HEADER:
        if lines[0].rstrip("\r") == HEADER:
            raise ParseError("CRLF line endings; canonical CSV uses LF", line=1)
        raise ParseError(f"bad header {lines[0]!r}", line=1)

    rows: list[RawRow] = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 7:
            raise ParseError(f"expected 7 fields, got {len(parts)}", line=i)
        observed_at = _parse_timestamp(parts[0], i)
        country, province, city = parts[1], parts[2], parts[3]
        if not country:
            raise ParseError("empty country", line=i)
        if city and not province:
            raise ParseError("city without province", line=i)
        rows.append(
            RawRow(
                observed_at=observed_at,
                raw_country=country,
                raw_province=province or None,
                raw_city=city or None,
                confirmed=_parse_count(parts[4], "confirmed", i),
                cured=_parse_count(parts[5], "cured", i),
                deaths=_parse_count(parts[6], "deaths", i),
            )
        )
    return rows


def format_timestamp(moment: dt.datetime) -> str:
    return moment.astimezone(dt.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def serialize_canonical_csv(
    rows: Iterable[tuple[dt.datetime, str, str | None, str | None, int, int, int]]
) -> bytes:
    """Serialize (observed_at, country, province, city, counts...) tuples."""
    lines = [HEADER]
    for observed_at, country, province, city, confirmed, cured, deaths in rows:
        fields = (country, province or "", city or "")
        for value in fields:
            if "," in value:
                raise InvalidArgumentError(f"field {value!r} contains a comma")
        lines.append(
            f"{format_timestamp(observed_at)},{fields[0]},{fields[1]},{fields[2]},"
            f"{confirmed},{cured},{deaths}"
        )
    return ("\n".join(lines) + "\n").encode("utf-8")
