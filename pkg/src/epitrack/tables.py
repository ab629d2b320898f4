"""Bundled lookup tables: region aliases, continent groups, populations.

The alias table drives region-name normalization: each row maps one raw
feed string to a canonical region. Rows are ordered; the first row whose
target is a bare country defines that country's display name. Provinces
and cities display as their canonical name component, so they need no
naming rows of their own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .errors import ParseError
from .model import Continent, QUARANTINE_COUNTRY, RegionId, RegionMeta

Target = tuple[str, str | None, str | None]


def sanitize_name(raw: str) -> str:
    """Make a raw feed string usable as a canonical name component.

    Canonical names must survive the comma-separated serialization, so
    commas become spaces; runs of whitespace collapse.
    """
    return " ".join(raw.replace(",", " ").split())


@dataclass
class BundledTables:
    """Parsed alias/continent/population tables plus derived indexes."""

    country_alias: dict[str, Target] = field(default_factory=dict)
    province_alias: dict[tuple[str, str], str] = field(default_factory=dict)
    city_alias: dict[tuple[str, str, str], str] = field(default_factory=dict)
    display_names: dict[str, str] = field(default_factory=dict)
    region_aliases: dict[RegionId, set[str]] = field(default_factory=dict)
    continents: dict[str, Continent] = field(default_factory=dict)
    populations: dict[str, int] = field(default_factory=dict)
    _fold: dict[str, Target] = field(default_factory=dict)

    def add_alias_row(self, raw_name: str, country: str, province: str, city: str) -> None:
        target: Target = (country, province or None, city or None)
        region = RegionId(*target)
        self.region_aliases.setdefault(region, set()).add(raw_name)
        if target[1] is None and target[2] is None:
            self.country_alias.setdefault(raw_name, target)
            self._fold.setdefault(raw_name.casefold(), target)
            self.display_names.setdefault(country, raw_name)
        elif target[2] is None:
            self.province_alias.setdefault((country, raw_name), target[1])
            # a sub-national name may also arrive in the country column
            self.country_alias.setdefault(raw_name, target)
            self._fold.setdefault(raw_name.casefold(), target)
        else:
            self.city_alias.setdefault((country, target[1], raw_name), target[2])

    def lookup_country(self, raw: str) -> Target | None:
        raw = raw.strip()
        return self.country_alias.get(raw) or self._fold.get(raw.casefold())

    def lookup_province(self, country: str, raw: str) -> str:
        raw = raw.strip()
        return self.province_alias.get((country, raw)) or sanitize_name(raw)

    def lookup_city(self, country: str, province: str, raw: str) -> str:
        raw = raw.strip()
        return self.city_alias.get((country, province, raw)) or sanitize_name(raw)

    def meta_for(self, region: RegionId) -> RegionMeta:
        """Best-available metadata for a canonical region."""
        if region.level == 0:
            code = region.country
            if code == QUARANTINE_COUNTRY:
                display = "Unresolved"
            else:
                display = self.display_names.get(code, code)
            return RegionMeta(
                id=region,
                display_name=display,
                continent=self.continents.get(code, Continent.OTHER),
                population=self.populations.get(code),
                aliases=frozenset(self.region_aliases.get(region, set()) | {display}),
            )
        display = region.city if region.city is not None else region.province
        assert display is not None
        return RegionMeta(
            id=region,
            display_name=display,
            continent=self.continents.get(region.country, Continent.OTHER),
            population=None,
            aliases=frozenset(self.region_aliases.get(region, set()) | {display}),
        )


def _read_bundled(name: str) -> str:
    return resources.files("epitrack").joinpath(f"data/{name}").read_text(encoding="utf-8")


def _rows(text: str, expected_header: str, name: str) -> list[list[str]]:
    lines = text.splitlines()
    if not lines or lines[0] != expected_header:
        raise ParseError(f"{name}: expected header {expected_header!r}", line=1)
    out = []
    n_cols = expected_header.count(",") + 1
    for i, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != n_cols:
            raise ParseError(f"{name}: expected {n_cols} fields", line=i)
        out.append(parts)
    return out


def load_tables(
    aliases_csv: str | None = None,
    continents_csv: str | None = None,
    population_csv: str | None = None,
) -> BundledTables:
    """Parse the three lookup tables (bundled copies by default)."""
    tables = BundledTables()
    for code, continent in _rows(
        continents_csv if continents_csv is not None else _read_bundled("continents.csv"),
        "country,continent",
        "continents.csv",
    ):
        tables.continents[code] = Continent(continent)
    for code, pop, _year in _rows(
        population_csv if population_csv is not None else _read_bundled("population.csv"),
        "country,population,source_year",
        "population.csv",
    ):
        tables.populations[code] = int(pop)
    for raw_name, country, province, city in _rows(
        aliases_csv if aliases_csv is not None else _read_bundled("aliases.csv"),
        "raw_name,country,province,city",
        "aliases.csv",
    ):
        tables.add_alias_row(raw_name.strip(), country, province, city)
    return tables


@lru_cache(maxsize=1)
def default_tables() -> BundledTables:
    return load_tables()
