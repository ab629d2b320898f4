// World boundary geometry: bundled TopoJSON (Natural Earth 110m) joined
// to ISO alpha-2 codes via the numeric-code mapping generated from the
// world-countries dataset.

import { geoNaturalEarth1, geoPath } from "d3-geo";
import { feature } from "topojson-client";
import type { FeatureCollection, Geometry } from "geojson";
import type { Topology, GeometryCollection } from "topojson-specification";

import codesJson from "./country-codes.json";

const CODES = codesJson as Record<string, { alpha2: string; name: string }>;

export interface CountryShape {
  alpha2: string;
  name: string;
  pathData: string;
}

export interface WorldGeometry {
  shapes: CountryShape[];
  width: number;
  height: number;
}

function numericId(raw: unknown): string {
  return String(raw).padStart(3, "0");
}

export function buildGeometry(
  topology: Topology,
  width = 960,
  height = 500,
): WorldGeometry {
  const object = topology.objects.countries as GeometryCollection;
  const collection = feature(topology, object) as FeatureCollection<Geometry>;
  const projection = geoNaturalEarth1().fitSize([width, height], collection);
  const toPath = geoPath(projection);

  const shapes: CountryShape[] = [];
  for (const f of collection.features) {
    const mapping = CODES[numericId(f.id)];
    if (!mapping) continue; // Antarctica and similar unkeyed shapes
    const pathData = toPath(f);
    if (!pathData) continue;
    shapes.push({ alpha2: mapping.alpha2, name: mapping.name, pathData });
  }
  return { shapes, width, height };
}

export async function loadGeometry(base = ""): Promise<WorldGeometry> {
  const response = await fetch(`${base}/countries-110m.json`);
  if (!response.ok) {
    throw new Error(`failed to load world geometry: HTTP ${response.status}`);
  }
  return buildGeometry((await response.json()) as Topology);
}
