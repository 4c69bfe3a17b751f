import { readFileSync } from 'fs';
import * as path from 'path';

// Shape of a harness summary.json.  Terminal metrics are null when the
// run blew up (the writer maps non-finite values to null).

export interface SeriesSummary {
  label: string;
  params: Record<string, unknown>;
  csv: string;
  epochs: number;
  terminal_frobenius_error: number | null;
  terminal_norm: number | null;
  terminal_defect: number | null;
  terminal_bias_error: number | null;
  min_frobenius_error: number | null;
  envelope?: [number, number][];
}

export interface Summary {
  scenario: string;
  config: Record<string, unknown>;
  series: SeriesSummary[];
  dir: string;   // directory of the summary file; csv names resolve against it
}

function fail(file: string, what: string): never {
  throw new Error(`${file}: ${what}`);
}

function checkSeries(file: string, s: unknown, i: number): SeriesSummary {
  if (typeof s !== 'object' || s === null) fail(file, `series[${i}] is not an object`);
  const o = s as Record<string, unknown>;
  for (const key of ['label', 'csv']) {
    if (typeof o[key] !== 'string') fail(file, `series[${i}].${key} missing or not a string`);
  }
  if (typeof o.epochs !== 'number') fail(file, `series[${i}].epochs missing or not a number`);
  for (const key of [
    'terminal_frobenius_error', 'terminal_norm', 'terminal_defect',
    'terminal_bias_error', 'min_frobenius_error',
  ]) {
    const v = o[key];
    if (v !== null && typeof v !== 'number') {
      fail(file, `series[${i}].${key} missing or not number|null`);
    }
  }
  if (o.envelope !== undefined) {
    if (!Array.isArray(o.envelope)) fail(file, `series[${i}].envelope is not an array`);
    for (const p of o.envelope as unknown[]) {
      if (!Array.isArray(p) || p.length !== 2 || typeof p[0] !== 'number' || typeof p[1] !== 'number') {
        fail(file, `series[${i}].envelope entries must be [t, peak] pairs`);
      }
    }
  }
  return o as unknown as SeriesSummary;
}

export function loadSummary(file: string): Summary {
  let raw: unknown;
  try {
    raw = JSON.parse(readFileSync(file, 'utf8'));
  } catch (e) {
    fail(file, `not valid JSON (${(e as Error).message})`);
  }
  if (typeof raw !== 'object' || raw === null) fail(file, 'top level is not an object');
  const o = raw as Record<string, unknown>;
  if (typeof o.scenario !== 'string') fail(file, 'scenario missing or not a string');
  if (typeof o.config !== 'object' || o.config === null) fail(file, 'config missing');
  if (!Array.isArray(o.series) || o.series.length === 0) fail(file, 'series missing or empty');
  const series = (o.series as unknown[]).map((s, i) => checkSeries(file, s, i));
  return {
    scenario: o.scenario,
    config: o.config as Record<string, unknown>,
    series,
    dir: path.dirname(path.resolve(file)),
  };
}

export function csvPath(summary: Summary, s: SeriesSummary): string {
  return path.join(summary.dir, s.csv);
}
