import { existsSync, mkdirSync, writeFileSync } from 'fs';
import * as path from 'path';

import { Table, column, estimateNorm, readTable } from './csv';
import { ReferenceLine, Series, renderFigure } from './svg';

export type YQuantity = 'error' | 'defect' | 'norm' | 'bias_error';

export interface FigureSpec {
  inputs: string[];          // harness series CSVs, all on the same time grid
  labels: string[];          // one legend label per input
  y: YQuantity;
  logY: boolean;
  out: string;               // output SVG path
  title: string;
  xLabel?: string;
  yLabel?: string;
  references?: ReferenceLine[];
  markers?: boolean;
}

const Y_LABELS: Record<YQuantity, string> = {
  error: 'Frobenius error',
  defect: 'orthogonality defect',
  norm: 'estimate Frobenius norm',
  bias_error: 'bias error',
};

function yValues(table: Table, y: YQuantity): number[] {
  if (y === 'norm') return estimateNorm(table);
  if (y === 'error') return column(table, 'frobenius_error');
  return column(table, y);
}

function checkSharedTime(tables: Table[]): void {
  if (tables.length < 2) return;
  const t0 = column(tables[0], 't');
  for (const table of tables.slice(1)) {
    const t = column(table, 't');
    if (t.length !== t0.length || t.some((v, i) => v !== t0[i])) {
      throw new Error(
        `${table.path}: time column differs from ${tables[0].path}; ` +
        'figure inputs must share one grid'
      );
    }
  }
}

export function buildSeries(spec: FigureSpec): Series[] {
  if (spec.inputs.length === 0) throw new Error('figure spec has no inputs');
  if (spec.labels.length !== spec.inputs.length) {
    throw new Error(
      `figure spec has ${spec.inputs.length} inputs but ${spec.labels.length} labels`
    );
  }
  for (const p of spec.inputs) {
    if (!existsSync(p)) throw new Error(`input CSV does not exist: ${p}`);
  }
  const tables = spec.inputs.map(readTable);
  checkSharedTime(tables);
  return tables.map((table, i) => ({
    label: spec.labels[i],
    t: column(table, 't'),
    y: yValues(table, spec.y),
    markers: spec.markers,
  }));
}

export function render(spec: FigureSpec): string {
  const series = buildSeries(spec);
  const svg = renderFigure(series, {
    title: spec.title,
    xLabel: spec.xLabel ?? 'time, s',
    yLabel: spec.yLabel ?? Y_LABELS[spec.y],
    logY: spec.logY,
    references: spec.references,
  });
  mkdirSync(path.dirname(spec.out), { recursive: true });
  writeFileSync(spec.out, svg);
  return svg;
}

// Envelope data lives in summary.json, not in a CSV, so it gets its own
// entry point with the same output discipline.
export function renderEnvelope(
  points: { label: string; envelope: [number, number][] }[],
  title: string,
  out: string
): string {
  const series: Series[] = points.map((p) => ({
    label: p.label,
    t: p.envelope.map((q) => q[0]),
    y: p.envelope.map((q) => q[1]),
    markers: true,
  }));
  const svg = renderFigure(series, {
    title,
    xLabel: 'time, s',
    yLabel: 'error peak',
    logY: true,
  });
  mkdirSync(path.dirname(out), { recursive: true });
  writeFileSync(out, svg);
  return svg;
}
