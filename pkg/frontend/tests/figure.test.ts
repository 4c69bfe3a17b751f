import { existsSync, readFileSync, writeFileSync } from 'fs';
import * as path from 'path';
import { describe, expect, it } from 'vitest';

import { COLUMNS } from '../src/csv';
import { FigureSpec, render } from '../src/figure';
import { tmpDir, writeCsv } from './helpers';

function spec(dir: string, inputs: string[], labels: string[], over: Partial<FigureSpec> = {}): FigureSpec {
  return {
    inputs,
    labels,
    y: 'error',
    logY: false,
    out: path.join(dir, 'fig.svg'),
    title: 'test figure',
    ...over,
  };
}

describe('render', () => {
  it('writes one SVG per spec and returns its content', () => {
    const dir = tmpDir('fig-');
    const csv = writeCsv(dir, 'a.csv', [
      { frobenius_error: 2.0 },
      { frobenius_error: 1.0 },
      { frobenius_error: 0.5 },
    ]);
    const s = spec(dir, [csv], ['run']);
    const svg = render(s);
    expect(existsSync(s.out)).toBe(true);
    expect(readFileSync(s.out, 'utf8')).toBe(svg);
    expect(svg).toContain('<polyline');
  });

  it('renders a header-only CSV as empty axes and succeeds', () => {
    const dir = tmpDir('fig-');
    const p = path.join(dir, 'empty.csv');
    writeFileSync(p, COLUMNS.join(',') + '\n');
    const svg = render(spec(dir, [p], ['empty']));
    expect(svg).toContain('<svg');
    expect(svg).not.toContain('<polyline');
  });

  it('computes the norm quantity from the estimate block', () => {
    const dir = tmpDir('fig-');
    const csv = writeCsv(dir, 'n.csv', [
      { Rhat11: 1, Rhat22: 1, Rhat33: 1 },
      { Rhat11: 2, Rhat22: 2, Rhat33: 2 },
    ]);
    const svg = render(spec(dir, [csv], ['norm'], {
      y: 'norm',
      references: [{ y: Math.sqrt(3), label: 'sqrt(3)' }],
    }));
    expect(svg).toContain('class="refline"');
  });

  it('refuses a missing input file by name', () => {
    const dir = tmpDir('fig-');
    expect(() => render(spec(dir, [path.join(dir, 'ghost.csv')], ['g'])))
      .toThrow(/input CSV does not exist: .*ghost\.csv/);
  });

  it('refuses inputs on different time grids', () => {
    const dir = tmpDir('fig-');
    const a = writeCsv(dir, 'a.csv', [{}, {}, {}]);
    const b = writeCsv(dir, 'b.csv', [{}, { t: 0.25 }, {}]);
    expect(() => render(spec(dir, [a, b], ['a', 'b'])))
      .toThrow(/time column differs from .*a\.csv; figure inputs must share one grid/);
  });

  it('refuses mismatched label and input counts', () => {
    const dir = tmpDir('fig-');
    const a = writeCsv(dir, 'a.csv', [{}]);
    expect(() => render(spec(dir, [a], ['x', 'y'])))
      .toThrow(/1 inputs but 2 labels/);
  });

  it('never mutates its inputs', () => {
    const dir = tmpDir('fig-');
    const csv = writeCsv(dir, 'a.csv', [{ frobenius_error: 1 }, { frobenius_error: 0.5 }]);
    const before = readFileSync(csv, 'utf8');
    render(spec(dir, [csv], ['run']));
    expect(readFileSync(csv, 'utf8')).toBe(before);
  });
});
