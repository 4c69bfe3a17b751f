import { writeFileSync } from 'fs';
import * as path from 'path';
import { describe, expect, it } from 'vitest';

import { csvPath, loadSummary } from '../src/summary';
import { tmpDir } from './helpers';

function baseSeries() {
  return {
    label: 'constant_omega',
    params: {},
    csv: 'constant_omega.csv',
    epochs: 201,
    terminal_frobenius_error: 5.44e-6,
    terminal_norm: 1.7320508,
    terminal_defect: 3.6e-11,
    terminal_bias_error: 1.2e-5,
    min_frobenius_error: 5.44e-6,
    envelope: [[1.0, 0.5]],
  };
}

function write(dir: string, doc: unknown): string {
  const p = path.join(dir, 'summary.json');
  writeFileSync(p, JSON.stringify(doc));
  return p;
}

describe('loadSummary', () => {
  it('loads a well-formed document and resolves csv paths', () => {
    const dir = tmpDir('sum-');
    const p = write(dir, {
      scenario: 'constant_omega',
      config: { dt: 0.5 },
      series: [baseSeries()],
    });
    const s = loadSummary(p);
    expect(s.scenario).toBe('constant_omega');
    expect(s.series[0].envelope).toEqual([[1.0, 0.5]]);
    expect(csvPath(s, s.series[0])).toBe(path.join(dir, 'constant_omega.csv'));
  });

  it('accepts null terminal metrics (a blown-up run)', () => {
    const dir = tmpDir('sum-');
    const series = { ...baseSeries(), terminal_frobenius_error: null, terminal_norm: null };
    const p = write(dir, { scenario: 'euler_comparison', config: {}, series: [series] });
    expect(loadSummary(p).series[0].terminal_norm).toBeNull();
  });

  it('names the offending field on a bad document', () => {
    const dir = tmpDir('sum-');
    const noCsv = { ...baseSeries(), csv: undefined };
    const p = write(dir, { scenario: 'x', config: {}, series: [noCsv] });
    expect(() => loadSummary(p)).toThrow(/series\[0\]\.csv missing/);

    const badEnv = { ...baseSeries(), envelope: [[1.0]] };
    const q = write(tmpDir('sum-'), { scenario: 'x', config: {}, series: [badEnv] });
    expect(() => loadSummary(q)).toThrow(/envelope entries must be \[t, peak\] pairs/);
  });

  it('rejects a summary without series', () => {
    const p = write(tmpDir('sum-'), { scenario: 'x', config: {}, series: [] });
    expect(() => loadSummary(p)).toThrow(/series missing or empty/);
  });

  it('rejects non-JSON with the file named', () => {
    const dir = tmpDir('sum-');
    const p = path.join(dir, 'summary.json');
    writeFileSync(p, 'not json');
    expect(() => loadSummary(p)).toThrow(/summary\.json: not valid JSON/);
  });
});
