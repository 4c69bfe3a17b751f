import { mkdtempSync, writeFileSync } from 'fs';
import { tmpdir } from 'os';
import * as path from 'path';

import { COLUMNS } from '../src/csv';

export function tmpDir(prefix: string): string {
  return mkdtempSync(path.join(tmpdir(), prefix));
}

// Build a harness-shaped CSV from per-row overrides; everything not
// named is zero, so tests only spell out what they assert on.
export function makeCsv(rows: Partial<Record<string, number | string>>[]): string {
  const lines = [COLUMNS.join(',')];
  rows.forEach((overrides, k) => {
    const cells = COLUMNS.map((c) => {
      if (c in overrides) return String(overrides[c]);
      if (c === 'k') return String(k);
      if (c === 't') return String(k * 0.5);
      return '0';
    });
    lines.push(cells.join(','));
  });
  return lines.join('\n') + '\n';
}

export function writeCsv(dir: string, name: string, rows: Partial<Record<string, number | string>>[]): string {
  const p = path.join(dir, name);
  writeFileSync(p, makeCsv(rows));
  return p;
}
