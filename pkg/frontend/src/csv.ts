import { readFileSync } from 'fs';
import { parse } from 'papaparse';

// Column layout of a harness series CSV, in declared order.  The parser
// refuses anything else: a foreign header means the file is not ours.
export const COLUMNS = [
  'k', 't',
  'R11', 'R12', 'R13', 'R21', 'R22', 'R23', 'R31', 'R32', 'R33',
  'Rhat11', 'Rhat12', 'Rhat13', 'Rhat21', 'Rhat22', 'Rhat23',
  'Rhat31', 'Rhat32', 'Rhat33',
  'bhat1', 'bhat2', 'bhat3',
  'omega1', 'omega2', 'omega3',
  'frobenius_error', 'defect', 'bias_error',
];

export interface Table {
  path: string;
  columns: string[];
  rows: number[][];
}

function toNumber(cell: string, path: string, row: number, col: string): number {
  const s = cell.trim();
  // the writer uses C-style spellings for non-finite values
  if (s === 'nan' || s === '-nan') return NaN;
  if (s === 'inf') return Infinity;
  if (s === '-inf') return -Infinity;
  const v = Number(s);
  if (s === '' || Number.isNaN(v)) {
    throw new Error(`${path}: row ${row}, column ${col}: unparseable cell "${cell}"`);
  }
  return v;
}

export function parseTable(text: string, path: string): Table {
  const parsed = parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new Error(`${path}: ${e.message} (row ${e.row})`);
  }
  const lines = parsed.data;
  if (lines.length === 0) {
    throw new Error(`${path}: empty file, expected at least a header row`);
  }
  const header = lines[0].map((h) => h.trim());
  if (header.length !== COLUMNS.length || header.some((h, i) => h !== COLUMNS[i])) {
    throw new Error(
      `${path}: unexpected header [${header.slice(0, 3).join(', ')}, ...], ` +
      `expected [${COLUMNS.slice(0, 3).join(', ')}, ...]`
    );
  }
  const rows: number[][] = [];
  for (let r = 1; r < lines.length; r++) {
    const cells = lines[r];
    if (cells.length !== COLUMNS.length) {
      throw new Error(
        `${path}: row ${r} has ${cells.length} cells, expected ${COLUMNS.length}`
      );
    }
    rows.push(cells.map((c, i) => toNumber(c, path, r, COLUMNS[i])));
  }
  return { path, columns: header, rows };
}

export function readTable(path: string): Table {
  return parseTable(readFileSync(path, 'utf8'), path);
}

export function column(table: Table, name: string): number[] {
  const i = table.columns.indexOf(name);
  if (i < 0) {
    throw new Error(
      `${table.path}: missing column "${name}" ` +
      `(have: ${table.columns.slice(0, 5).join(', ')}, ...)`
    );
  }
  return table.rows.map((row) => row[i]);
}

// Frobenius norm of the estimate block, computed because the CSV does
// not carry it as a column.
export function estimateNorm(table: Table): number[] {
  const cols = COLUMNS.filter((c) => c.startsWith('Rhat')).map((c) => column(table, c));
  return table.rows.map((_, k) => {
    let s = 0;
    for (const col of cols) s += col[k] * col[k];
    return Math.sqrt(s);
  });
}
