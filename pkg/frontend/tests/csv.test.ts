import { describe, expect, it } from 'vitest';

import { COLUMNS, column, estimateNorm, parseTable } from '../src/csv';
import { makeCsv } from './helpers';

describe('parseTable', () => {
  it('round-trips values including non-finite spellings', () => {
    const text = makeCsv([
      { frobenius_error: '2.7788', bhat1: '-0.25' },
      { frobenius_error: 'nan', defect: 'inf', bias_error: '-inf' },
    ]);
    const table = parseTable(text, 'mem.csv');
    expect(table.rows).toHaveLength(2);
    expect(column(table, 'frobenius_error')[0]).toBeCloseTo(2.7788, 12);
    expect(column(table, 'frobenius_error')[1]).toBeNaN();
    expect(column(table, 'defect')[1]).toBe(Infinity);
    expect(column(table, 'bias_error')[1]).toBe(-Infinity);
    expect(column(table, 'bhat1')[0]).toBe(-0.25);
  });

  it('keeps full precision on 17-digit decimals', () => {
    const v = '0.10000000000000001';
    const table = parseTable(makeCsv([{ omega1: v }]), 'mem.csv');
    expect(column(table, 'omega1')[0]).toBe(Number(v));
  });

  it('accepts a header-only file as zero rows', () => {
    const table = parseTable(COLUMNS.join(',') + '\n', 'empty.csv');
    expect(table.rows).toHaveLength(0);
  });

  it('rejects a foreign header, naming the file', () => {
    expect(() => parseTable('dt,deviation,ratio\n0.2,0.1,\n', 'study.csv'))
      .toThrow(/study\.csv: unexpected header \[dt, deviation, ratio/);
  });

  it('rejects a reordered header', () => {
    const cols = [...COLUMNS];
    [cols[0], cols[1]] = [cols[1], cols[0]];
    expect(() => parseTable(cols.join(',') + '\n', 'x.csv')).toThrow(/unexpected header/);
  });

  it('rejects a short row with its row number', () => {
    const text = COLUMNS.join(',') + '\n' + '0,0\n';
    expect(() => parseTable(text, 'x.csv')).toThrow(/row 1 has 2 cells, expected 29/);
  });

  it('rejects a garbage cell, naming row and column', () => {
    const text = makeCsv([{ defect: 'oops' }]);
    expect(() => parseTable(text, 'x.csv')).toThrow(/x\.csv: row 1, column defect: unparseable cell "oops"/);
  });

  it('names the missing column on lookup', () => {
    const table = parseTable(makeCsv([{}]), 'y.csv');
    expect(() => column(table, 'no_such')).toThrow(/y\.csv: missing column "no_such"/);
  });
});

describe('estimateNorm', () => {
  it('is sqrt(3) for an identity estimate', () => {
    const table = parseTable(
      makeCsv([{ Rhat11: 1, Rhat22: 1, Rhat33: 1 }]),
      'id.csv'
    );
    expect(estimateNorm(table)[0]).toBeCloseTo(Math.sqrt(3), 12);
  });

  it('sums all nine entries', () => {
    const table = parseTable(makeCsv([{ Rhat12: 2, Rhat31: -2 }]), 'z.csv');
    expect(estimateNorm(table)[0]).toBeCloseTo(Math.sqrt(8), 12);
  });
});
