import { readFileSync, readdirSync } from 'fs';
import * as path from 'path';
import { describe, expect, it } from 'vitest';

import { makeAll } from '../src/make_all';
import { SQRT3 } from '../src/families/manifold_norm';
import { tmpDir } from './helpers';

// End-to-end over real harness outputs: a manifold-convergence pair, a
// plain convergence run, the scheme comparison at 0.5 s and 0.01 s, and
// the disturbance run (regenerated in global setup via the so3obs CLI).

const FIXTURES = path.join(__dirname, '.generated');

describe('makeAll', () => {
  it('produces all five figure families without error', () => {
    const out = tmpDir('figs-');
    const manifest = makeAll(FIXTURES, out);

    // one representative per family
    expect(manifest).toContain('constant__constant_omega_error.svg');
    expect(manifest).toContain('manifold__manifold_convergence_norm.svg');
    expect(manifest).toContain('noise__noise_residual.svg');
    expect(manifest).toContain('euler_05__euler_comparison_comparison.svg');
    expect(manifest).toContain('euler_001__euler_comparison_comparison.svg');
    expect(manifest.some((f) => f.endsWith('_envelope.svg'))).toBe(true);

    for (const f of manifest) {
      const svg = readFileSync(path.join(out, f), 'utf8');
      expect(svg.startsWith('<svg')).toBe(true);
      expect(svg.trimEnd().endsWith('</svg>')).toBe(true);
    }
  });

  it('draws the sqrt(3) reference line on the norm figure', () => {
    const out = tmpDir('figs-');
    makeAll(FIXTURES, out);
    const svg = readFileSync(
      path.join(out, 'manifold__manifold_convergence_norm.svg'),
      'utf8'
    );
    expect(svg).toContain('class="refline"');
    expect(svg).toContain(`data-y="${SQRT3}"`);
    expect(svg).toContain('sqrt(3) = 1.7321');
  });

  it('interrupts the blown-up baseline instead of inventing points', () => {
    const out = tmpDir('figs-');
    makeAll(FIXTURES, out);
    const svg = readFileSync(
      path.join(out, 'euler_05__euler_comparison_comparison.svg'),
      'utf8'
    );
    // proposed draws through; the baseline's non-finite tail leaves at
    // most a truncated line, so the figure still has drawable content
    expect((svg.match(/<polyline /g) ?? []).length).toBeGreaterThanOrEqual(2);
  });

  it('writes a manifest that matches the directory and is re-run stable', () => {
    const outA = tmpDir('figs-');
    const outB = tmpDir('figs-');
    const a = makeAll(FIXTURES, outA);
    const b = makeAll(FIXTURES, outB);
    expect(a).toEqual(b);
    expect(a).toEqual([...a].sort());

    const listed = JSON.parse(readFileSync(path.join(outA, 'figures.json'), 'utf8'));
    expect(listed.figures).toEqual(a);
    const onDisk = readdirSync(outA).filter((f) => f.endsWith('.svg')).sort();
    expect(onDisk).toEqual(a);

    for (const f of a) {
      expect(readFileSync(path.join(outA, f), 'utf8'))
        .toBe(readFileSync(path.join(outB, f), 'utf8'));
    }
  });

  it('fails loudly when there is nothing to render', () => {
    const empty = tmpDir('empty-');
    expect(() => makeAll(empty, tmpDir('figs-'))).toThrow(/no summary\.json found under/);
  });
});
