import * as path from 'path';

import { render } from '../figure';
import { Summary, csvPath } from '../summary';
import { familyMain, tagged } from './common';

export const SQRT3 = Math.sqrt(3);

// Norm-convergence figure: Frobenius norm of the estimate for each
// series, with the sqrt(3) line every rotation matrix sits on.  The
// point of the figure is which series reaches that line and stays.

export function manifoldNorm(summary: Summary, outDir: string, tag?: string): string[] {
  const out = path.join(outDir, tagged(tag, `${summary.scenario}_norm.svg`));
  render({
    inputs: summary.series.map((s) => csvPath(summary, s)),
    labels: summary.series.map((s) => s.label),
    y: 'norm',
    logY: false,
    out,
    title: `${summary.scenario}: estimate norm`,
    references: [{ y: SQRT3, label: 'sqrt(3) = 1.7321' }],
  });
  return [out];
}

if (require.main === module) {
  familyMain(manifoldNorm);
}
