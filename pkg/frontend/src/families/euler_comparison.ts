import * as path from 'path';

import { render } from '../figure';
import { Summary, csvPath } from '../summary';
import { familyMain, tagged } from './common';

// Scheme-comparison figure: both series on one log axis.  A baseline
// that blows up simply stops being drawn where its values go non-finite;
// the gap in the line is the result.

export function eulerComparison(summary: Summary, outDir: string, tag?: string): string[] {
  const dt = (summary.config as { dt?: number }).dt;
  const subtitle = typeof dt === 'number' ? ` at dt = ${dt} s` : '';
  const out = path.join(outDir, tagged(tag, `${summary.scenario}_comparison.svg`));
  render({
    inputs: summary.series.map((s) => csvPath(summary, s)),
    labels: summary.series.map((s) => s.label),
    y: 'error',
    logY: true,
    out,
    title: `${summary.scenario}${subtitle}`,
  });
  return [out];
}

if (require.main === module) {
  familyMain(eulerComparison);
}
