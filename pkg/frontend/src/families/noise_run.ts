import * as path from 'path';

import { render } from '../figure';
import { Summary, csvPath } from '../summary';
import { familyMain, tagged } from './common';

// Disturbance-run figure: error on a linear axis, where "bounded, not
// vanishing" is visible as a flat band rather than a log-axis tail.

export function noiseRun(summary: Summary, outDir: string, tag?: string): string[] {
  const out = path.join(outDir, tagged(tag, `${summary.scenario}_residual.svg`));
  render({
    inputs: summary.series.map((s) => csvPath(summary, s)),
    labels: summary.series.map((s) => s.label),
    y: 'error',
    logY: false,
    out,
    title: `${summary.scenario}: error under disturbance`,
  });
  return [out];
}

if (require.main === module) {
  familyMain(noiseRun);
}
