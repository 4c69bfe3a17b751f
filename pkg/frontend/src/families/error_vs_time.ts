import * as path from 'path';

import { render } from '../figure';
import { Summary, csvPath } from '../summary';
import { familyMain, tagged } from './common';

// Generic error-vs-time figure: every series of the run on one log axis,
// legend carrying the series labels (for a sweep these are the swept
// parameter values).

export function errorVsTime(summary: Summary, outDir: string, tag?: string): string[] {
  const out = path.join(outDir, tagged(tag, `${summary.scenario}_error.svg`));
  render({
    inputs: summary.series.map((s) => csvPath(summary, s)),
    labels: summary.series.map((s) => s.label),
    y: 'error',
    logY: true,
    out,
    title: `${summary.scenario}: estimation error`,
  });
  return [out];
}

if (require.main === module) {
  familyMain(errorVsTime);
}
