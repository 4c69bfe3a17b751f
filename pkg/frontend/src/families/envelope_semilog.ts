import * as path from 'path';

import { renderEnvelope } from '../figure';
import { Summary } from '../summary';
import { familyMain, tagged } from './common';

// Peak-decay figure: the error's local maxima from summary.json on a log
// axis.  A run whose peaks decay shows up as a descending staircase; a
// run without oscillation contributes nothing (and an all-monotone
// summary renders as empty axes, which is correct, not a failure).

export function envelopeSemilog(summary: Summary, outDir: string, tag?: string): string[] {
  const points = summary.series.map((s) => ({
    label: s.label,
    envelope: s.envelope ?? [],
  }));
  const out = path.join(outDir, tagged(tag, `${summary.scenario}_envelope.svg`));
  renderEnvelope(points, `${summary.scenario}: error peak decay`, out);
  return [out];
}

if (require.main === module) {
  familyMain(envelopeSemilog);
}
