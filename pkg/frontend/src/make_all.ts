import { mkdirSync, readdirSync, statSync, writeFileSync } from 'fs';
import * as path from 'path';
import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';

import { Summary, loadSummary } from './summary';
import { Family } from './families/common';
import { envelopeSemilog } from './families/envelope_semilog';
import { errorVsTime } from './families/error_vs_time';
import { eulerComparison } from './families/euler_comparison';
import { manifoldNorm } from './families/manifold_norm';
import { noiseRun } from './families/noise_run';

// Which families apply to a run.  Error and envelope figures make sense
// for every scenario; the others key on what the run actually is.
function familiesFor(summary: Summary): Family[] {
  const out: Family[] = [errorVsTime, envelopeSemilog];
  if (summary.scenario === 'manifold_convergence') out.push(manifoldNorm);
  if (summary.scenario === 'noise') out.push(noiseRun);
  if (summary.scenario === 'euler_comparison') out.push(eulerComparison);
  return out;
}

export function findSummaries(root: string): string[] {
  const hits: string[] = [];
  const entries = readdirSync(root, { recursive: true }) as string[];
  for (const e of entries) {
    if (path.basename(e) === 'summary.json') {
      const full = path.join(root, e);
      if (statSync(full).isFile()) hits.push(full);
    }
  }
  return hits.sort();
}

export function makeAll(root: string, outDir: string): string[] {
  const summaries = findSummaries(root);
  if (summaries.length === 0) {
    throw new Error(`no summary.json found under ${root}`);
  }
  mkdirSync(outDir, { recursive: true });
  const written: string[] = [];
  for (const file of summaries) {
    const summary = loadSummary(file);
    const rel = path.relative(root, path.dirname(file));
    const tag = rel.split(path.sep).filter((p) => p.length > 0).join('_');
    for (const family of familiesFor(summary)) {
      written.push(...family(summary, outDir, tag));
    }
  }
  const manifest = written.map((w) => path.relative(outDir, w)).sort();
  writeFileSync(
    path.join(outDir, 'figures.json'),
    JSON.stringify({ figures: manifest }, null, 2) + '\n'
  );
  return manifest;
}

function main(): void {
  const args = yargs(hideBin(process.argv))
    .usage('$0 --in <harness output root> --out <figure dir>')
    .option('in', { type: 'string', demandOption: true, describe: 'directory tree of harness runs' })
    .option('out', { type: 'string', demandOption: true, describe: 'output directory for SVGs' })
    .strict()
    .parseSync();
  const manifest = makeAll(args.in, args.out);
  for (const name of manifest) console.log(`wrote ${name}`);
  console.log(`${manifest.length} figures, manifest in figures.json`);
}

if (require.main === module) {
  main();
}
