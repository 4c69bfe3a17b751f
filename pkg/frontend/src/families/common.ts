import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';

import { Summary, loadSummary } from '../summary';

export type Family = (summary: Summary, outDir: string, tag?: string) => string[];

// filename prefix for a run, so two runs of the same scenario (say the
// Euler comparison at two step sizes) do not overwrite each other
export function tagged(tag: string | undefined, name: string): string {
  return tag ? `${tag}__${name}` : name;
}

export function familyMain(family: Family): void {
  const args = yargs(hideBin(process.argv))
    .usage('$0 --summary <summary.json> --out <dir>')
    .option('summary', { type: 'string', demandOption: true, describe: 'harness summary.json' })
    .option('out', { type: 'string', demandOption: true, describe: 'output directory for SVGs' })
    .strict()
    .parseSync();
  const summary = loadSummary(args.summary);
  for (const written of family(summary, args.out)) {
    console.log(`wrote ${written}`);
  }
}
