import { execFileSync } from 'child_process';
import { existsSync, rmSync } from 'fs';
import * as path from 'path';

// Integration fixtures are real harness outputs, regenerated through the
// observer package's command line rather than vendored (the fine-step
// comparison alone is ~12 MB of CSV).  Requires `so3obs` on PATH.

const ROOT = path.join(__dirname, '.generated');

const RUNS: [string, string[]][] = [
  ['manifold', ['--scenario', 'manifold_convergence']],
  ['constant', ['--scenario', 'constant_omega']],
  ['euler_05', ['--scenario', 'euler_comparison']],
  ['euler_001', ['--scenario', 'euler_comparison', '--dt', '0.01']],
  ['noise', ['--scenario', 'noise']],
];

export default function setup(): void {
  if (existsSync(ROOT)) rmSync(ROOT, { recursive: true });
  for (const [dir, args] of RUNS) {
    const out = path.join(ROOT, dir);
    try {
      execFileSync('so3obs', ['run', ...args, '--out', out], { stdio: 'pipe' });
    } catch (e) {
      throw new Error(
        `failed to generate fixtures via the so3obs CLI (${(e as Error).message}); ` +
        'install the observer package first: pip install -e .. --no-build-isolation'
      );
    }
  }
}
