import { Scale, linearScale, logScale } from './scale';

export interface Series {
  label: string;
  t: number[];
  y: number[];
  markers?: boolean;
}

export interface ReferenceLine {
  y: number;
  label: string;
}

export interface Axes {
  title: string;
  xLabel: string;
  yLabel: string;
  logY?: boolean;
  references?: ReferenceLine[];
}

const W = 760;
const H = 440;
const M = { left: 68, right: 18, top: 36, bottom: 48 };
const PALETTE = ['#1f6fb2', '#d1495b', '#3d9970', '#b8860b', '#6f42c1', '#444444'];

function fmt(v: number): string {
  // fixed two-decimal pixel coordinates keep the output byte-stable
  return v.toFixed(2);
}

function esc(s: string): string {
  return s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

function usable(v: number, logY: boolean): boolean {
  return Number.isFinite(v) && (!logY || v > 0);
}

interface Pt {
  x: number;
  y: number;
}

// split a series into runs of drawable points; a non-finite (or, on a
// log axis, non-positive) sample breaks the line instead of lying
function segments(s: Series, logY: boolean): Pt[][] {
  const runs: Pt[][] = [];
  let run: Pt[] = [];
  for (let i = 0; i < s.t.length; i++) {
    if (Number.isFinite(s.t[i]) && usable(s.y[i], logY)) {
      run.push({ x: s.t[i], y: s.y[i] });
    } else if (run.length > 0) {
      runs.push(run);
      run = [];
    }
  }
  if (run.length > 0) runs.push(run);
  return runs;
}

export function renderFigure(series: Series[], axes: Axes): string {
  const logY = axes.logY === true;
  const refs = axes.references ?? [];

  let xs: number[] = [];
  let ys: number[] = [];
  for (const s of series) {
    for (let i = 0; i < s.t.length; i++) {
      if (Number.isFinite(s.t[i]) && usable(s.y[i], logY)) {
        xs.push(s.t[i]);
        ys.push(s.y[i]);
      }
    }
  }
  for (const r of refs) {
    if (usable(r.y, logY)) ys.push(r.y);
  }

  const x0 = xs.length ? Math.min(...xs) : 0;
  const x1 = xs.length ? Math.max(...xs) : 1;
  let y0: number;
  let y1: number;
  if (ys.length) {
    y0 = Math.min(...ys);
    y1 = Math.max(...ys);
  } else {
    [y0, y1] = logY ? [1e-3, 1] : [0, 1];
  }
  if (!logY) {
    const pad = (y1 - y0) * 0.05;
    y0 -= pad;
    y1 += pad;
  }

  const sx = linearScale(x0, x1, M.left, W - M.right);
  const sy: Scale = logY
    ? logScale(y0, y1, H - M.bottom, M.top)
    : linearScale(y0, y1, H - M.bottom, M.top);

  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" ` +
    `viewBox="0 0 ${W} ${H}" font-family="sans-serif" font-size="12">`
  );
  out.push(`<rect width="${W}" height="${H}" fill="#ffffff"/>`);
  out.push(`<text x="${fmt(W / 2)}" y="20" text-anchor="middle" font-size="14">${esc(axes.title)}</text>`);

  // frame and ticks
  out.push(
    `<rect x="${M.left}" y="${M.top}" width="${W - M.left - M.right}" ` +
    `height="${H - M.top - M.bottom}" fill="none" stroke="#333333"/>`
  );
  for (const v of sx.ticks) {
    const px = sx.toPx(v);
    if (px < M.left - 0.5 || px > W - M.right + 0.5) continue;
    out.push(`<line x1="${fmt(px)}" y1="${H - M.bottom}" x2="${fmt(px)}" y2="${H - M.bottom + 5}" stroke="#333333"/>`);
    out.push(`<text x="${fmt(px)}" y="${H - M.bottom + 18}" text-anchor="middle">${esc(sx.format(v))}</text>`);
  }
  for (const v of sy.ticks) {
    const py = sy.toPx(v);
    if (py < M.top - 0.5 || py > H - M.bottom + 0.5) continue;
    out.push(`<line x1="${fmt(M.left - 5)}" y1="${fmt(py)}" x2="${M.left}" y2="${fmt(py)}" stroke="#333333"/>`);
    out.push(`<line x1="${M.left}" y1="${fmt(py)}" x2="${W - M.right}" y2="${fmt(py)}" stroke="#dddddd"/>`);
    out.push(`<text x="${fmt(M.left - 8)}" y="${fmt(py + 4)}" text-anchor="end">${esc(sy.format(v))}</text>`);
  }
  out.push(`<text x="${fmt((M.left + W - M.right) / 2)}" y="${H - 10}" text-anchor="middle">${esc(axes.xLabel)}</text>`);
  out.push(
    `<text x="16" y="${fmt((M.top + H - M.bottom) / 2)}" text-anchor="middle" ` +
    `transform="rotate(-90 16 ${fmt((M.top + H - M.bottom) / 2)})">${esc(axes.yLabel)}</text>`
  );

  // reference lines under the data
  for (const r of refs) {
    if (!usable(r.y, logY)) continue;
    const py = sy.toPx(r.y);
    out.push(
      `<line class="refline" data-y="${r.y}" x1="${M.left}" y1="${fmt(py)}" ` +
      `x2="${W - M.right}" y2="${fmt(py)}" stroke="#888888" stroke-dasharray="6 4"/>`
    );
    out.push(
      `<text x="${fmt(W - M.right - 4)}" y="${fmt(py - 4)}" text-anchor="end" ` +
      `fill="#666666">${esc(r.label)}</text>`
    );
  }

  series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    for (const run of segments(s, logY)) {
      if (run.length === 1) {
        const p = run[0];
        out.push(`<circle cx="${fmt(sx.toPx(p.x))}" cy="${fmt(sy.toPx(p.y))}" r="2.5" fill="${color}"/>`);
        continue;
      }
      const pts = run.map((p) => `${fmt(sx.toPx(p.x))},${fmt(sy.toPx(p.y))}`).join(' ');
      out.push(`<polyline points="${pts}" fill="none" stroke="${color}" stroke-width="1.5"/>`);
    }
    if (s.markers) {
      for (const run of segments(s, logY)) {
        for (const p of run) {
          out.push(`<circle cx="${fmt(sx.toPx(p.x))}" cy="${fmt(sy.toPx(p.y))}" r="2.5" fill="${color}"/>`);
        }
      }
    }
  });

  // legend, top right inside the frame
  const entries: { label: string; color: string; dashed: boolean }[] = series.map((s, i) => ({
    label: s.label,
    color: PALETTE[i % PALETTE.length],
    dashed: false,
  }));
  for (const r of refs) entries.push({ label: r.label, color: '#888888', dashed: true });
  if (entries.length > 0) {
    const lx = W - M.right - 160;
    let ly = M.top + 14;
    for (const e of entries) {
      const dash = e.dashed ? ' stroke-dasharray="6 4"' : '';
      out.push(`<line x1="${lx}" y1="${fmt(ly - 4)}" x2="${lx + 24}" y2="${fmt(ly - 4)}" stroke="${e.color}" stroke-width="1.5"${dash}/>`);
      out.push(`<text x="${lx + 30}" y="${fmt(ly)}">${esc(e.label)}</text>`);
      ly += 16;
    }
  }

  out.push('</svg>');
  return out.join('\n') + '\n';
}
