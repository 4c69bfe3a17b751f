// Axis scales: domain -> pixel mapping plus tick placement.  Linear
// ticks walk the usual 1/2/5 ladder; log ticks sit on powers of ten.

export interface Scale {
  toPx(v: number): number;
  ticks: number[];
  format(v: number): string;
}

function niceStep(span: number, target: number): number {
  const raw = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= raw) return m * mag;
  }
  return 10 * mag;
}

export function formatTick(v: number): string {
  if (v === 0) return '0';
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) {
    const e = Math.floor(Math.log10(a));
    const m = v / Math.pow(10, e);
    const ms = Math.abs(m - 1) < 1e-9 ? '' : `${Number(m.toFixed(2))}x`;
    return `${ms}1e${e}`;
  }
  return `${Number(v.toPrecision(6))}`;
}

export function linearScale(lo: number, hi: number, pxLo: number, pxHi: number): Scale {
  if (!(hi > lo)) {
    // degenerate domain: pad around the single value
    const pad = lo === 0 ? 1 : Math.abs(lo) * 0.5;
    lo -= pad;
    hi += pad;
  }
  const step = niceStep(hi - lo, 5);
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  const s = (pxHi - pxLo) / (hi - lo);
  return {
    toPx: (v) => pxLo + (v - lo) * s,
    ticks,
    format: formatTick,
  };
}

export function logScale(lo: number, hi: number, pxLo: number, pxHi: number): Scale {
  if (!(lo > 0)) throw new Error(`log scale needs a positive domain, got lo = ${lo}`);
  if (!(hi > lo)) hi = lo * 10;
  const e0 = Math.floor(Math.log10(lo));
  const e1 = Math.ceil(Math.log10(hi));
  const ticks: number[] = [];
  // cap the tick count on very wide domains by striding the decades;
  // Number("1e-4") is correctly rounded where Math.pow(10, -4) is not
  const stride = Math.max(1, Math.ceil((e1 - e0) / 8));
  for (let e = e0; e <= e1; e += stride) ticks.push(Number(`1e${e}`));
  const la = Math.log10(lo);
  const s = (pxHi - pxLo) / (Math.log10(hi) - la);
  return {
    toPx: (v) => pxLo + (Math.log10(v) - la) * s,
    ticks,
    format: formatTick,
  };
}
