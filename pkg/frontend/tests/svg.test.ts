import { describe, expect, it } from 'vitest';

import { renderFigure } from '../src/svg';

const AXES = { title: 'test', xLabel: 'time, s', yLabel: 'value' };

function series(label: string, t: number[], y: number[]) {
  return { label, t, y };
}

describe('renderFigure', () => {
  it('is byte-deterministic', () => {
    const s = [series('a', [0, 1, 2], [1, 2, 3])];
    expect(renderFigure(s, AXES)).toBe(renderFigure(s, AXES));
  });

  it('breaks the polyline where a sample is non-finite', () => {
    const s = [series('a', [0, 1, 2, 3, 4], [1, 2, NaN, 2, 1])];
    const svg = renderFigure(s, AXES);
    const polylines = svg.match(/<polyline /g) ?? [];
    expect(polylines).toHaveLength(2);
  });

  it('drops non-positive samples on a log axis', () => {
    const s = [series('a', [0, 1, 2, 3], [1, 0, -1, 10])];
    const svg = renderFigure(s, { ...AXES, logY: true });
    // 1 and 10 survive but are separated by the dropped pair, so each
    // becomes a lone marker rather than a polyline
    expect(svg.match(/<polyline /g)).toBeNull();
    expect((svg.match(/<circle /g) ?? []).length).toBe(2);
  });

  it('renders empty axes when there is no data', () => {
    const svg = renderFigure([], AXES);
    expect(svg).toContain('<svg');
    expect(svg).toContain('<rect');            // frame
    expect(svg).toMatch(/<line[^>]*stroke="#333333"/);  // ticks exist
    expect(svg).not.toContain('<polyline');
  });

  it('draws a labelled reference line even with no data', () => {
    const svg = renderFigure([], {
      ...AXES,
      references: [{ y: Math.sqrt(3), label: 'sqrt(3) = 1.7321' }],
    });
    expect(svg).toContain('class="refline"');
    expect(svg).toContain(`data-y="${Math.sqrt(3)}"`);
    expect(svg).toContain('sqrt(3) = 1.7321');
  });

  it('puts every series label in the legend, escaped', () => {
    const s = [
      series('k_p=0.5', [0, 1], [1, 2]),
      series('a<b & c', [0, 1], [2, 1]),
    ];
    const svg = renderFigure(s, AXES);
    expect(svg).toContain('>k_p=0.5</text>');
    expect(svg).toContain('>a&lt;b &amp; c</text>');
  });

  it('assigns distinct colors to the first few series', () => {
    const s = [
      series('one', [0, 1], [1, 2]),
      series('two', [0, 1], [2, 3]),
    ];
    const svg = renderFigure(s, AXES);
    expect(svg).toContain('#1f6fb2');
    expect(svg).toContain('#d1495b');
  });
});
