export { COLUMNS, Table, column, estimateNorm, parseTable, readTable } from './csv';
export { SeriesSummary, Summary, csvPath, loadSummary } from './summary';
export { Scale, formatTick, linearScale, logScale } from './scale';
export { Axes, ReferenceLine, Series, renderFigure } from './svg';
export { FigureSpec, YQuantity, buildSeries, render, renderEnvelope } from './figure';
export { errorVsTime } from './families/error_vs_time';
export { manifoldNorm, SQRT3 } from './families/manifold_norm';
export { noiseRun } from './families/noise_run';
export { eulerComparison } from './families/euler_comparison';
export { envelopeSemilog } from './families/envelope_semilog';
export { findSummaries, makeAll } from './make_all';
