import { EcdfSeries } from './series';
import {
  AxisOptions,
  HEIGHT,
  MARGIN,
  Scale,
  SvgDocument,
  WIDTH,
  colorFor,
  drawAxes,
  drawLegend,
  fmt,
  linearScale,
  log2Scale,
} from './svg';

export interface EcdfPlotOptions {
  xLabel?: string;
  log2X?: boolean;
  /** Temporal-distance mode: ticks at whole weeks of hours, labeled in days. */
  dayTicks?: boolean;
}

const DAY_TICKS: Array<[number, string]> = [
  [168, '7'],
  [336, '14'],
  [504, '21'],
  [672, '28'],
];

function xTicksFor(min: number, max: number, options: EcdfPlotOptions): Array<[number, string]> {
  if (options.dayTicks) {
    return DAY_TICKS.filter(([hours]) => hours <= Math.max(max, 672));
  }
  if (options.log2X) {
    const ticks: Array<[number, string]> = [];
    for (let p = 1; p <= Math.max(max, 1); p *= 2) {
      ticks.push([p, String(p)]);
    }
    return ticks;
  }
  const span = max - min || 1;
  const ticks: Array<[number, string]> = [];
  for (let i = 0; i <= 4; i++) {
    const v = min + (span * i) / 4;
    ticks.push([v, +v.toFixed(2) === Math.round(v) ? String(Math.round(v)) : v.toFixed(2)]);
  }
  return ticks;
}

/**
 * Draw one right-continuous step curve. The path carries exactly one vertical
 * riser per distinct value, so steps are countable in the output.
 */
function stepPath(series: EcdfSeries, xScale: Scale, yScale: Scale, xRight: number): string {
  const segments: string[] = [];
  const [firstValue] = series.points[0];
  segments.push(`M ${fmt(xScale.toPixel(firstValue))} ${fmt(yScale.toPixel(0))}`);
  for (let i = 0; i < series.points.length; i++) {
    const [value, fraction] = series.points[i];
    if (i > 0) {
      segments.push(`H ${fmt(xScale.toPixel(value))}`);
    }
    segments.push(`V ${fmt(yScale.toPixel(fraction))}`);
  }
  segments.push(`H ${fmt(xRight)}`);
  return segments.join(' ');
}

export function renderEcdf(seriesList: EcdfSeries[], options: EcdfPlotOptions = {}): string {
  const labels = seriesList.map((s) => s.label);
  const sortedLabels = [...labels].sort();
  const allValues = seriesList.flatMap((s) => s.points.map(([v]) => v));
  const min = Math.min(...allValues);
  const max = Math.max(...allValues);

  const left = MARGIN.left;
  const right = WIDTH - MARGIN.right;
  const xScale = options.log2X
    ? log2Scale(Math.min(min, 1), Math.max(max, 2), left, right)
    : linearScale(Math.min(min, 0), max, left, right);
  const yScale = linearScale(0, 1, HEIGHT - MARGIN.bottom, MARGIN.top);

  const doc = new SvgDocument('cumulative distribution');
  const axis: AxisOptions = {
    xLabel: options.xLabel ?? 'value',
    yLabel: 'fraction',
    xTicks: xTicksFor(min, max, options),
  };
  drawAxes(doc, xScale, yScale, axis);
  for (const series of seriesList) {
    doc.path(stepPath(series, xScale, yScale, right), colorFor(series.label, sortedLabels), 'none', ' class="series"');
  }
  drawLegend(doc, labels, sortedLabels);
  return doc.render();
}
