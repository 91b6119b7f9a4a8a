import { DataFileError } from './csv';
import { EcdfSeries, stepValueAt } from './series';
import {
  HEIGHT,
  MARGIN,
  SvgDocument,
  WIDTH,
  colorFor,
  drawAxes,
  fmt,
  linearScale,
} from './svg';

export interface EnvelopeGroup {
  label: string;
  series: EcdfSeries[];
}

export interface EnvelopeBand {
  label: string;
  /** Pointwise extremes over the merged grid: [x, minFraction, maxFraction]. */
  grid: Array<[number, number, number]>;
}

/**
 * Pointwise min/max of a group's step curves, evaluated on the union of all
 * x-values appearing in any series of the group.
 */
export function envelopeBand(group: EnvelopeGroup): EnvelopeBand {
  if (group.series.length === 0) {
    throw new DataFileError(`group "${group.label}" has no series`);
  }
  const xs = [...new Set(group.series.flatMap((s) => s.points.map(([v]) => v)))].sort(
    (a, b) => a - b,
  );
  const grid: Array<[number, number, number]> = xs.map((x) => {
    const fractions = group.series.map((s) => stepValueAt(s, x));
    return [x, Math.min(...fractions), Math.max(...fractions)];
  });
  return { label: group.label, grid };
}

export function renderEnvelope(groups: EnvelopeGroup[], xLabel = 'value'): string {
  if (groups.length === 0) {
    throw new DataFileError('no groups to plot');
  }
  const bands = groups.map(envelopeBand);
  const labels = bands.map((b) => b.label);
  const sortedLabels = [...labels].sort();
  const allX = bands.flatMap((b) => b.grid.map(([x]) => x));
  const min = Math.min(...allX, 0);
  const max = Math.max(...allX);

  const left = MARGIN.left;
  const right = WIDTH - MARGIN.right;
  const xScale = linearScale(min, max, left, right);
  const yScale = linearScale(0, 1, HEIGHT - MARGIN.bottom, MARGIN.top);

  const doc = new SvgDocument('cumulative distribution envelopes');
  drawAxes(doc, xScale, yScale, {
    xLabel,
    yLabel: 'fraction',
    xTicks: [0, 0.25, 0.5, 0.75, 1].map((t) => {
      const v = min + (max - min || 1) * t;
      return [v, v.toFixed(2)] as [number, string];
    }),
  });

  for (const band of bands) {
    const color = colorFor(band.label, sortedLabels);
    const upper = band.grid
      .map(([x, , hi], i) => `${i === 0 ? 'M' : 'L'} ${fmt(xScale.toPixel(x))} ${fmt(yScale.toPixel(hi))}`)
      .join(' ');
    const lower = [...band.grid]
      .reverse()
      .map(([x, lo]) => `L ${fmt(xScale.toPixel(x))} ${fmt(yScale.toPixel(lo))}`)
      .join(' ');
    doc.path(`${upper} ${lower} Z`, color, color, ' fill-opacity="0.25" class="band"');
  }

  let y = MARGIN.top + 10;
  for (const label of labels) {
    const color = colorFor(label, sortedLabels);
    doc.rect(MARGIN.left + 12, y - 9, 12, 12, color);
    doc.text(MARGIN.left + 30, y, label, 'start');
    y += 16;
  }
  return doc.render();
}
