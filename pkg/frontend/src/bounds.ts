import { DataFileError, Table, requireColumns } from './csv';
import { HEIGHT, MARGIN, SvgDocument, WIDTH, fmt, linearScale } from './svg';

export const BOUNDEDNESS_KINDS = ['bounded', 'left-bounded', 'right-bounded', 'unbounded'] as const;
export type BoundednessKind = (typeof BOUNDEDNESS_KINDS)[number];

const SEGMENT_COLORS: Record<BoundednessKind, string> = {
  bounded: '#4c78a8',
  'left-bounded': '#f58518',
  'right-bounded': '#54a24b',
  unbounded: '#e45756',
};

export interface BoundsDataset {
  label: string;
  shares: Record<BoundednessKind, number>;
}

const SUM_TOLERANCE = 1e-6;

export function boundsFromTable(label: string, table: Table, context: string): BoundsDataset {
  requireColumns(table, ['boundedness', 'share'], context);
  if (table.rows.length === 0) {
    throw new DataFileError(`${context}: no rows to plot`);
  }
  const shares: Record<BoundednessKind, number> = {
    bounded: 0,
    'left-bounded': 0,
    'right-bounded': 0,
    unbounded: 0,
  };
  for (const row of table.rows) {
    const kind = row['boundedness'] as BoundednessKind;
    if (!BOUNDEDNESS_KINDS.includes(kind)) {
      throw new DataFileError(`${context}: unknown boundedness "${row['boundedness']}"`);
    }
    const share = Number(row['share']);
    if (!Number.isFinite(share)) {
      throw new DataFileError(`${context}: non-numeric share for "${kind}"`);
    }
    if (share < 0) {
      throw new DataFileError(`${context}: negative share for "${kind}"`);
    }
    shares[kind] = share;
  }
  const total = BOUNDEDNESS_KINDS.reduce((acc, kind) => acc + shares[kind], 0);
  if (Math.abs(total - 1) > SUM_TOLERANCE) {
    throw new DataFileError(`${context}: shares sum to ${total}, expected 1 within ${SUM_TOLERANCE}`);
  }
  return { label, shares };
}

/** One stacked bar per dataset, four segments each, tallest stack = 1. */
export function renderBounds(datasets: BoundsDataset[]): string {
  const ordered = [...datasets].sort((a, b) => a.label.localeCompare(b.label));
  const doc = new SvgDocument('boundedness shares');
  const left = MARGIN.left;
  const right = WIDTH - MARGIN.right;
  const yScale = linearScale(0, 1, HEIGHT - MARGIN.bottom, MARGIN.top);
  const slot = (right - left) / ordered.length;
  const barWidth = Math.min(60, slot * 0.6);

  doc.line(left, HEIGHT - MARGIN.bottom, right, HEIGHT - MARGIN.bottom);
  doc.line(left, MARGIN.top, left, HEIGHT - MARGIN.bottom);
  for (const [value, label] of [
    [0, '0'],
    [0.25, '0.25'],
    [0.5, '0.5'],
    [0.75, '0.75'],
    [1, '1'],
  ] as Array<[number, string]>) {
    const y = yScale.toPixel(value);
    doc.line(left - 4, y, left, y);
    doc.text(left - 8, y + 4, label, 'end');
  }

  ordered.forEach((dataset, i) => {
    const xCenter = left + slot * (i + 0.5);
    const x = xCenter - barWidth / 2;
    let stacked = 0;
    for (const kind of BOUNDEDNESS_KINDS) {
      const share = dataset.shares[kind];
      if (share <= 0) {
        continue;
      }
      const yTop = yScale.toPixel(stacked + share);
      const yBottom = yScale.toPixel(stacked);
      doc.rect(x, yTop, barWidth, yBottom - yTop, SEGMENT_COLORS[kind]);
      stacked += share;
    }
    doc.text(xCenter, HEIGHT - MARGIN.bottom + 16, dataset.label);
  });

  let legendY = MARGIN.top + 10;
  for (const kind of BOUNDEDNESS_KINDS) {
    doc.rect(right - 130, legendY - 9, 12, 12, SEGMENT_COLORS[kind]);
    doc.text(right - 112, legendY, kind, 'start');
    legendY += 16;
  }
  doc.text((left + right) / 2, HEIGHT - 12, 'share of channels');
  return doc.render();
}
