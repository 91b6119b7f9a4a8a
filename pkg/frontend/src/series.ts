import { DataFileError, SchemaError, Table, numericColumn, requireColumns } from './csv';

/** One cumulative step curve: strictly increasing values, fractions ending at 1. */
export interface EcdfSeries {
  label: string;
  points: Array<[number, number]>;
}

/** Columns a metric CSV may carry; first match wins when no column is forced. */
const METRIC_COLUMNS = ['normalized_range', 'hops', 'hours', 'absolute_range'];

export function ecdfFromValues(label: string, values: number[], context: string): EcdfSeries {
  if (values.length === 0) {
    throw new DataFileError(`${context}: no rows to plot`);
  }
  const counts = new Map<number, number>();
  for (const v of values) {
    counts.set(v, (counts.get(v) ?? 0) + 1);
  }
  const distinct = [...counts.keys()].sort((a, b) => a - b);
  const points: Array<[number, number]> = [];
  let cumulative = 0;
  for (const v of distinct) {
    cumulative += counts.get(v)!;
    points.push([v, cumulative / values.length]);
  }
  return { label, points };
}

function ecdfFromStepTable(label: string, table: Table, context: string): EcdfSeries {
  const values = numericColumn(table, 'value', context);
  const fractions = numericColumn(table, 'fraction', context);
  if (values.length === 0) {
    throw new DataFileError(`${context}: no rows to plot`);
  }
  const points: Array<[number, number]> = values.map((v, i) => [v, fractions[i]]);
  for (let i = 1; i < points.length; i++) {
    if (points[i][0] <= points[i - 1][0] || points[i][1] <= points[i - 1][1]) {
      throw new DataFileError(`${context}: value/fraction rows must strictly increase`);
    }
  }
  const last = points[points.length - 1][1];
  if (Math.abs(last - 1) > 1e-9) {
    throw new DataFileError(`${context}: final fraction is ${last}, expected 1`);
  }
  return { label, points };
}

/**
 * Build a step series from any documented CSV schema: a precomputed
 * value,fraction table is used as-is; otherwise values are taken from the
 * requested (or first recognized) metric column and accumulated here.
 */
export function seriesFromTable(
  label: string,
  table: Table,
  context: string,
  column?: string,
): EcdfSeries {
  if (column !== undefined) {
    return ecdfFromValues(label, numericColumn(table, column, context), context);
  }
  if (table.columns.includes('value') && table.columns.includes('fraction')) {
    return ecdfFromStepTable(label, table, context);
  }
  for (const candidate of METRIC_COLUMNS) {
    if (table.columns.includes(candidate)) {
      return ecdfFromValues(label, numericColumn(table, candidate, context), context);
    }
  }
  throw new SchemaError(
    `${context}: no plottable column; expected value+fraction or one of ${METRIC_COLUMNS.join(', ')}`,
  );
}

/** Right-continuous step evaluation: fraction of the series at x. */
export function stepValueAt(series: EcdfSeries, x: number): number {
  let fraction = 0;
  for (const [value, f] of series.points) {
    if (value <= x) {
      fraction = f;
    } else {
      break;
    }
  }
  return fraction;
}

export { requireColumns };
