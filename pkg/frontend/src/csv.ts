import { readFileSync } from 'fs';
import Papa from 'papaparse';

export class SchemaError extends Error {}
export class DataFileError extends Error {}

export interface Table {
  columns: string[];
  rows: Record<string, string>[];
}

export function parseCsv(text: string, context: string): Table {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new DataFileError(`${context}: ${first.message} (row ${first.row})`);
  }
  const columns = parsed.meta.fields ?? [];
  if (columns.length === 0) {
    throw new SchemaError(`${context}: missing header row`);
  }
  return { columns, rows: parsed.data };
}

export function readTable(path: string, context: string): Table {
  let text: string;
  try {
    text = readFileSync(path, 'utf-8');
  } catch (err) {
    throw new DataFileError(`${context}: cannot read ${path}`);
  }
  return parseCsv(text, context);
}

export function requireColumns(table: Table, needed: string[], context: string): void {
  for (const column of needed) {
    if (!table.columns.includes(column)) {
      throw new SchemaError(`${context}: missing column "${column}" (found: ${table.columns.join(', ')})`);
    }
  }
}

export function numericColumn(table: Table, column: string, context: string): number[] {
  requireColumns(table, [column], context);
  return table.rows.map((row, i) => {
    const value = Number(row[column]);
    if (!Number.isFinite(value)) {
      throw new DataFileError(`${context}: non-numeric "${column}" in row ${i + 1}: ${row[column]}`);
    }
    return value;
  });
}
