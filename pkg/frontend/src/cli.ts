#!/usr/bin/env node
/**
 * Figure rendering for review-diffusion CSV reports.
 *
 * Usage:
 *   plots ecdf     --in <label>=<csv> [--in ...] --out <file.svg>
 *                  [--column <name>] [--log2-x] [--day-ticks] [--x-label <text>]
 *   plots bounds   --in <label>=<csv> [--in ...] --out <file.svg>
 *   plots envelope --in <group>=<csv> [--in ...] --out <file.svg> [--column <name>]
 *
 * Exit codes: 0 success, 1 usage error, 2 data or schema error.
 */

import { writeFileSync } from 'fs';
import { DataFileError, SchemaError, readTable } from './csv';
import { boundsFromTable, renderBounds } from './bounds';
import { renderEcdf } from './ecdfplot';
import { EnvelopeGroup, renderEnvelope } from './envelope';
import { seriesFromTable } from './series';

interface Args {
  command: string;
  inputs: Array<[string, string]>;
  out?: string;
  column?: string;
  log2X: boolean;
  dayTicks: boolean;
  xLabel?: string;
}

class UsageError extends Error {}

function parseArgs(argv: string[]): Args {
  if (argv.length === 0) {
    throw new UsageError('missing command: ecdf | bounds | envelope');
  }
  const [command, ...rest] = argv;
  if (!['ecdf', 'bounds', 'envelope'].includes(command)) {
    throw new UsageError(`unknown command "${command}": expected ecdf | bounds | envelope`);
  }
  const args: Args = { command, inputs: [], log2X: false, dayTicks: false };
  for (let i = 0; i < rest.length; i++) {
    const flag = rest[i];
    const next = () => {
      i += 1;
      if (i >= rest.length) {
        throw new UsageError(`${flag} needs a value`);
      }
      return rest[i];
    };
    switch (flag) {
      case '--in': {
        const spec = next();
        const eq = spec.indexOf('=');
        if (eq <= 0) {
          throw new UsageError(`--in expects <label>=<csv>, got "${spec}"`);
        }
        args.inputs.push([spec.slice(0, eq), spec.slice(eq + 1)]);
        break;
      }
      case '--out':
        args.out = next();
        break;
      case '--column':
        args.column = next();
        break;
      case '--x-label':
        args.xLabel = next();
        break;
      case '--log2-x':
        args.log2X = true;
        break;
      case '--day-ticks':
        args.dayTicks = true;
        break;
      default:
        throw new UsageError(`unknown flag "${flag}"`);
    }
  }
  if (args.inputs.length === 0) {
    throw new UsageError('at least one --in <label>=<csv> is required');
  }
  if (!args.out) {
    throw new UsageError('--out <file> is required');
  }
  return args;
}

function runEcdf(args: Args): string {
  const seriesList = args.inputs.map(([label, path]) =>
    seriesFromTable(label, readTable(path, label), label, args.column),
  );
  return renderEcdf(seriesList, {
    log2X: args.log2X,
    dayTicks: args.dayTicks,
    xLabel: args.xLabel,
  });
}

function runBounds(args: Args): string {
  const datasets = args.inputs.map(([label, path]) =>
    boundsFromTable(label, readTable(path, label), label),
  );
  return renderBounds(datasets);
}

function runEnvelope(args: Args): string {
  const byGroup = new Map<string, EnvelopeGroup>();
  for (const [label, path] of args.inputs) {
    const group = byGroup.get(label) ?? { label, series: [] };
    const context = `${label}:${path}`;
    group.series.push(seriesFromTable(label, readTable(path, context), context, args.column));
    byGroup.set(label, group);
  }
  return renderEnvelope([...byGroup.values()], args.xLabel ?? 'value');
}

export function main(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    if (err instanceof UsageError) {
      process.stderr.write(`usage error: ${err.message}\n`);
      return 1;
    }
    throw err;
  }
  try {
    let svg: string;
    if (args.command === 'ecdf') {
      svg = runEcdf(args);
    } else if (args.command === 'bounds') {
      svg = runBounds(args);
    } else {
      svg = runEnvelope(args);
    }
    writeFileSync(args.out!, svg, 'utf-8');
    return 0;
  } catch (err) {
    if (err instanceof SchemaError || err instanceof DataFileError) {
      process.stderr.write(`data error: ${err.message}\n`);
      return 2;
    }
    throw err;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
