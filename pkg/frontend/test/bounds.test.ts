import { describe, expect, it } from 'vitest';
import { parseCsv, DataFileError } from '../src/csv';
import { boundsFromTable, renderBounds } from '../src/bounds';

function table(rows: string) {
  return parseCsv('boundedness,count,share\n' + rows, 'test');
}

describe('boundedness shares', () => {
  it('parses a valid share vector', () => {
    const dataset = boundsFromTable(
      'sys',
      table('bounded,2,0.5\nleft-bounded,1,0.25\nright-bounded,1,0.25\nunbounded,0,0.0\n'),
      'sys',
    );
    expect(dataset.shares).toEqual({
      bounded: 0.5,
      'left-bounded': 0.25,
      'right-bounded': 0.25,
      unbounded: 0,
    });
  });

  it('rejects shares that do not sum to 1', () => {
    expect(() =>
      boundsFromTable('sys', table('bounded,1,0.5\nleft-bounded,1,0.2\n'), 'sys'),
    ).toThrow(/sum/);
  });

  it('rejects negative shares', () => {
    expect(() =>
      boundsFromTable('sys', table('bounded,1,1.5\nleft-bounded,1,-0.5\n'), 'sys'),
    ).toThrow(/negative/);
  });

  it('rejects unknown kinds and empty bodies', () => {
    expect(() => boundsFromTable('sys', table('sideways,1,1.0\n'), 'sys')).toThrow(/sideways/);
    expect(() => boundsFromTable('sys', table(''), 'sys')).toThrow(DataFileError);
  });

  it('draws one stacked bar per dataset with segment heights matching shares', () => {
    const a = boundsFromTable(
      'a',
      table('bounded,2,0.5\nleft-bounded,1,0.25\nright-bounded,1,0.25\nunbounded,0,0.0\n'),
      'a',
    );
    const svg = renderBounds([a]);
    const rects = [...svg.matchAll(/<rect x="[^"]*" y="[^"]*" width="[^"]*" height="([^"]+)"/g)];
    // 3 non-zero segments (plus 4 legend swatches of fixed height 12)
    const segmentHeights = rects.map((m) => Number(m[1])).filter((h) => h !== 12);
    expect(segmentHeights).toHaveLength(3);
    const plotHeight = segmentHeights.reduce((x, y) => x + y, 0);
    expect(segmentHeights[0] / plotHeight).toBeCloseTo(0.5, 5);
  });

  it('accepts exactly-one within the documented tolerance', () => {
    const wobbly = table('bounded,1,0.9999995\nleft-bounded,0,0.0\nright-bounded,0,0.0\nunbounded,0,0.0\n');
    expect(() => boundsFromTable('sys', wobbly, 'sys')).not.toThrow();
  });

  it('is deterministic and sorts bars by label', () => {
    const rows = 'bounded,1,1.0\nleft-bounded,0,0.0\nright-bounded,0,0.0\nunbounded,0,0.0\n';
    const b = boundsFromTable('beta', table(rows), 'beta');
    const a = boundsFromTable('alpha', table(rows), 'alpha');
    expect(renderBounds([b, a])).toBe(renderBounds([a, b]));
    const svg = renderBounds([b, a]);
    expect(svg.indexOf('>alpha<')).toBeLessThan(svg.indexOf('>beta<'));
  });
});
