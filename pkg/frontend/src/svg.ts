/** Deterministic SVG assembly: fixed canvas, fixed precision, sorted inputs. */

export const WIDTH = 640;
export const HEIGHT = 440;
export const MARGIN = { top: 20, right: 24, bottom: 52, left: 56 };

export const PALETTE = [
  '#4c78a8',
  '#f58518',
  '#54a24b',
  '#e45756',
  '#72b7b2',
  '#b279a2',
  '#9d755d',
  '#bab0ac',
];

export interface Scale {
  toPixel(value: number): number;
}

export function fmt(x: number): string {
  return x.toFixed(2);
}

export function linearScale(min: number, max: number, pxMin: number, pxMax: number): Scale {
  const span = max - min || 1;
  return {
    toPixel: (value: number) => pxMin + ((value - min) / span) * (pxMax - pxMin),
  };
}

export function log2Scale(min: number, max: number, pxMin: number, pxMax: number): Scale {
  const lo = Math.log2(Math.max(min, 1));
  const hi = Math.log2(Math.max(max, 2));
  const inner = linearScale(lo, hi, pxMin, pxMax);
  return {
    toPixel: (value: number) => inner.toPixel(Math.log2(Math.max(value, 1))),
  };
}

export function colorFor(label: string, sortedLabels: string[]): string {
  const index = sortedLabels.indexOf(label);
  return PALETTE[(index >= 0 ? index : 0) % PALETTE.length];
}

export class SvgDocument {
  private parts: string[] = [];

  constructor(private title: string) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
      `<title>${escapeXml(title)}</title>`,
      `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
    );
  }

  path(d: string, stroke: string, fill = 'none', extra = ''): void {
    this.parts.push(`<path d="${d}" stroke="${stroke}" fill="${fill}" stroke-width="1.5"${extra}/>`);
  }

  rect(x: number, y: number, w: number, h: number, fill: string): void {
    this.parts.push(
      `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" height="${fmt(h)}" fill="${fill}" stroke="white" stroke-width="0.5"/>`,
    );
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke = '#333', width = 1): void {
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${stroke}" stroke-width="${width}"/>`,
    );
  }

  text(x: number, y: number, content: string, anchor = 'middle', size = 11): void {
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" text-anchor="${anchor}" font-family="sans-serif" font-size="${size}" fill="#333">${escapeXml(content)}</text>`,
    );
  }

  render(): string {
    return this.parts.join('\n') + '\n</svg>\n';
  }
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export interface AxisOptions {
  xLabel: string;
  yLabel: string;
  xTicks: Array<[number, string]>;
  yTicks?: Array<[number, string]>;
}

export function drawAxes(doc: SvgDocument, xScale: Scale, yScale: Scale, options: AxisOptions): void {
  const left = MARGIN.left;
  const right = WIDTH - MARGIN.right;
  const top = MARGIN.top;
  const bottom = HEIGHT - MARGIN.bottom;
  doc.line(left, bottom, right, bottom);
  doc.line(left, top, left, bottom);
  for (const [value, label] of options.xTicks) {
    const x = xScale.toPixel(value);
    doc.line(x, bottom, x, bottom + 4);
    doc.text(x, bottom + 16, label);
  }
  const yTicks = options.yTicks ?? [
    [0, '0'],
    [0.25, '0.25'],
    [0.5, '0.5'],
    [0.75, '0.75'],
    [1, '1'],
  ];
  for (const [value, label] of yTicks) {
    const y = yScale.toPixel(value);
    doc.line(left - 4, y, left, y);
    doc.text(left - 8, y + 4, label, 'end');
  }
  doc.text((left + right) / 2, HEIGHT - 12, options.xLabel);
  doc.text(16, (top + bottom) / 2, options.yLabel, 'middle', 11);
}

export function drawLegend(doc: SvgDocument, labels: string[], sortedLabels: string[]): void {
  let y = MARGIN.top + 10;
  for (const label of labels) {
    const color = colorFor(label, sortedLabels);
    doc.line(MARGIN.left + 12, y - 4, MARGIN.left + 34, y - 4, color, 2);
    doc.text(MARGIN.left + 40, y, label, 'start');
    y += 16;
  }
}
