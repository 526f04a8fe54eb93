/**
 * Deterministic SVG rendering primitives: scales, ticks, polylines, bars.
 * Output depends only on the input data (no timestamps, no randomness), so
 * re-running on identical inputs produces byte-identical figures.
 */

export interface Scale {
  (v: number): number;
  ticks(n: number): number[];
}

export const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 === 0 ? 1 : d1 - d0;
  const fn = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as Scale;
  fn.ticks = (n: number) => {
    const step = niceStep(span / Math.max(1, n));
    const start = Math.ceil(d0 / step) * step;
    const ticks: number[] = [];
    for (let t = start; t <= d1 + 1e-9 * Math.abs(span); t += step) {
      ticks.push(roundTo(t, step));
    }
    return ticks;
  };
  return fn;
}

export function logScale(d0: number, d1: number, r0: number, r1: number): Scale {
  if (d0 <= 0 || d1 <= 0) {
    throw new Error("log scale requires strictly positive data");
  }
  const l0 = Math.log10(d0);
  const l1 = Math.log10(d1);
  const span = l1 - l0 === 0 ? 1 : l1 - l0;
  const fn = ((v: number) => r0 + ((Math.log10(v) - l0) / span) * (r1 - r0)) as Scale;
  fn.ticks = () => {
    const ticks: number[] = [];
    for (let e = Math.ceil(l0); e <= Math.floor(l1); e++) {
      ticks.push(10 ** e);
    }
    if (ticks.length === 0) ticks.push(d0, d1);
    return ticks;
  };
  return fn;
}

function niceStep(raw: number): number {
  const mag = 10 ** Math.floor(Math.log10(raw));
  const norm = raw / mag;
  const nice = norm <= 1 ? 1 : norm <= 2 ? 2 : norm <= 5 ? 5 : 10;
  return nice * mag;
}

function roundTo(v: number, step: number): number {
  const digits = Math.max(0, -Math.floor(Math.log10(step)) + 1);
  return Number(v.toFixed(digits + 2 > 15 ? 15 : digits + 2));
}

export function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e5 || a < 1e-3) return v.toExponential(1);
  return String(Number(v.toPrecision(6)));
}

export interface FrameSpec {
  width: number;
  height: number;
  margin: { top: number; right: number; bottom: number; left: number };
  title: string;
  xLabel: string;
  yLabel: string;
  caption: string;
}

export class SvgBuilder {
  private parts: string[] = [];

  constructor(readonly width: number, readonly height: number) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
        `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
      `<rect width="${width}" height="${height}" fill="white"/>`,
    );
  }

  raw(s: string): void {
    this.parts.push(s);
  }

  text(x: number, y: number, s: string, attrs = ""): void {
    this.parts.push(`<text x="${r2(x)}" y="${r2(y)}" ${attrs}>${escapeXml(s)}</text>`);
  }

  line(x1: number, y1: number, x2: number, y2: number, attrs: string): void {
    this.parts.push(
      `<line x1="${r2(x1)}" y1="${r2(y1)}" x2="${r2(x2)}" y2="${r2(y2)}" ${attrs}/>`,
    );
  }

  polyline(pts: Array<[number, number]>, attrs: string): void {
    const path = pts.map(([x, y]) => `${r2(x)},${r2(y)}`).join(" ");
    this.parts.push(`<polyline points="${path}" fill="none" ${attrs}/>`);
  }

  rect(x: number, y: number, w: number, h: number, attrs: string): void {
    this.parts.push(
      `<rect x="${r2(x)}" y="${r2(y)}" width="${r2(w)}" height="${r2(h)}" ${attrs}/>`,
    );
  }

  render(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

export function drawFrame(
  svg: SvgBuilder,
  spec: FrameSpec,
  xs: Scale,
  ys: Scale,
): void {
  const { margin, width, height } = spec;
  const x0 = margin.left;
  const x1 = width - margin.right;
  const y0 = height - margin.bottom;
  const y1 = margin.top;
  svg.text(width / 2, y1 - 12, spec.title, 'text-anchor="middle" font-size="14"');
  svg.line(x0, y0, x1, y0, 'stroke="black" stroke-width="1"');
  svg.line(x0, y0, x0, y1, 'stroke="black" stroke-width="1"');
  for (const t of xs.ticks(6)) {
    const px = xs(t);
    svg.line(px, y0, px, y0 + 4, 'stroke="black" stroke-width="1"');
    svg.text(px, y0 + 16, fmt(t), 'text-anchor="middle" font-size="10"');
  }
  for (const t of ys.ticks(6)) {
    const py = ys(t);
    svg.line(x0 - 4, py, x0, py, 'stroke="black" stroke-width="1"');
    svg.text(x0 - 6, py + 3, fmt(t), 'text-anchor="end" font-size="10"');
    svg.line(x0, py, x1, py, 'stroke="#dddddd" stroke-width="0.5"');
  }
  svg.text((x0 + x1) / 2, height - 8, spec.xLabel, 'text-anchor="middle" font-size="11"');
  svg.raw(
    `<text x="14" y="${r2((y0 + y1) / 2)}" text-anchor="middle" font-size="11" ` +
      `transform="rotate(-90 14 ${r2((y0 + y1) / 2)})">${escapeXml(spec.yLabel)}</text>`,
  );
  svg.text(x0, 14, spec.caption, 'font-size="9" fill="#555555"');
}

function r2(v: number): string {
  return (Math.round(v * 100) / 100).toString();
}

function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
