/**
 * Convergence figure: one curve per labeled group, each curve the mean gws
 * across that group's seeded traces, on the group's shared evaluation grid.
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { expandGlob } from "./glob.js";
import { MeanCurve, Trace, meanCurve, parseTrace } from "./trace.js";
import { PALETTE, SvgBuilder, drawFrame, linearScale, logScale } from "./svg.js";

export interface ConvergencePlotSpec {
  groups: Array<{ pattern: string; label: string }>;
  out: string;
  logY: boolean;
  title?: string;
}

export interface GroupCurve {
  label: string;
  curve: MeanCurve;
  fingerprints: string[];
}

const FP_SEGMENT = /^[0-9a-f]{12}$/;

function fingerprintsFromPaths(files: string[]): string[] {
  const fps = new Set<string>();
  for (const f of files) {
    for (const seg of f.split(path.sep)) {
      if (FP_SEGMENT.test(seg)) fps.add(seg);
    }
  }
  return [...fps].sort();
}

export function loadGroup(pattern: string, label: string): GroupCurve {
  const files = expandGlob(pattern);
  if (files.length === 0) {
    throw new Error(`no trace files matched "${pattern}"`);
  }
  const traces: Trace[] = files.map((f) =>
    parseTrace(fs.readFileSync(f, "utf-8"), f),
  );
  return { label, curve: meanCurve(traces), fingerprints: fingerprintsFromPaths(files) };
}

export function renderConvergence(groups: GroupCurve[], logY: boolean, title?: string): string {
  const width = 760;
  const height = 480;
  const margin = { top: 48, right: 180, bottom: 48, left: 72 };
  const allX = groups.flatMap((g) => g.curve.grid);
  const allY = groups.flatMap((g) => g.curve.mean);
  const xMin = Math.min(...allX);
  const xMax = Math.max(...allX);
  const yMin = Math.min(...allY);
  const yMax = Math.max(...allY);
  const pad = (yMax - yMin || Math.abs(yMax) || 1) * 0.05;
  const xs = linearScale(xMin, xMax, margin.left, width - margin.right);
  const ys = logY
    ? logScale(Math.max(yMin, 1e-300), yMax + pad, height - margin.bottom, margin.top)
    : linearScale(yMin - pad, yMax + pad, height - margin.bottom, margin.top);

  const fps = [...new Set(groups.flatMap((g) => g.fingerprints))].sort();
  const interpolated = groups.some((g) => g.curve.interpolated);
  const captionParts = [];
  if (fps.length > 0) captionParts.push(`config ${fps.join(", ")}`);
  if (interpolated) captionParts.push("mismatched grids interpolated onto first trace");
  const svg = new SvgBuilder(width, height);
  drawFrame(
    svg,
    {
      width,
      height,
      margin,
      title: title ?? "Convergence: mean sum-of-minimum vs evaluations",
      xLabel: "evaluations",
      yLabel: logY ? "mean gws (log)" : "mean gws",
      caption: captionParts.join(" | "),
    },
    xs,
    ys,
  );
  groups.forEach((g, i) => {
    const color = PALETTE[i % PALETTE.length];
    const pts = g.curve.grid.map(
      (x, j) => [xs(x), ys(g.curve.mean[j])] as [number, number],
    );
    svg.polyline(pts, `stroke="${color}" stroke-width="1.8"`);
    const ly = margin.top + 16 * i;
    const lx = width - margin.right + 12;
    svg.line(lx, ly - 4, lx + 18, ly - 4, `stroke="${color}" stroke-width="2"`);
    svg.text(lx + 24, ly, `${g.label} (n=${g.curve.nTraces})`, 'font-size="11"');
  });
  return svg.render();
}

export function plotConvergence(spec: ConvergencePlotSpec): string {
  if (spec.groups.length === 0) {
    throw new Error("no trace groups given (use --traces/--label)");
  }
  const groups = spec.groups.map((g) => loadGroup(g.pattern, g.label));
  const svg = renderConvergence(groups, spec.logY, spec.title);
  fs.mkdirSync(path.dirname(path.resolve(spec.out)), { recursive: true });
  fs.writeFileSync(spec.out, svg, "utf-8");
  return spec.out;
}
