/**
 * Summary-bar figure: one bar per experiment summary showing the mean final
 * sum-of-minimum (or wall-clock seconds) with a +-std whisker.
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { expandGlob } from "./glob.js";
import { ExperimentSummary, parseSummary } from "./summary.js";
import { PALETTE, SvgBuilder, drawFrame, fmt, linearScale } from "./svg.js";

export interface BarsPlotSpec {
  patterns: string[];
  labels: Array<string | undefined>;
  out: string;
  metric: "gws" | "time";
  title?: string;
}

export function loadSummaries(spec: BarsPlotSpec): ExperimentSummary[] {
  const out: ExperimentSummary[] = [];
  spec.patterns.forEach((pattern, i) => {
    const files = expandGlob(pattern);
    if (files.length === 0) {
      throw new Error(`no summary files matched "${pattern}"`);
    }
    for (const f of files) {
      out.push(parseSummary(fs.readFileSync(f, "utf-8"), f, spec.labels[i]));
    }
  });
  return out;
}

export function renderBars(
  summaries: ExperimentSummary[],
  metric: "gws" | "time",
  title?: string,
): string {
  if (summaries.length === 0) {
    throw new Error("no summaries to plot");
  }
  const values = summaries.map((s) => {
    if (metric === "time") {
      if (s.wallClockSeconds === null) {
        throw new Error(`${s.file}: summary has no wall_clock_seconds field`);
      }
      return { center: s.wallClockSeconds, spread: 0 };
    }
    return { center: s.mean, spread: s.std };
  });

  const width = 760;
  const height = 440;
  const margin = { top: 48, right: 40, bottom: 96, left: 72 };
  const lo = Math.min(0, ...values.map((v) => v.center - v.spread));
  const hi = Math.max(...values.map((v) => v.center + v.spread));
  const pad = (hi - lo || Math.abs(hi) || 1) * 0.08;
  const ys = linearScale(lo, hi + pad, height - margin.bottom, margin.top);
  const x0 = margin.left;
  const x1 = width - margin.right;
  const slot = (x1 - x0) / summaries.length;
  const barW = Math.min(64, slot * 0.6);

  const svg = new SvgBuilder(width, height);
  const fps = [...new Set(summaries.map((s) => s.fingerprint))].sort();
  const xsDummy = linearScale(0, 1, x0, x1);
  xsDummy.ticks = () => [];
  drawFrame(
    svg,
    {
      width,
      height,
      margin,
      title:
        title ??
        (metric === "time"
          ? "Wall-clock per experiment"
          : "Final sum-of-minimum per experiment (mean +- std)"),
      xLabel: "",
      yLabel: metric === "time" ? "seconds" : "mean final gws",
      caption: `config ${fps.join(", ")}`,
    },
    xsDummy,
    ys,
  );
  const zeroY = ys(Math.max(lo, 0));
  summaries.forEach((s, i) => {
    const cx = x0 + slot * (i + 0.5);
    const v = values[i];
    const top = ys(Math.max(v.center, 0));
    const barH = Math.abs(zeroY - ys(v.center));
    svg.rect(cx - barW / 2, Math.min(top, zeroY), barW, barH,
      `fill="${PALETTE[i % PALETTE.length]}" fill-opacity="0.85"`);
    if (v.spread > 0) {
      const yLo = ys(v.center - v.spread);
      const yHi = ys(v.center + v.spread);
      svg.line(cx, yLo, cx, yHi, 'stroke="black" stroke-width="1.2"');
      svg.line(cx - 6, yLo, cx + 6, yLo, 'stroke="black" stroke-width="1.2"');
      svg.line(cx - 6, yHi, cx + 6, yHi, 'stroke="black" stroke-width="1.2"');
    }
    svg.text(cx, ys(v.center) - 6, fmt(v.center), 'text-anchor="middle" font-size="10"');
    svg.raw(
      `<text x="${cx}" y="${height - margin.bottom + 14}" text-anchor="end" ` +
        `font-size="10" transform="rotate(-30 ${cx} ${height - margin.bottom + 14})">` +
        `${escapeXml(s.label)}</text>`,
    );
  });
  return svg.render();
}

function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function plotSummaryBars(spec: BarsPlotSpec): string {
  const summaries = loadSummaries(spec);
  const svg = renderBars(summaries, spec.metric, spec.title);
  fs.mkdirSync(path.dirname(path.resolve(spec.out)), { recursive: true });
  fs.writeFileSync(spec.out, svg, "utf-8");
  return spec.out;
}
