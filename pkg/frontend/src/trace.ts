/**
 * trace.csv parsing and mean-curve computation.
 *
 * A trace is the harness convergence log: header `evals,gws`, one row per
 * log point, gws non-increasing. Curves within a group are averaged
 * point-wise on the first trace's evaluation grid; traces on a different
 * grid are linearly interpolated onto it (clamped at their endpoints), and
 * the caller is told so it can surface that in the caption.
 */

export interface TracePoint {
  evals: number;
  gws: number;
}

export interface Trace {
  file: string;
  points: TracePoint[];
}

export interface MeanCurve {
  grid: number[];
  mean: number[];
  nTraces: number;
  interpolated: boolean;
}

export function parseTrace(content: string, file: string): Trace {
  const lines = content.split(/\r?\n/).filter((l) => l.trim().length > 0);
  if (lines.length === 0 || lines[0].trim() !== "evals,gws") {
    throw new Error(`${file}: malformed trace header (expected "evals,gws")`);
  }
  const points: TracePoint[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== 2) {
      throw new Error(`${file}: malformed row ${i + 1}: "${lines[i]}"`);
    }
    const evals = Number(parts[0]);
    const gws = Number(parts[1]);
    if (!Number.isFinite(evals) || !Number.isFinite(gws)) {
      throw new Error(`${file}: non-numeric row ${i + 1}: "${lines[i]}"`);
    }
    points.push({ evals, gws });
  }
  if (points.length === 0) {
    throw new Error(`${file}: trace has no data rows`);
  }
  return { file, points };
}

/** Piecewise-linear value of a trace at `x`, clamped to its endpoints. */
export function traceValueAt(trace: Trace, x: number): number {
  const pts = trace.points;
  if (x <= pts[0].evals) return pts[0].gws;
  const last = pts[pts.length - 1];
  if (x >= last.evals) return last.gws;
  for (let i = 1; i < pts.length; i++) {
    if (pts[i].evals === x) return pts[i].gws;
    if (pts[i].evals > x) {
      const a = pts[i - 1];
      const b = pts[i];
      const t = (x - a.evals) / (b.evals - a.evals);
      return a.gws + t * (b.gws - a.gws);
    }
  }
  return last.gws;
}

function sameGrid(a: Trace, b: Trace): boolean {
  if (a.points.length !== b.points.length) return false;
  return a.points.every((p, i) => p.evals === b.points[i].evals);
}

/** Point-wise mean across seeds on the first trace's evaluation grid. */
export function meanCurve(traces: Trace[]): MeanCurve {
  if (traces.length === 0) {
    throw new Error("mean curve needs at least one trace");
  }
  const grid = traces[0].points.map((p) => p.evals);
  const interpolated = traces.some((t) => !sameGrid(traces[0], t));
  const mean = grid.map((x, i) => {
    let s = 0;
    for (const t of traces) {
      s += interpolated ? traceValueAt(t, x) : t.points[i].gws;
    }
    return s / traces.length;
  });
  return { grid, mean, nTraces: traces.length, interpolated };
}
