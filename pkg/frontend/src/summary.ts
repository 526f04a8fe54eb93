/**
 * summary.json parsing: the harness writes one per experiment with the
 * config echo, per-seed finals, mean/std/min/max and wall-clock seconds.
 */

export interface ExperimentSummary {
  file: string;
  fingerprint: string;
  label: string;
  mean: number;
  std: number;
  min: number;
  max: number;
  wallClockSeconds: number | null;
}

const REQUIRED = ["mean", "std", "min", "max"] as const;

export function parseSummary(content: string, file: string, label?: string): ExperimentSummary {
  let raw: Record<string, unknown>;
  try {
    raw = JSON.parse(content) as Record<string, unknown>;
  } catch (e) {
    throw new Error(`${file}: not valid JSON (${(e as Error).message})`);
  }
  for (const key of REQUIRED) {
    if (typeof raw[key] !== "number") {
      throw new Error(`${file}: missing numeric field "${key}"`);
    }
  }
  const fingerprint = typeof raw.fingerprint === "string" ? raw.fingerprint : "unknown";
  const cfg = (raw.config ?? {}) as Record<string, unknown>;
  const autoLabel =
    [cfg.problem, cfg.m !== undefined ? `m=${cfg.m}` : null, cfg.algorithm]
      .filter((p) => p !== null && p !== undefined)
      .join(" ") || fingerprint;
  return {
    file,
    fingerprint,
    label: label ?? autoLabel,
    mean: raw.mean as number,
    std: raw.std as number,
    min: raw.min as number,
    max: raw.max as number,
    wallClockSeconds:
      typeof raw.wall_clock_seconds === "number" ? raw.wall_clock_seconds : null,
  };
}
