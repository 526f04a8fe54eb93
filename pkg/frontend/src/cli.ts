#!/usr/bin/env node
/**
 * f4m-plots: offline figures from f4m harness outputs.
 *
 *   f4m-plots convergence --traces <glob> --label <name> [--traces ... --label ...]
 *                         --out <path.svg> [--logy] [--title <text>]
 *   f4m-plots bars        --summaries <glob> [--label <name>] [--summaries ...]
 *                         --out <path.svg> [--metric gws|time] [--title <text>]
 *
 * Exits nonzero (with a message naming the offending input) when a glob
 * matches nothing or a file is malformed.  Figures are deterministic:
 * identical inputs produce byte-identical SVG.
 */

import { plotSummaryBars } from "./bars.js";
import { plotConvergence } from "./convergence.js";

interface Parsed {
  command: string;
  pairs: Array<{ pattern: string; label?: string }>;
  out?: string;
  logY: boolean;
  metric: "gws" | "time";
  title?: string;
}

export function parseArgs(argv: string[]): Parsed {
  if (argv.length === 0) {
    throw new Error("usage: f4m-plots <convergence|bars> ...");
  }
  const [command, ...rest] = argv;
  if (command !== "convergence" && command !== "bars") {
    throw new Error(`unknown command "${command}" (expected convergence or bars)`);
  }
  const parsed: Parsed = { command, pairs: [], logY: false, metric: "gws" };
  const patternFlag = command === "convergence" ? "--traces" : "--summaries";
  let i = 0;
  const next = (flag: string): string => {
    i += 1;
    if (i >= rest.length) throw new Error(`${flag} needs a value`);
    return rest[i];
  };
  while (i < rest.length) {
    const arg = rest[i];
    switch (arg) {
      case patternFlag:
        parsed.pairs.push({ pattern: next(arg) });
        break;
      case "--label": {
        const label = next(arg);
        const last = parsed.pairs[parsed.pairs.length - 1];
        if (!last || last.label !== undefined) {
          throw new Error(`--label must follow a ${patternFlag} flag`);
        }
        last.label = label;
        break;
      }
      case "--out":
        parsed.out = next(arg);
        break;
      case "--logy":
        parsed.logY = true;
        break;
      case "--metric": {
        const m = next(arg);
        if (m !== "gws" && m !== "time") throw new Error("--metric must be gws or time");
        parsed.metric = m;
        break;
      }
      case "--title":
        parsed.title = next(arg);
        break;
      default:
        throw new Error(`unknown flag "${arg}"`);
    }
    i += 1;
  }
  if (parsed.pairs.length === 0) {
    throw new Error(`at least one ${patternFlag} is required`);
  }
  if (!parsed.out) {
    throw new Error("--out is required");
  }
  return parsed;
}

export function run(argv: string[]): number {
  let parsed: Parsed;
  try {
    parsed = parseArgs(argv);
    if (parsed.command === "convergence") {
      const out = plotConvergence({
        groups: parsed.pairs.map((p, idx) => ({
          pattern: p.pattern,
          label: p.label ?? `group ${idx + 1}`,
        })),
        out: parsed.out!,
        logY: parsed.logY,
        title: parsed.title,
      });
      console.log(`wrote ${out}`);
    } else {
      const out = plotSummaryBars({
        patterns: parsed.pairs.map((p) => p.pattern),
        labels: parsed.pairs.map((p) => p.label),
        out: parsed.out!,
        metric: parsed.metric,
        title: parsed.title,
      });
      console.log(`wrote ${out}`);
    }
    return 0;
  } catch (e) {
    console.error(`error: ${(e as Error).message}`);
    return 2;
  }
}

import { fileURLToPath } from "node:url";

if (process.argv[1] && fileURLToPath(import.meta.url) === process.argv[1]) {
  process.exit(run(process.argv.slice(2)));
}
