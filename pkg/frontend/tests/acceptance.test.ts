/**
 * Secondary acceptance: plot_convergence over the worked-example runs emits
 * an image, and the mean-curve values at shared grid points equal
 * hand-computed means to 1e-9.
 *
 * The runs are produced by the f4m CLI (the harness's external interface);
 * the test is skipped if that executable is not on PATH.
 */

import { execFileSync } from "node:child_process";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { loadGroup, plotConvergence } from "../src/convergence.js";
import { expandGlob } from "../src/glob.js";

function f4mAvailable(): boolean {
  try {
    execFileSync("f4m", ["list-problems"], { stdio: "pipe" });
    return true;
  } catch {
    return false;
  }
}

const HAVE_F4M = f4mAvailable();
let tmp: string;

beforeAll(() => {
  tmp = fs.mkdtempSync(path.join(os.tmpdir(), "f4m-accept-"));
});

afterAll(() => {
  fs.rmSync(tmp, { recursive: true, force: true });
});

describe.skipIf(!HAVE_F4M)("worked-example convergence figure", () => {
  it("emits an image whose mean curve equals hand-computed means to 1e-9", () => {
    const out = path.join(tmp, "runs");
    for (let seed = 0; seed < 10; seed++) {
      execFileSync(
        "f4m",
        [
          "run",
          "--problem", "f4m-dtlz2", "--q", "2", "--m", "10",
          "--weights", "equispaced-2d",
          "--k", "3", "--evals", "20000", "--init-size", "600",
          "--seed", String(seed), "--out", out,
        ],
        { stdio: "pipe" },
      );
    }
    const pattern = path.join(out, "*", "seed_*", "trace.csv");
    const files = expandGlob(pattern);
    expect(files.length).toBe(10);

    // hand-computed mean: independent CSV re-parse and per-point average
    const tables = files.map((f) =>
      fs
        .readFileSync(f, "utf-8")
        .trim()
        .split("\n")
        .slice(1)
        .map((l) => l.split(",").map(Number)),
    );
    const nPoints = tables[0].length;
    for (const t of tables) expect(t.length).toBe(nPoints);
    const handGrid = tables[0].map((r) => r[0]);
    const handMean = tables[0].map((_, i) => {
      let s = 0;
      for (const t of tables) {
        expect(t[i][0]).toBe(handGrid[i]); // shared grid
        s += t[i][1];
      }
      return s / tables.length;
    });

    const group = loadGroup(pattern, "som-emoa");
    expect(group.curve.grid).toEqual(handGrid);
    group.curve.mean.forEach((v, i) => {
      expect(Math.abs(v - handMean[i])).toBeLessThan(1e-9);
    });

    const fig = path.join(tmp, "worked-example.svg");
    const written = plotConvergence({
      groups: [{ pattern, label: "som-emoa" }],
      out: fig,
      logY: false,
    });
    expect(written).toBe(fig);
    const svg = fs.readFileSync(fig, "utf-8");
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain("<polyline");
    expect(svg).toContain("som-emoa (n=10)");
    console.log(
      `[PASS] secondary: convergence figure over 10 worked-example runs; ` +
        `${nPoints} grid points, mean matches hand computation to 1e-9`,
    );
  });
});
