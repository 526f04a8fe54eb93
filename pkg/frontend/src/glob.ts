// Minimal glob: `*` within a path segment, `**` for any directory depth.
// Enough for harness layouts like results/*/seed_*/trace.csv; matches are
// returned sorted for deterministic figure output.

import * as fs from "node:fs";
import * as path from "node:path";

function segmentToRegex(seg: string): RegExp {
  const escaped = seg.replace(/[.+^${}()|[\]\\]/g, "\\$&").replace(/\*/g, "[^/]*");
  return new RegExp(`^${escaped}$`);
}

function isDir(p: string): boolean {
  try {
    return fs.statSync(p).isDirectory();
  } catch {
    return false;
  }
}

function isFile(p: string): boolean {
  try {
    return fs.statSync(p).isFile();
  } catch {
    return false;
  }
}

export function expandGlob(pattern: string): string[] {
  const segments = pattern.split(path.sep).join("/").split("/");
  const absolute = segments[0] === "";
  const startBase = absolute ? "/" : "";
  const startIdx = absolute ? 1 : 0;
  const out: string[] = [];

  const walk = (base: string, idx: number): void => {
    if (idx === segments.length) {
      if (isFile(base)) out.push(base);
      return;
    }
    const seg = segments[idx];
    if (seg === "") {
      walk(base, idx + 1);
      return;
    }
    const dir = base === "" ? "." : base;
    if (seg === "**") {
      walk(base, idx + 1);
      if (isDir(dir)) {
        for (const entry of fs.readdirSync(dir).sort()) {
          const child = base === "" ? entry : path.join(base, entry);
          if (isDir(child)) walk(child, idx);
        }
      }
      return;
    }
    if (!seg.includes("*")) {
      walk(base === "" ? seg : path.join(base, seg), idx + 1);
      return;
    }
    if (!isDir(dir)) return;
    const rx = segmentToRegex(seg);
    for (const entry of fs.readdirSync(dir).sort()) {
      if (rx.test(entry)) {
        walk(base === "" ? entry : path.join(base, entry), idx + 1);
      }
    }
  };

  walk(startBase, startIdx);
  return [...new Set(out)].sort();
}
