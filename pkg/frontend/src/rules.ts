/** Client-side rule checks, mirroring the server's semantics exactly.
 *
 * Only rule (i) is duplicated in full (for instant feedback on every
 * keystroke); rule (ii) is summarised as per-column counters.  The
 * server stays the authority for the complete verdict.
 */

import type { Cell } from "./api.js";

export interface StepViolation {
  /** The two adjacent offenders, in (j, j+1 mod 2c) order like the server. */
  cells: [[number, number], [number, number]];
  values: [number, number];
}

/**
 * Rule (i) on the filled cells: cyclically adjacent entries of a row
 * must differ by exactly 1.  Iterates ordered pairs (j, j+1 mod 2c),
 * exactly as the service does, so the reported pairs match its
 * verdicts one for one (including the doubled report when 2c = 2).
 */
export function stepViolations(cells: Cell[][], columnCount: number): StepViolation[] {
  const found: StepViolation[] = [];
  cells.forEach((row, i) => {
    for (let j = 0; j < columnCount; j++) {
      const a = row[j];
      const b = row[(j + 1) % columnCount];
      if (a != null && b != null && Math.abs(a - b) !== 1) {
        found.push({
          cells: [
            [i, j],
            [i, (j + 1) % columnCount],
          ],
          values: [a, b],
        });
      }
    }
  });
  return found;
}

/** Binomial coefficient C(n, k) in exact integer arithmetic. */
export function comb(n: number, k: number): number {
  if (k < 0 || k > n) return 0;
  let result = 1;
  for (let i = 0; i < Math.min(k, n - k); i++) {
    result = (result * (n - i)) / (i + 1);
  }
  return Math.round(result);
}

export interface ColumnCounter {
  value: number;
  have: number;
  quota: number;
}

/**
 * Rule (ii) as progress counters: for each column, how often each value
 * 0..c appears versus its quota C(c, value).  `have > quota` is a
 * violation; `have === quota` means the value is fully placed.
 */
export function columnCounters(cells: Cell[][], c: number): ColumnCounter[][] {
  const columnCount = 2 * c;
  const counters: ColumnCounter[][] = [];
  for (let j = 0; j < columnCount; j++) {
    const column: ColumnCounter[] = [];
    for (let value = 0; value <= c; value++) {
      let have = 0;
      for (const row of cells) {
        if (row[j] === value) have++;
      }
      column.push({ value, have, quota: comb(c, value) });
    }
    counters.push(column);
  }
  return counters;
}

/** Cells implicated by the local step check, for highlighting. */
export function violationCellSet(violations: StepViolation[]): Set<string> {
  const keys = new Set<string>();
  for (const violation of violations) {
    for (const [row, col] of violation.cells) {
      keys.add(`${row},${col}`);
    }
  }
  return keys;
}
