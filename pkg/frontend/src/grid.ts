/** DOM rendering of the puzzle grid; all state stays in state.ts. */

import { columnCounters, violationCellSet } from "./rules.js";
import type { UiState } from "./state.js";

export interface Selection {
  row: number;
  col: number;
}

export interface GridCallbacks {
  onSelect(row: number, col: number): void;
}

function cellKey(row: number, col: number): string {
  return `${row},${col}`;
}

/** Cells implicated by the last server verdict, keyed by rule. */
function serverViolationCells(state: UiState): Map<string, Set<string>> {
  const byRule = new Map<string, Set<string>>();
  for (const violation of state.serverViolations) {
    let cells = byRule.get(violation.rule);
    if (!cells) {
      cells = new Set();
      byRule.set(violation.rule, cells);
    }
    for (const [row, col] of violation.cells) {
      cells.add(cellKey(row, col));
    }
  }
  return byRule;
}

export function renderGrid(
  container: HTMLElement,
  state: UiState,
  selected: Selection | null,
  callbacks: GridCallbacks,
): void {
  const localBad = violationCellSet(state.localViolations);
  const serverBad = serverViolationCells(state);
  const counters = columnCounters(state.grid, state.c);

  container.replaceChildren();
  container.style.setProperty("--columns", String(state.columnCount));

  state.grid.forEach((row, i) => {
    row.forEach((cell, j) => {
      const button = document.createElement("button");
      button.type = "button";
      button.className = "cell";
      button.dataset.row = String(i);
      button.dataset.col = String(j);
      button.textContent = cell == null ? "" : String(cell);
      if (state.clueMask[i]?.[j]) button.classList.add("clue");
      if (state.hinted[i]?.[j]) button.classList.add("hinted");
      if (selected && selected.row === i && selected.col === j) {
        button.classList.add("selected");
      }
      if (localBad.has(cellKey(i, j))) button.classList.add("bad-local");
      for (const [rule, cells] of serverBad) {
        if (cells.has(cellKey(i, j))) button.classList.add(`bad-${rule}`);
      }
      button.addEventListener("click", () => callbacks.onSelect(i, j));
      container.append(button);
    });
  });

  // one counter stack per column: how often each value appears vs quota
  counters.forEach((column) => {
    const footer = document.createElement("div");
    footer.className = "counters";
    for (const { value, have, quota } of column) {
      const line = document.createElement("span");
      line.textContent = `${value}:${have}/${quota}`;
      if (have > quota) line.classList.add("over");
      else if (have === quota) line.classList.add("met");
      footer.append(line);
    }
    container.append(footer);
  });
}
