/** Pure game-state transitions; no DOM, no network. */

import type {
  HintResponse,
  NewPuzzleResponse,
  ValidateResponse,
  ViolationPayload,
  Cell,
} from "./api.js";
import { stepViolations, type StepViolation } from "./rules.js";

export type Status = "playing" | "solved";

export interface UiState {
  sessionId: string;
  c: number;
  rowCount: number;
  columnCount: number;
  /** Working grid, row-major; clue cells hold their fixed digits. */
  grid: Cell[][];
  /** True where the cell is a locked clue. */
  clueMask: boolean[][];
  /** True where the cell was filled through a hint. */
  hinted: boolean[][];
  /** Instant local rule-(i) verdicts for the current grid. */
  localViolations: StepViolation[];
  /** Overlay from the last validate response, in server order. */
  serverViolations: ViolationPayload[];
  status: Status;
}

function cloneGrid(grid: Cell[][]): Cell[][] {
  return grid.map((row) => [...row]);
}

export function newGame(response: NewPuzzleResponse): UiState {
  const grid = cloneGrid(response.grid.cells);
  return {
    sessionId: response.session_id,
    c: response.c,
    rowCount: grid.length,
    columnCount: 2 * response.c,
    grid,
    clueMask: grid.map((row) => row.map((cell) => cell != null)),
    hinted: grid.map((row) => row.map(() => false)),
    localViolations: stepViolations(grid, 2 * response.c),
    serverViolations: [],
    status: "playing",
  };
}

export function isEditable(state: UiState, row: number, col: number): boolean {
  return (
    state.status === "playing" &&
    row >= 0 &&
    row < state.rowCount &&
    col >= 0 &&
    col < state.columnCount &&
    !state.clueMask[row]?.[col]
  );
}

/**
 * Place a digit (or null to erase).  Clue cells and out-of-range digits
 * are rejected by returning the state unchanged; the local rule-(i)
 * overlay is recomputed immediately.
 */
export function enterDigit(
  state: UiState,
  row: number,
  col: number,
  digit: Cell,
): UiState {
  if (!isEditable(state, row, col)) return state;
  if (digit != null && (!Number.isInteger(digit) || digit < 0 || digit > state.c)) {
    return state;
  }
  if (state.grid[row]?.[col] === digit) return state;
  const grid = cloneGrid(state.grid);
  grid[row]![col] = digit;
  const hinted = state.hinted.map((r) => [...r]);
  hinted[row]![col] = false;
  return {
    ...state,
    grid,
    hinted,
    localViolations: stepViolations(grid, state.columnCount),
  };
}

/** Fold in a hint: the cell is filled and marked as hinted. */
export function applyHint(state: UiState, hint: HintResponse): UiState {
  const next = enterDigit(state, hint.row, hint.col, hint.digit);
  if (next === state) return state;
  const hinted = next.hinted.map((r) => [...r]);
  hinted[hint.row]![hint.col] = true;
  return { ...next, hinted };
}

/** Fold in the server's verdict for the grid it was asked about. */
export function applyValidate(state: UiState, response: ValidateResponse): UiState {
  return {
    ...state,
    serverViolations: response.violations,
    status: response.solved ? "solved" : "playing",
  };
}

export function isComplete(state: UiState): boolean {
  return state.grid.every((row) => row.every((cell) => cell != null));
}

export function filledCount(state: UiState): number {
  let count = 0;
  for (const row of state.grid) {
    for (const cell of row) if (cell != null) count++;
  }
  return count;
}
