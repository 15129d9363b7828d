import { describe, expect, it } from "vitest";

import {
  applyHint,
  applyValidate,
  enterDigit,
  filledCount,
  isComplete,
  isEditable,
  newGame,
  type UiState,
} from "../src/state.js";
import {
  EXPECTED_TREFOIL_CLUES,
  TREFOIL_NEW,
  TREFOIL_SOLUTION,
  VERDICT_AFTER_BAD_DIGIT,
  VERDICT_SOLVED,
} from "./golden.js";

function freshGame(): UiState {
  return newGame(TREFOIL_NEW);
}

describe("newGame", () => {
  it("renders the published trefoil clue grid exactly", () => {
    const state = freshGame();
    expect(state.grid).toEqual(EXPECTED_TREFOIL_CLUES);
    expect(state.rowCount).toBe(8);
    expect(state.columnCount).toBe(6);
    expect(filledCount(state)).toBe(15);
    expect(state.status).toBe("playing");
    expect(state.localViolations).toEqual([]);
    expect(state.serverViolations).toEqual([]);
  });

  it("locks exactly the clue cells", () => {
    const state = freshGame();
    for (let row = 0; row < state.rowCount; row++) {
      for (let col = 0; col < state.columnCount; col++) {
        expect(state.clueMask[row]![col]).toBe(
          EXPECTED_TREFOIL_CLUES[row]![col] != null,
        );
      }
    }
  });
});

describe("enterDigit", () => {
  it("accepts a legal digit in an empty cell", () => {
    const state = enterDigit(freshGame(), 0, 3, 2);
    expect(state.grid[0]![3]).toBe(2);
    expect(state.localViolations).toEqual([]);
  });

  it("flags a rule-(i) break immediately, matching the server's cells", () => {
    const state = enterDigit(freshGame(), 4, 0, 1);
    expect(state.grid[4]![0]).toBe(1);
    expect(state.localViolations.map((v) => v.cells)).toEqual(
      VERDICT_AFTER_BAD_DIGIT.violations.map((v) => v.cells),
    );
  });

  it("clears the flag when the digit is erased", () => {
    let state = enterDigit(freshGame(), 4, 0, 1);
    state = enterDigit(state, 4, 0, null);
    expect(state.grid[4]![0]).toBeNull();
    expect(state.localViolations).toEqual([]);
  });

  it("never edits clue cells", () => {
    const state = freshGame();
    expect(enterDigit(state, 0, 4, 1)).toBe(state);
    expect(isEditable(state, 0, 4)).toBe(false);
    expect(isEditable(state, 0, 3)).toBe(true);
  });

  it("rejects digits outside 0..c and junk positions", () => {
    const state = freshGame();
    expect(enterDigit(state, 0, 3, 4)).toBe(state);
    expect(enterDigit(state, 0, 3, -1)).toBe(state);
    expect(enterDigit(state, 0, 3, 1.5)).toBe(state);
    expect(enterDigit(state, 99, 0, 1)).toBe(state);
  });

  it("is inert once the game is solved", () => {
    const solvedState = applyValidate(freshGame(), VERDICT_SOLVED);
    expect(enterDigit(solvedState, 0, 3, 2)).toBe(solvedState);
  });
});

describe("applyHint", () => {
  it("fills the cell and remembers it was hinted", () => {
    const state = applyHint(freshGame(), { row: 7, col: 0, digit: 2 });
    expect(state.grid[7]![0]).toBe(2);
    expect(state.hinted[7]![0]).toBe(true);
  });

  it("typing over a hinted cell drops the hint mark", () => {
    let state = applyHint(freshGame(), { row: 7, col: 0, digit: 2 });
    state = enterDigit(state, 7, 0, 2 - 1);
    expect(state.hinted[7]![0]).toBe(false);
  });
});

describe("applyValidate and completion", () => {
  it("stores the verdict overlay while playing", () => {
    const state = applyValidate(freshGame(), VERDICT_AFTER_BAD_DIGIT);
    expect(state.serverViolations).toHaveLength(2);
    expect(state.status).toBe("playing");
  });

  it("completing the solution flips the status to solved", () => {
    let state = freshGame();
    for (let row = 0; row < state.rowCount; row++) {
      for (let col = 0; col < state.columnCount; col++) {
        if (!state.clueMask[row]![col]) {
          state = enterDigit(state, row, col, TREFOIL_SOLUTION[row]![col]!);
        }
      }
    }
    expect(isComplete(state)).toBe(true);
    expect(state.localViolations).toEqual([]);
    const solvedState = applyValidate(state, VERDICT_SOLVED);
    expect(solvedState.status).toBe("solved");
    expect(solvedState.serverViolations).toEqual([]);
  });

  it("solution cells never contradict the clues", () => {
    const state = freshGame();
    for (let row = 0; row < state.rowCount; row++) {
      for (let col = 0; col < state.columnCount; col++) {
        const clue = state.grid[row]![col];
        if (clue != null) {
          expect(TREFOIL_SOLUTION[row]![col]).toBe(clue);
        }
      }
    }
  });
});
