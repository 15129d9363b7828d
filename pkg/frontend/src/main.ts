/** Wires the DOM to the pure modules: one page, one session at a time. */

import { ApiError, PuzzleApi } from "./api.js";
import { renderGrid, type Selection } from "./grid.js";
import { debounce, ValidateQueue } from "./scheduler.js";
import {
  applyHint,
  applyValidate,
  enterDigit,
  filledCount,
  isComplete,
  isEditable,
  newGame,
  type UiState,
} from "./state.js";
import type { Cell } from "./api.js";

const VALIDATE_DEBOUNCE_MS = 250;

function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

const presetSelect = element<HTMLSelectElement>("preset");
const codeInput = element<HTMLInputElement>("code");
const newGameButton = element<HTMLButtonElement>("new-game");
const hintButton = element<HTMLButtonElement>("hint");
const statusBanner = element<HTMLElement>("status");
const errorBox = element<HTMLElement>("error");
const violationList = element<HTMLUListElement>("violations");
const gridContainer = element<HTMLElement>("grid");
const helpLine = element<HTMLElement>("help");

// The service runs separately (warpmat serve); allow ?api= to point at it.
const apiBase =
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8765";
const api = new PuzzleApi(apiBase);

let state: UiState | null = null;
let selected: Selection | null = null;

const validateQueue = new ValidateQueue<Cell[][], Awaited<ReturnType<PuzzleApi["validate"]>>>(
  (cells) => {
    if (!state) return Promise.reject(new Error("no active session"));
    return api.validate(state.sessionId, cells);
  },
  (_cells, result) => {
    if (!state) return;
    state = applyValidate(state, result);
    render();
  },
  (error) => showError(error),
);
const requestValidate = debounce<Cell[][]>(
  (cells) => validateQueue.submit(cells),
  VALIDATE_DEBOUNCE_MS,
);

function showError(error: unknown): void {
  errorBox.textContent =
    error instanceof ApiError
      ? `${error.message} (HTTP ${error.status})`
      : String(error);
  errorBox.hidden = false;
}

function clearError(): void {
  errorBox.hidden = true;
  errorBox.textContent = "";
}

function render(): void {
  if (!state) return;
  renderGrid(gridContainer, state, selected, {
    onSelect(row, col) {
      selected = { row, col };
      render();
    },
  });
  const total = state.rowCount * state.columnCount;
  if (state.status === "solved") {
    statusBanner.textContent = "solved!";
    statusBanner.className = "status solved";
  } else {
    statusBanner.textContent = `playing — ${filledCount(state)}/${total} cells`;
    statusBanner.className = "status playing";
  }
  hintButton.disabled = state.status !== "playing" || isComplete(state);
  helpLine.textContent = `digits 0..${state.c}; arrows move, Backspace clears`;
  violationList.replaceChildren(
    ...state.serverViolations.map((violation) => {
      const item = document.createElement("li");
      item.className = `rule-${violation.rule}`;
      item.textContent = `rule ${violation.rule}: ${violation.message}`;
      return item;
    }),
  );
}

function afterEdit(previous: UiState | null): void {
  if (!state || state === previous) return;
  render();
  requestValidate(state.grid);
  // a completed grid should hear its verdict promptly
  if (isComplete(state)) requestValidate.flush();
}

async function startGame(): Promise<void> {
  clearError();
  const knot = codeInput.value.trim() || presetSelect.value;
  newGameButton.disabled = true;
  try {
    const response = await api.newPuzzle({ knot });
    state = newGame(response);
    selected = null;
    requestValidate.cancel();
    render();
  } catch (error) {
    showError(error); // e.g. 400 for an unparsable Gauss code
  } finally {
    newGameButton.disabled = false;
  }
}

async function requestHint(): Promise<void> {
  if (!state) return;
  clearError();
  try {
    const hint = await api.hint(state.sessionId, state.grid);
    const previous = state;
    state = applyHint(state, hint);
    selected = { row: hint.row, col: hint.col };
    afterEdit(previous);
  } catch (error) {
    showError(error); // 409 when the grid is already full
  }
}

function moveSelection(deltaRow: number, deltaCol: number): void {
  if (!state) return;
  const current = selected ?? { row: 0, col: 0 };
  selected = {
    row: (current.row + deltaRow + state.rowCount) % state.rowCount,
    col: (current.col + deltaCol + state.columnCount) % state.columnCount,
  };
  render();
}

document.addEventListener("keydown", (event) => {
  if (!state || event.target instanceof HTMLInputElement) return;
  if (event.key === "ArrowUp") return event.preventDefault(), moveSelection(-1, 0);
  if (event.key === "ArrowDown") return event.preventDefault(), moveSelection(1, 0);
  if (event.key === "ArrowLeft") return event.preventDefault(), moveSelection(0, -1);
  if (event.key === "ArrowRight") return event.preventDefault(), moveSelection(0, 1);
  if (!selected || !isEditable(state, selected.row, selected.col)) return;
  if (/^[0-9]$/.test(event.key)) {
    const digit = Number(event.key);
    if (digit > state.c) return; // values above c rejected at input
    const previous = state;
    state = enterDigit(state, selected.row, selected.col, digit);
    afterEdit(previous);
  } else if (event.key === "Backspace" || event.key === "Delete") {
    const previous = state;
    state = enterDigit(state, selected.row, selected.col, null);
    afterEdit(previous);
  }
});

newGameButton.addEventListener("click", () => void startGame());
hintButton.addEventListener("click", () => void requestHint());
presetSelect.addEventListener("change", () => {
  codeInput.value = "";
});

void startGame();
