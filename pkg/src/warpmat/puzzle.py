"""The warping-matrix grid puzzle: validation, solving, generation.

A puzzle is a ``2**c x 2c`` grid to be filled with digits ``0..c`` so
that the finished grid satisfies a chosen subset of the warping laws
(rule i always; optionally ii, iii, iv).  Validation of partial grids
is deliberately conservative: only violations decidable from the
filled cells are reported, so feedback never flip-flops as cells are
added.  Rules iii and iv constrain the grid as a whole and are only
judged on full grids.
"""

from __future__ import annotations

import functools
import importlib.resources
import random
from collections import Counter
from dataclasses import dataclass

from . import rules as laws
from .diagrams import OrientedKnotDiagram
from .matrices import (
    MatrixKind,
    WarpingMatrix,
    build_projection_matrix,
    canonical_form,
)
from .diagrams import LabeledSequence


class GridError(ValueError):
    """Malformed grid data."""


@dataclass(frozen=True)
class PuzzleGrid:
    """A partially filled grid; ``None`` marks an empty cell."""

    c: int
    cells: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        if self.c < 1:
            raise GridError("need at least one crossing")
        if len(self.cells) != 2**self.c:
            raise GridError(f"expected {2**self.c} rows, got {len(self.cells)}")
        for i, row in enumerate(self.cells):
            if len(row) != 2 * self.c:
                raise GridError(f"row {i} has {len(row)} cells, expected {2 * self.c}")
            for j, v in enumerate(row):
                if v is not None and not 0 <= v <= self.c:
                    raise GridError(f"cell ({i},{j}) holds {v!r}, digits are 0..{self.c}")

    @property
    def row_count(self) -> int:
        return len(self.cells)

    @property
    def column_count(self) -> int:
        return 2 * self.c

    @property
    def filled_count(self) -> int:
        return sum(v is not None for row in self.cells for v in row)

    @property
    def is_full(self) -> bool:
        return all(v is not None for row in self.cells for v in row)

    def empty_cells(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i, row in enumerate(self.cells)
            for j, v in enumerate(row)
            if v is None
        )

    def with_cell(self, row: int, col: int, value: int | None) -> "PuzzleGrid":
        if not (0 <= row < self.row_count and 0 <= col < self.column_count):
            raise GridError(f"cell ({row},{col}) outside a {self.row_count}x{self.column_count} grid")
        cells = [list(r) for r in self.cells]
        cells[row][col] = value
        return PuzzleGrid(self.c, tuple(tuple(r) for r in cells))


def grid_from_rows(c: int, rows) -> PuzzleGrid:
    return PuzzleGrid(c, tuple(tuple(row) for row in rows))


def full_grid_from_matrix(matrix: WarpingMatrix) -> PuzzleGrid:
    return grid_from_rows(matrix.c, matrix.values_grid())


def matrix_from_grid(grid: PuzzleGrid) -> WarpingMatrix:
    """A full grid read as an unsigned matrix (for rule checks and canon)."""
    if not grid.is_full:
        raise GridError("grid is not full")
    rows = tuple(LabeledSequence.unsigned(row) for row in grid.cells)
    return WarpingMatrix(MatrixKind.PROJECTION, grid.c, rows)


@dataclass(frozen=True)
class Violation:
    """One detectable rule violation, with enough location data to recheck."""

    rule: str
    message: str
    cells: tuple[tuple[int, int], ...] = ()
    column: int | None = None


def validate(grid: PuzzleGrid, rules) -> tuple[Violation, ...]:
    """All violations decidable from the filled cells.

    Rule i is judged on cyclically adjacent filled pairs, rule ii on
    per-column counts exceeding their binomial quota; rules iii and iv
    only once the grid is full.  An empty result means "no detectable
    violation", not "solvable".
    """
    rules = laws.normalize_rules(rules)
    n = grid.column_count
    violations = []
    for i, row in enumerate(grid.cells):
        for j in range(n):
            a, b = row[j], row[(j + 1) % n]
            if a is not None and b is not None and abs(a - b) != 1:
                violations.append(
                    Violation(
                        "i",
                        f"adjacent cells hold {a} and {b}, labels must step by 1",
                        ((i, j), (i, (j + 1) % n)),
                    )
                )
    if "ii" in rules:
        for j in range(n):
            counter = Counter(
                row[j] for row in grid.cells if row[j] is not None
            )
            for v, count in sorted(counter.items()):
                quota = laws.column_quota(grid.c, v)
                if count > quota:
                    violations.append(
                        Violation(
                            "ii",
                            f"value {v} appears {count} times in column {j},"
                            f" quota C({grid.c},{v}) = {quota}",
                            tuple(
                                (i, j) for i, row in enumerate(grid.cells) if row[j] == v
                            ),
                            column=j,
                        )
                    )
    if grid.is_full:
        values = grid.cells
        if "iii" in rules and laws.complement_pairing(values, grid.c) is None:
            violations.append(
                Violation(
                    "iii",
                    "rows do not pair up into complements summing to"
                    f" ({grid.c} ... {grid.c})",
                )
            )
        if "iv" in rules and not laws.alternating_rows_ok(values, grid.c):
            violations.append(
                Violation(
                    "iv",
                    "grid must contain exactly two alternating rows with"
                    f" starting values summing to {grid.c}",
                )
            )
    return tuple(violations)


class _SearchState:
    """Mutable grid state for the backtracking solver."""

    def __init__(self, grid: PuzzleGrid, rules: tuple[str, ...]):
        self.c = grid.c
        self.n = grid.column_count
        self.rules = rules
        self.cells = [list(row) for row in grid.cells]
        self.quota = [laws.column_quota(grid.c, v) for v in range(grid.c + 1)]
        self.col_counts = [
            Counter(row[j] for row in self.cells if row[j] is not None)
            for j in range(self.n)
        ]
        self.col_empty = [
            sum(row[j] is None for row in self.cells) for j in range(self.n)
        ]
        self.empties = [
            (i, j)
            for i, row in enumerate(self.cells)
            for j, v in enumerate(row)
            if v is None
        ]

    def candidates(self, i: int, j: int) -> list[int]:
        row = self.cells[i]
        left = row[j - 1] if j else row[self.n - 1]
        right = row[(j + 1) % self.n]
        counts = self.col_counts[j]
        out = []
        for v in range(self.c + 1):
            if left is not None and abs(v - left) != 1:
                continue
            if right is not None and abs(v - right) != 1:
                continue
            if "ii" in self.rules and counts[v] >= self.quota[v]:
                continue
            if "iii" in self.rules:
                # Complement pairs force each column to hold v and c-v
                # equally often; prune when the imbalance cannot be
                # repaired by the remaining empty cells.
                mate = self.c - v
                if mate != v:
                    imbalance = abs(counts[v] + 1 - counts[mate])
                    if imbalance > self.col_empty[j] - 1:
                        continue
            out.append(v)
        return out

    def pick_cell(self) -> tuple[int, int, list[int]] | None:
        """Most-constrained empty cell, or None when the grid is full."""
        best = None
        for i, j in self.empties:
            if self.cells[i][j] is not None:
                continue
            cands = self.candidates(i, j)
            if not cands:
                return i, j, cands
            if best is None or len(cands) < len(best[2]):
                best = (i, j, cands)
                if len(cands) == 1:
                    return best
        return best

    def place(self, i: int, j: int, v: int):
        self.cells[i][j] = v
        self.col_counts[j][v] += 1
        self.col_empty[j] -= 1

    def unplace(self, i: int, j: int, v: int):
        self.cells[i][j] = None
        self.col_counts[j][v] -= 1
        self.col_empty[j] += 1

    def complete_ok(self) -> bool:
        rows = [tuple(row) for row in self.cells]
        if "iii" in self.rules and laws.complement_pairing(rows, self.c) is None:
            return False
        if "iv" in self.rules and not laws.alternating_rows_ok(rows, self.c):
            return False
        return True

    def snapshot(self) -> PuzzleGrid:
        return grid_from_rows(self.c, self.cells)


def solve(grid: PuzzleGrid, rules, limit: int = 2) -> tuple[PuzzleGrid, ...]:
    """Up to ``limit`` completions, in a deterministic search order.

    Backtracking over empty cells, most-constrained cell first, values
    ascending.  An empty result means the clues are unsatisfiable under
    the given rules.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    rules = laws.normalize_rules(rules)
    if validate(grid, rules):
        return ()
    state = _SearchState(grid, rules)
    solutions = []
    trail = []  # (i, j, candidates, index into them)
    descending = True
    while True:
        if descending:
            pick = state.pick_cell()
            if pick is None:
                if state.complete_ok():
                    solutions.append(state.snapshot())
                    if len(solutions) >= limit:
                        break
                descending = False
            elif pick[2]:
                i, j, cands = pick
                state.place(i, j, cands[0])
                trail.append((i, j, cands, 0))
            else:
                descending = False
        else:
            if not trail:
                break
            i, j, cands, at = trail.pop()
            state.unplace(i, j, cands[at])
            if at + 1 < len(cands):
                state.place(i, j, cands[at + 1])
                trail.append((i, j, cands, at + 1))
                descending = True
    return tuple(solutions)


def candidate_digits(grid: PuzzleGrid, rules, row: int, col: int) -> tuple[int, ...]:
    """Digits placeable at one empty cell without a detectable violation."""
    rules = laws.normalize_rules(rules)
    if grid.cells[row][col] is not None:
        raise GridError(f"cell ({row},{col}) is already filled")
    return tuple(_SearchState(grid, rules).candidates(row, col))


def most_constrained_empty(grid: PuzzleGrid, rules) -> tuple[int, int] | None:
    """The empty cell with the fewest candidate digits (row-major ties)."""
    rules = laws.normalize_rules(rules)
    state = _SearchState(grid, rules)
    pick = state.pick_cell()
    return None if pick is None else (pick[0], pick[1])


@dataclass(frozen=True)
class GeneratedPuzzle:
    """A clue grid, the full grid it uniquely completes to, and whether
    the requested clue count was reached."""

    grid: PuzzleGrid
    solution: PuzzleGrid
    reached_target: bool


def generate(
    reference: OrientedKnotDiagram,
    rules=("i", "ii"),
    seed: int = 0,
    target_clues: int = 0,
) -> GeneratedPuzzle:
    """Dig a uniquely solvable puzzle out of the reference's full matrix.

    Cells are blanked in seeded random order, keeping each removal only
    if the puzzle still has exactly one completion, until ``target_clues``
    remain or nothing more can go.  ``reached_target`` is False when the
    target was below what uniqueness allows.
    """
    rules = laws.normalize_rules(rules)
    if reference.crossing_count > 6:
        raise ValueError("generation is limited to c <= 6")
    solution = full_grid_from_matrix(build_projection_matrix(reference))
    grid = solution
    rng = random.Random(seed)
    order = [
        (i, j) for i in range(grid.row_count) for j in range(grid.column_count)
    ]
    rng.shuffle(order)
    for i, j in order:
        if grid.filled_count <= target_clues:
            break
        trial = grid.with_cell(i, j, None)
        if len(solve(trial, rules, limit=2)) == 1:
            grid = trial
    return GeneratedPuzzle(grid, solution, grid.filled_count <= target_clues)


def _all_step_rows(c: int) -> list[tuple[int, ...]]:
    """Every row of length 2c over 0..c satisfying the cyclic step law."""
    n = 2 * c
    out = []
    def extend(prefix):
        if len(prefix) == n:
            if abs(prefix[0] - prefix[-1]) == 1:
                out.append(tuple(prefix))
            return
        for step in (-1, 1):
            v = prefix[-1] + step
            if 0 <= v <= c:
                extend(prefix + [v])
    for start in range(c + 1):
        extend([start])
    return sorted(out)


def enumerate_matrices(
    c: int, rules=("i", "ii", "iii", "iv"), allow_reflection: bool = True
) -> tuple[WarpingMatrix, ...]:
    """All rule-satisfying full grids, as canonical equivalence classes.

    Searches over row multisets rather than cell by cell: the rules are
    row-order-invariant and canonicalization sorts rows anyway, so the
    classes are the same as for the literal empty-grid solve, without
    the factor of (2**c)! row orderings.  Rule ii must be included; it
    is what makes the space finite enough to walk.
    """
    if not 1 <= c <= 3:
        raise ValueError("enumeration is limited to c in 1..3")
    rules = laws.normalize_rules(rules)
    if "ii" not in rules:
        raise ValueError("enumeration requires rule ii to bound the search")
    pool = _all_step_rows(c)
    quota = [laws.column_quota(c, v) for v in range(c + 1)]
    col_counts = [Counter() for _ in range(2 * c)]
    chosen: list[tuple[int, ...]] = []
    found: dict[tuple, WarpingMatrix] = {}

    def fits(row) -> bool:
        return all(col_counts[j][v] < quota[v] for j, v in enumerate(row))

    def search(start: int):
        if len(chosen) == 2**c:
            if "iii" in rules and laws.complement_pairing(chosen, c) is None:
                return
            if "iv" in rules and not laws.alternating_rows_ok(chosen, c):
                return
            matrix = WarpingMatrix(
                MatrixKind.PROJECTION,
                c,
                tuple(LabeledSequence.unsigned(row) for row in chosen),
            )
            canon = canonical_form(matrix, allow_reflection)
            found.setdefault(canon.cells_grid(), canon)
            return
        for idx in range(start, len(pool)):
            row = pool[idx]
            if not fits(row):
                continue
            for j, v in enumerate(row):
                col_counts[j][v] += 1
            chosen.append(row)
            search(idx)
            chosen.pop()
            for j, v in enumerate(row):
                col_counts[j][v] -= 1

    search(0)
    return tuple(found[key] for key in sorted(found))


def grid_to_text(grid: PuzzleGrid) -> str:
    """One line per row, "." for an empty cell, digits otherwise."""
    return "".join(
        " ".join("." if v is None else str(v) for v in row) + "\n"
        for row in grid.cells
    )


def grid_from_text(text: str) -> PuzzleGrid:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        row = []
        for token in line.split():
            if token == ".":
                row.append(None)
            else:
                try:
                    row.append(int(token))
                except ValueError:
                    raise GridError(f"bad grid cell {token!r}") from None
        rows.append(tuple(row))
    if not rows:
        raise GridError("empty grid text")
    widths = {len(row) for row in rows}
    if len(widths) > 1 or widths.pop() != len(rows[0]):
        raise GridError("ragged grid text")
    if len(rows[0]) % 2:
        raise GridError("grids have an even number of columns")
    c = len(rows[0]) // 2
    if len(rows) != 2**c:
        raise GridError(f"{len(rows)} rows do not match 2**{c} for {2 * c} columns")
    return PuzzleGrid(c, tuple(rows))


def grid_to_json(grid: PuzzleGrid) -> dict:
    return {"c": grid.c, "cells": [list(row) for row in grid.cells]}


def grid_from_json(data: dict) -> PuzzleGrid:
    try:
        c = int(data["c"])
        cells = tuple(
            tuple(None if v is None else int(v) for v in row) for row in data["cells"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise GridError(f"bad grid JSON: {exc}") from exc
    return PuzzleGrid(c, cells)


PRESET_CODES = {
    "trefoil": "O1+U2+O3+U1+O2+U3+",
    "figure8": "O1+U2+O3-U4-O2+U1+O4-U3-",
}


def load_fixture_grid(name: str) -> PuzzleGrid:
    """One of the two shipped puzzles ("trefoil" or "figure8")."""
    if name not in PRESET_CODES:
        raise GridError(f"unknown fixture {name!r}, have {sorted(PRESET_CODES)}")
    text = (
        importlib.resources.files("warpmat")
        .joinpath(f"fixtures/{name}_grid.txt")
        .read_text()
    )
    return grid_from_text(text)


@functools.lru_cache(maxsize=None)
def fixture_solution(name: str) -> PuzzleGrid:
    """The first completion of a shipped puzzle under rules {i, ii}."""
    solutions = solve(load_fixture_grid(name), ("i", "ii"), limit=1)
    if not solutions:
        raise GridError(f"fixture {name!r} has no completion")
    return solutions[0]
