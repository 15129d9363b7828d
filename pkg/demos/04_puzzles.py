"""
Warping matrices as pencil puzzles
==================================

Partially filled matrices make sudoku-like puzzles: complete the grid so
the warping laws hold.  This demo plays the bundled trefoil puzzle, digs
a fresh one, and counts all essentially different solved grids.
"""

from warpmat import (
    PRESET_CODES,
    enumerate_matrices,
    generate,
    grid_to_text,
    load_fixture_grid,
    matrix_to_text,
    parse_gauss_code,
    solve,
    validate,
)

# The bundled trefoil puzzle: 15 clues in an 8x6 grid, dots are blanks.
grid = load_fixture_grid("trefoil")
print("clue grid:")
print(grid_to_text(grid))

# Checking a partial grid reports violations of the chosen rules; the
# clues themselves are consistent.
print("violations in the clues:", validate(grid, ("i", "ii")))

# Solving under rules (i) and (ii) completes the grid; this puzzle has
# exactly one completion.
solutions = solve(grid, ("i", "ii"), limit=2)
print(f"{len(solutions)} completion(s):")
print(grid_to_text(solutions[0]))

# Fresh puzzles are dug from any diagram's full matrix, removing cells
# as long as the completion stays unique.
twist = parse_gauss_code(PRESET_CODES["figure8"])
puzzle = generate(twist, rules=("i", "ii"), seed=42, target_clues=30)
print(f"generated figure-eight puzzle with {puzzle.grid.filled_count} clues:")
print(grid_to_text(puzzle.grid))

# For small sizes the rules pin the matrix down almost completely: up to
# row swaps, column rotations and reflection there are 1, 1 and 3 solved
# grids for c = 1, 2, 3.
for c in (1, 2, 3):
    classes = enumerate_matrices(c)
    print(f"c={c}: {len(classes)} essentially different solved grids")
print("the three c=3 grids:")
for matrix in enumerate_matrices(3):
    print(matrix_to_text(matrix))
