"""
Warping matrices and their four laws
====================================

Stack the label sequences of all over/under assignments of a projection
into one matrix, check the structural laws it must obey, and compare
matrices up to the moves that leave them "the same".
"""

import random

from warpmat import (
    WarpingMatrix,
    build_diagram_matrix,
    build_projection_matrix,
    build_signed_matrix,
    canonical_form,
    equivalent,
    matrix_to_text,
    parse_gauss_code,
    random_diagram,
    verify_rules,
)

# Every way of assigning over/under at the 3 crossings of the trefoil
# projection gives one row: 2^3 rows of 2*3 columns.
trefoil = parse_gauss_code("O1+U2+O3+U1+O2+U3+")
matrix = build_projection_matrix(trefoil)
print(f"{matrix.row_count} x {matrix.column_count} warping matrix:")
print(matrix_to_text(matrix))

# The four laws:
#   (i)  neighbouring entries differ by 1, cyclically,
#   (ii) each column holds the value n exactly C(c, n) times,
#   (iii) the rows split into complementary pairs summing to (c c ... c),
#   (iv) exactly two rows alternate, k,k+1,... and l,l-1,... with k+l=c.
for verdict in verify_rules(matrix).verdicts:
    print(f"rule {verdict.rule}: {verdict.status}")

# Row order and start column are presentation choices; equivalent() and
# canonical_form() quotient them away.
rng = random.Random(7)
rows = list(matrix.rows)
rng.shuffle(rows)
shuffled = WarpingMatrix(matrix.kind, matrix.c, tuple(rows))
print("shuffled copy equivalent:", equivalent(matrix, shuffled))
print("canonical form:")
print(matrix_to_text(canonical_form(matrix)))

# Signed variants: bars mark overpasses of negative crossings, and the
# diagram matrix drops the diagram's own row (2^c - 1 rows remain).
mixed = parse_gauss_code("O1+U2+O3-U1+O2+U3-")
print("signed matrix:")
print(matrix_to_text(build_signed_matrix(mixed)))
print("diagram matrix has", build_diagram_matrix(mixed).row_count, "rows")

# The laws hold for every projection, not just these small favourites.
big = random_diagram(6, random.Random(0), evenly_interleaved=True)
print("random 6-crossing projection verifies:", verify_rules(build_projection_matrix(big)).all_pass)
