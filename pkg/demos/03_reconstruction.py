"""
From matrix back to diagram
===========================

A warping matrix is not just a fingerprint: the projection can be read
back out of it, and a diagram matrix (one row short) determines the
missing row and with it the whole diagram.
"""

from warpmat import (
    build_diagram_matrix,
    build_projection_matrix,
    difference_transform,
    format_gauss_code,
    matrix_to_text,
    pair_columns,
    parse_gauss_code,
    reconstruct_diagram,
    reconstruct_projection,
    restore_missing_row,
)

# Step 1: difference each row cyclically.  Entries become +1 where the
# walk passes over and -1 where it passes under.
mixed = parse_gauss_code("O1+U2+O3-U1+O2+U3-")
projection_matrix = build_projection_matrix(mixed)
ou = difference_transform(projection_matrix)
print("over/under pattern of the first row:", tuple(ou[0]))

# Step 2: columns that cancel pairwise belong to the same crossing, so
# the pairing is the chord diagram and hence the projection.
print("column pairs:", pair_columns(ou))
print("recovered projection word:", reconstruct_projection(projection_matrix).word)

# A diagram matrix omits the diagram's own row.  Column histograms give
# the missing values; bar counts give the missing bars.
diagram_matrix = build_diagram_matrix(mixed)
restored = restore_missing_row(diagram_matrix)
print("restored row:", " ".join(
    f"{v}-" if bar else str(v) for v, bar in restored.row.cells()
))

# Putting both steps together recovers the diagram itself.
result = reconstruct_diagram(diagram_matrix)
print("reconstructed diagram:", format_gauss_code(result.diagram))
print("matches the input:", format_gauss_code(result.diagram) == format_gauss_code(mixed))

# The one honest limitation: with a single crossing there are no barred
# rows left to consult, so the crossing sign stays open.
curl = parse_gauss_code("O1-U1-")
small = reconstruct_diagram(build_diagram_matrix(curl))
print("single-crossing reconstruction:", format_gauss_code(small.diagram))
print("signs left undetermined:", sorted(small.undetermined_signs))
print(matrix_to_text(build_diagram_matrix(curl)))
