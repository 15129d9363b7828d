"""
Warping degrees and label sequences
===================================

Parse Gauss codes, measure how "unknotted" each starting point is, and
read off the per-edge label sequences that the rest of the package is
built on.
"""

from warpmat import (
    crossing_change,
    format_gauss_code,
    parse_gauss_code,
    signed_labels,
    warping_degree,
    warping_labels,
)

# A Gauss code lists the crossings in traversal order: O/U for passing
# over or under, then the crossing id, then the sign of the crossing.
trefoil = parse_gauss_code("O1+U2+O3+U1+O2+U3+")
print("diagram:", format_gauss_code(trefoil))
print("crossings:", trefoil.crossing_count)

# The warping degree at a base edge counts the crossings that the walk
# starting there meets as an undercrossing first.  Small degree means
# the diagram is close to a descending (unknotted) picture.
for base in range(2 * trefoil.crossing_count):
    print(f"  warping degree from edge {base}: {warping_degree(trefoil, base)}")

# All of those numbers at once form the warping label sequence; adjacent
# entries always differ by exactly 1, also across the wrap-around.
print("label sequence:", warping_labels(trefoil).values)

# Changing every crossing complements the degrees: d + d* = c on every edge.
star = trefoil
for crossing in range(1, trefoil.crossing_count + 1):
    star = crossing_change(star, crossing)
print("all crossings changed:", format_gauss_code(star))
print("complementary labels: ", warping_labels(star).values)

# Signed diagrams get a decorated sequence: the entry just after an
# overpass of a negative crossing carries a bar (rendered as a trailing -).
mixed = parse_gauss_code("U1+U2+O2+O3-O1+U3-")
decorated = signed_labels(mixed)
print("signed sequence of", format_gauss_code(mixed))
print("  ", " ".join(f"{v}-" if bar else str(v) for v, bar in decorated.cells()))
