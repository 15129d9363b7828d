"""Warping matrices of oriented knot diagrams and the puzzle built on them."""

from .diagrams import (
    GaussCodeError,
    KnotProjection,
    LabeledSequence,
    OrientedKnotDiagram,
    Visit,
    apply_assignment,
    canonical_key,
    crossing_change,
    diagram_from_json,
    diagram_to_json,
    format_gauss_code,
    parse_gauss_code,
    projection_key,
    random_diagram,
    reference_diagram,
    relabel_first_appearance,
    rotated,
    signed_labels,
    underlying_projection,
    warping_degree,
    warping_labels,
)
from .matrices import (
    MatrixError,
    MatrixKind,
    ReconstructedDiagram,
    RestoredMatrix,
    RuleReport,
    RuleVerdict,
    WarpingMatrix,
    build_diagram_matrix,
    build_projection_matrix,
    build_signed_matrix,
    canonical_form,
    difference_transform,
    equivalent,
    matrix_from_json,
    matrix_from_text,
    matrix_to_json,
    matrix_to_text,
    pair_columns,
    reconstruct_diagram,
    reconstruct_projection,
    restore_missing_row,
    verify_rules,
)
from .puzzle import (
    GeneratedPuzzle,
    GridError,
    PRESET_CODES,
    PuzzleGrid,
    Violation,
    candidate_digits,
    enumerate_matrices,
    fixture_solution,
    full_grid_from_matrix,
    generate,
    grid_from_json,
    grid_from_rows,
    grid_from_text,
    grid_to_json,
    grid_to_text,
    load_fixture_grid,
    matrix_from_grid,
    most_constrained_empty,
    solve,
    validate,
)

__version__ = "0.1.0"
