"""Warping matrices, their combinatorial laws, and their inverses.

A projection with ``c`` crossings has ``2**c`` diagrams; stacking their
label sequences gives a ``2**c x 2c`` matrix.  Row ``i`` of a built
matrix is the sequence of the assignment with mask ``i`` (row order is
immaterial: matrices are compared up to row swaps and cyclic column
shifts).  Deleting the row of one distinguished diagram leaves a
``(2**c - 1) x 2c`` matrix that still determines that diagram; the
reconstruction operations below invert both constructions.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import rules as laws
from .diagrams import (
    KnotProjection,
    LabeledSequence,
    OrientedKnotDiagram,
    Visit,
    apply_assignment,
    signed_labels,
    underlying_projection,
    warping_labels,
)


class MatrixError(ValueError):
    """Matrix data that cannot arise from, or be inverted to, a diagram."""


class MatrixKind(Enum):
    PROJECTION = "projection"
    SIGNED_PROJECTION = "signed-projection"
    DIAGRAM = "diagram"


def expected_row_count(kind: MatrixKind, c: int) -> int:
    return 2**c - 1 if kind is MatrixKind.DIAGRAM else 2**c


@dataclass(frozen=True)
class WarpingMatrix:
    """A stack of label rows with the shape of a warping matrix.

    The constructor checks shape only; whether the content obeys the
    warping laws is the job of :func:`verify_rules`, so that broken
    matrices can be represented and reported on.
    """

    kind: MatrixKind
    c: int
    rows: tuple[LabeledSequence, ...]

    def __post_init__(self):
        if self.c < 1:
            raise MatrixError("need at least one crossing")
        expected = expected_row_count(self.kind, self.c)
        if len(self.rows) != expected:
            raise MatrixError(
                f"a {self.kind.value} matrix with c={self.c} has {expected} rows,"
                f" got {len(self.rows)}"
            )
        for i, row in enumerate(self.rows):
            if len(row) != 2 * self.c:
                raise MatrixError(f"row {i} has length {len(row)}, expected {2 * self.c}")
            if self.kind is MatrixKind.PROJECTION and any(row.bars):
                raise MatrixError("projection matrices are unsigned, bars not allowed")

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def column_count(self) -> int:
        return 2 * self.c

    def values_grid(self) -> tuple[tuple[int, ...], ...]:
        return tuple(row.values for row in self.rows)

    def cells_grid(self) -> tuple[tuple[tuple[int, bool], ...], ...]:
        return tuple(row.cells() for row in self.rows)


def build_projection_matrix(reference: OrientedKnotDiagram) -> WarpingMatrix:
    """All ``2**c`` label sequences over the projection of ``reference``."""
    c = reference.crossing_count
    projection = underlying_projection(reference)
    rows = tuple(
        warping_labels(apply_assignment(projection, reference, mask))
        for mask in range(2**c)
    )
    return WarpingMatrix(MatrixKind.PROJECTION, c, rows)


def build_signed_matrix(reference: OrientedKnotDiagram) -> WarpingMatrix:
    """As :func:`build_projection_matrix` but with signed (barred) rows."""
    c = reference.crossing_count
    projection = underlying_projection(reference)
    rows = tuple(
        signed_labels(apply_assignment(projection, reference, mask))
        for mask in range(2**c)
    )
    half = 2 ** (c - 1)
    for j in range(2 * c):
        bars = sum(row.bars[j] for row in rows)
        if bars not in (0, half):
            raise MatrixError(
                f"column {j} has {bars} bars, expected 0 or {half}: construction bug"
            )
    return WarpingMatrix(MatrixKind.SIGNED_PROJECTION, c, rows)


def build_diagram_matrix(diagram: OrientedKnotDiagram) -> WarpingMatrix:
    """The signed matrix of the projection minus the diagram's own row."""
    full = build_signed_matrix(diagram)
    own = signed_labels(diagram)
    kept = tuple(row for row in full.rows if row != own)
    if len(kept) != full.row_count - 1:
        raise MatrixError("the diagram's own row was not found exactly once")
    return WarpingMatrix(MatrixKind.DIAGRAM, diagram.crossing_count, kept)


@dataclass(frozen=True)
class RuleVerdict:
    rule: str
    status: str  # "pass", "fail" or "skipped"
    witness: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"


@dataclass(frozen=True)
class RuleReport:
    """Per-rule verdicts for one matrix."""

    rule_i: RuleVerdict
    rule_ii: RuleVerdict
    rule_iii: RuleVerdict
    rule_iv: RuleVerdict

    @property
    def verdicts(self) -> tuple[RuleVerdict, ...]:
        return (self.rule_i, self.rule_ii, self.rule_iii, self.rule_iv)

    @property
    def all_pass(self) -> bool:
        return not any(v.failed for v in self.verdicts)


def _check_rule_i(matrix: WarpingMatrix) -> RuleVerdict:
    for i, row in enumerate(matrix.rows):
        offences = laws.step_law_offences(row.values, matrix.c)
        if offences:
            j = offences[0]
            return RuleVerdict(
                "i", "fail", f"row {i} breaks the unit-step law at column {j}"
            )
    return RuleVerdict("i", "pass")


def _check_rule_ii(matrix: WarpingMatrix) -> RuleVerdict:
    values = matrix.values_grid()
    if matrix.kind is not MatrixKind.DIAGRAM:
        offences = laws.histogram_offences(values, matrix.c)
        if offences:
            j, v = offences[0]
            count = sum(row[j] == v for row in values)
            quota = laws.column_quota(matrix.c, v)
            return RuleVerdict(
                "ii",
                "fail",
                f"column {j}: value {v} appears {count} times, expected C({matrix.c},{v}) = {quota}",
            )
        return RuleVerdict("ii", "pass")
    # One row is missing, so each column histogram must sit exactly one
    # entry below the binomial quotas.
    for j, counter in enumerate(laws.column_histogram(values, matrix.c)):
        deficit = 0
        for v in range(matrix.c + 1):
            quota = laws.column_quota(matrix.c, v)
            count = counter.get(v, 0)
            if count > quota:
                return RuleVerdict(
                    "ii",
                    "fail",
                    f"column {j}: value {v} appears {count} times, over the quota {quota}",
                )
            deficit += quota - count
        if deficit != 1:
            return RuleVerdict(
                "ii", "fail", f"column {j}: {deficit} entries missing, expected exactly 1"
            )
    return RuleVerdict("ii", "pass")


def _check_rule_iii(matrix: WarpingMatrix) -> RuleVerdict:
    if matrix.kind is MatrixKind.DIAGRAM:
        return RuleVerdict("iii", "skipped", "not decidable with one row missing")
    if laws.complement_pairing(matrix.values_grid(), matrix.c) is None:
        return RuleVerdict(
            "iii",
            "fail",
            "rows do not admit a unique perfect matching of pairs summing to"
            f" ({matrix.c} ... {matrix.c})",
        )
    return RuleVerdict("iii", "pass")


def _check_rule_iv(matrix: WarpingMatrix) -> RuleVerdict:
    if matrix.kind is MatrixKind.DIAGRAM:
        return RuleVerdict("iv", "skipped", "not decidable with one row missing")
    values = matrix.values_grid()
    if not laws.alternating_rows_ok(values, matrix.c):
        hits = laws.find_alternating_rows(values, matrix.c)
        return RuleVerdict(
            "iv",
            "fail",
            f"expected exactly two alternating rows with starts summing to {matrix.c},"
            f" found rows {hits}",
        )
    return RuleVerdict("iv", "pass")


def verify_rules(matrix: WarpingMatrix) -> RuleReport:
    """Check the four warping laws; iii and iv are skipped for diagram matrices."""
    return RuleReport(
        _check_rule_i(matrix),
        _check_rule_ii(matrix),
        _check_rule_iii(matrix),
        _check_rule_iv(matrix),
    )


def difference_transform(matrix: WarpingMatrix) -> np.ndarray:
    """Cyclic column differences: entry (i, j) is +1 for an overpass at
    visit j in row i's diagram and -1 for an underpass.

    Computed as an exact integer product with the circulant difference
    matrix (-1 on the diagonal, +1 below it and in the top-right
    corner).  Any entry other than +-1 means the input breaks the
    unit-step law.
    """
    values = np.array(matrix.values_grid(), dtype=np.int64)
    n = matrix.column_count
    transform = -np.eye(n, dtype=np.int64) + np.eye(n, k=-1, dtype=np.int64)
    transform[0, n - 1] = 1
    result = values @ transform
    if not np.isin(result, (-1, 1)).all():
        bad = next(zip(*np.nonzero(np.abs(result) != 1)))
        raise MatrixError(
            f"row {bad[0]}, column {bad[1]}: step is not +-1, not a warping matrix"
        )
    return result


def pair_columns(ou: np.ndarray) -> tuple[tuple[int, int], ...]:
    """Pair the columns of an over/under matrix that sum to zero.

    Paired columns are the two visits of one crossing.  Raises when
    columns repeat (over/under data incomplete) or some column has no
    partner.
    """
    n = ou.shape[1]
    columns = [tuple(int(x) for x in ou[:, j]) for j in range(n)]
    if len(set(columns)) < n:
        raise MatrixError("duplicate over/under columns: crossings are not separable")
    index_of = {col: j for j, col in enumerate(columns)}
    pairs = []
    for j, col in enumerate(columns):
        negated = tuple(-x for x in col)
        partner = index_of.get(negated)
        if partner is None:
            raise MatrixError(f"column {j} has no complementary partner column")
        if j < partner:
            pairs.append((j, partner))
    return tuple(pairs)


def reconstruct_projection(matrix: WarpingMatrix) -> KnotProjection:
    """Recover the double-occurrence word a full matrix was built from.

    Crossing ids are assigned in first-appearance order along the
    sequence; the original labels are not recoverable (the matrix never
    contained them).
    """
    if matrix.kind is MatrixKind.DIAGRAM:
        raise MatrixError("diagram matrix: restore the missing row first")
    ou = difference_transform(matrix)
    word = [0] * matrix.column_count
    for crossing, (p, q) in enumerate(pair_columns(ou), start=1):
        word[p] = word[q] = crossing
    return KnotProjection(tuple(word))


@dataclass(frozen=True)
class RestoredMatrix:
    """Result of completing a diagram matrix back to 2**c signed rows.

    ``ambiguous_columns`` is empty except for c=1, where a column with
    no bars leaves the restored cell's bar undecidable by counting (0
    observed bars also completes to 0).
    """

    matrix: WarpingMatrix
    row: LabeledSequence
    ambiguous_columns: frozenset[int]


def restore_missing_row(matrix: WarpingMatrix) -> RestoredMatrix:
    """Rebuild the deleted row of a diagram matrix.

    Per column, the value is the one missing from the binomial
    histogram and the bar is forced by the bar count (a barred column
    of the full matrix carries exactly ``2**(c-1)`` bars).
    """
    if matrix.kind is not MatrixKind.DIAGRAM:
        raise MatrixError("only a diagram matrix is missing a row")
    c = matrix.c
    half = 2 ** (c - 1)
    values = []
    for j in range(2 * c):
        counter = Counter(row.values[j] for row in matrix.rows)
        missing = None
        for v in range(c + 1):
            quota = laws.column_quota(c, v)
            count = counter.pop(v, 0)
            if count == quota:
                continue
            if count != quota - 1 or missing is not None:
                raise MatrixError(f"column {j}: histogram deficit is not a single entry")
            missing = v
        if counter or missing is None:
            raise MatrixError(f"column {j}: histogram deficit is not a single entry")
        values.append(missing)
    bars = []
    ambiguous = []
    for j in range(2 * c):
        count = sum(row.bars[j] for row in matrix.rows)
        if count == half:
            bars.append(False)
        elif count == half - 1:
            # For c=1 this branch is count == 0, indistinguishable from
            # a bar-free column; flag instead of guessing.
            if c == 1:
                bars.append(False)
                ambiguous.append(j)
            else:
                bars.append(True)
        elif count == 0:
            bars.append(False)
        else:
            raise MatrixError(f"column {j}: {count} bars cannot complete to 0 or {half}")
    row = LabeledSequence(tuple(values), tuple(bars))
    if laws.step_law_offences(row.values, c):
        raise MatrixError("restored row breaks the unit-step law: inconsistent input")
    full = WarpingMatrix(MatrixKind.SIGNED_PROJECTION, c, matrix.rows + (row,))
    return RestoredMatrix(full, row, frozenset(ambiguous))


@dataclass(frozen=True)
class ReconstructedDiagram:
    """A diagram recovered from its matrix, with any unresolved signs.

    ``undetermined_signs`` lists crossing ids whose sign could not be
    read off (set to +1 in ``diagram``); nonempty only for c=1.
    """

    diagram: OrientedKnotDiagram
    undetermined_signs: frozenset[int]


def reconstruct_diagram(matrix: WarpingMatrix) -> ReconstructedDiagram:
    """Invert :func:`build_diagram_matrix`.

    The restored row's unit steps give the over/under pattern of the
    deleted diagram (+1 step = overpass), and a crossing is negative
    exactly when the cell after its overpass is barred in that row.
    """
    restored = restore_missing_row(matrix)
    projection = reconstruct_projection(restored.matrix)
    row = restored.row
    n = len(row)
    overs = tuple(row.values[(j + 1) % n] - row.values[j] == 1 for j in range(n))
    visits = tuple(Visit(projection.word[j], overs[j]) for j in range(n))
    signs = []
    undetermined = set()
    for crossing in range(1, matrix.c + 1):
        over_at = next(
            j for j in range(n) if projection.word[j] == crossing and overs[j]
        )
        after = (over_at + 1) % n
        signs.append(-1 if row.bars[after] else 1)
        if after in restored.ambiguous_columns:
            undetermined.add(crossing)
    diagram = OrientedKnotDiagram(visits, tuple(signs))
    return ReconstructedDiagram(diagram, frozenset(undetermined))


def _shifted(cells, shift: int):
    return tuple(row[shift:] + row[:shift] for row in cells)


def canonical_form(matrix: WarpingMatrix, allow_reflection: bool = False) -> WarpingMatrix:
    """Lexicographic minimum over cyclic column shifts of the row-sorted grid.

    Cells compare as (value, bar) with unbarred before barred.  With
    ``allow_reflection`` the column-reversed grid's shifts compete too.
    """
    variants = [matrix.cells_grid()]
    if allow_reflection:
        variants.append(tuple(row[::-1] for row in variants[0]))
    best = min(
        tuple(sorted(_shifted(cells, shift)))
        for cells in variants
        for shift in range(matrix.column_count)
    )
    rows = tuple(
        LabeledSequence(tuple(v for v, _ in row), tuple(b for _, b in row))
        for row in best
    )
    return WarpingMatrix(matrix.kind, matrix.c, rows)


def equivalent(a: WarpingMatrix, b: WarpingMatrix, allow_reflection: bool = False) -> bool:
    """Same matrix up to row swaps and cyclic column shifts (kind ignored)."""
    if a.c != b.c or a.row_count != b.row_count:
        return False
    return (
        canonical_form(a, allow_reflection).cells_grid()
        == canonical_form(b, allow_reflection).cells_grid()
    )


def _format_cell(value: int, bar: bool) -> str:
    return f"{value}-" if bar else str(value)


def _parse_cell(token: str) -> tuple[int, bool]:
    bar = len(token) > 1 and token.endswith("-")
    text = token[:-1] if bar else token
    try:
        return int(text), bar
    except ValueError:
        raise MatrixError(f"bad matrix cell {token!r}") from None


def matrix_to_text(matrix: WarpingMatrix) -> str:
    """One row per line, cells space-separated, a bar as a trailing "-"."""
    return "".join(
        " ".join(_format_cell(v, b) for v, b in row.cells()) + "\n"
        for row in matrix.rows
    )


def infer_kind(row_count: int, column_count: int, barred: bool) -> tuple[MatrixKind, int]:
    """Classify a matrix shape: full (2**c rows) or one-short (2**c - 1)."""
    if column_count < 2 or column_count % 2:
        raise MatrixError(f"column count must be a positive even number, got {column_count}")
    c = column_count // 2
    if row_count == 2**c:
        return (MatrixKind.SIGNED_PROJECTION if barred else MatrixKind.PROJECTION), c
    if row_count == 2**c - 1:
        return MatrixKind.DIAGRAM, c
    raise MatrixError(
        f"{row_count} rows of {column_count} columns match neither {2**c} nor {2**c - 1}"
    )


def matrix_from_text(text: str, kind: MatrixKind | None = None) -> WarpingMatrix:
    """Inverse of :func:`matrix_to_text`; kind inferred from shape unless given."""
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        cells = [_parse_cell(token) for token in line.split()]
        rows.append(
            LabeledSequence(tuple(v for v, _ in cells), tuple(b for _, b in cells))
        )
    if not rows:
        raise MatrixError("empty matrix text")
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise MatrixError("ragged matrix text")
    if kind is None:
        kind, c = infer_kind(len(rows), widths.pop(), any(any(r.bars) for r in rows))
    else:
        c = widths.pop() // 2
    return WarpingMatrix(kind, c, tuple(rows))


def matrix_to_json(matrix: WarpingMatrix) -> dict:
    return {
        "c": matrix.c,
        "kind": matrix.kind.value,
        "rows": [
            [{"v": v, "bar": b} for v, b in row.cells()] for row in matrix.rows
        ],
    }


def matrix_from_json(data: dict) -> WarpingMatrix:
    try:
        kind = MatrixKind(data["kind"])
        rows = tuple(
            LabeledSequence(
                tuple(int(cell["v"]) for cell in row),
                tuple(bool(cell["bar"]) for cell in row),
            )
            for row in data["rows"]
        )
        c = int(data["c"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixError(f"bad matrix JSON: {exc}") from exc
    return WarpingMatrix(kind, c, rows)


def matrix_json_dumps(matrix: WarpingMatrix) -> str:
    return json.dumps(matrix_to_json(matrix), indent=2) + "\n"
