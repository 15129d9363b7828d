"""Combinatorial rules satisfied by warping label data.

These operate on plain rows (tuples of ints) and collections of rows,
independent of where they came from, so the matrix checkers and the
puzzle validator share one implementation.
"""

from __future__ import annotations

import math
from collections import Counter

RULE_NAMES = ("i", "ii", "iii", "iv")


def normalize_rules(rules) -> tuple[str, ...]:
    """Validate a rule subset and return it in canonical order.

    Rule i is mandatory: the others are only meaningful for rows that
    are cyclic unit-step sequences in 0..c.
    """
    chosen = set(rules)
    unknown = chosen - set(RULE_NAMES)
    if unknown:
        raise ValueError(f"unknown rules: {sorted(unknown)}")
    if "i" not in chosen:
        raise ValueError("rule i is required in every rule set")
    return tuple(name for name in RULE_NAMES if name in chosen)


def column_quota(c: int, value: int) -> int:
    """How many times ``value`` appears in each column of a full matrix."""
    return math.comb(c, value)


def step_law_offences(row, c: int) -> list[int]:
    """Positions where a row breaks rule i (cyclic steps of exactly 1).

    Returns column indices ``j`` such that ``|row[(j+1) % 2c] - row[j]|``
    is not 1, plus any position holding a value outside ``0..c``.
    """
    n = 2 * c
    if len(row) != n:
        raise ValueError(f"expected a row of length {n}, got {len(row)}")
    bad = [j for j, v in enumerate(row) if not 0 <= v <= c]
    bad.extend(
        j for j in range(n) if abs(row[(j + 1) % n] - row[j]) != 1 and j not in bad
    )
    return sorted(set(bad))


def column_histogram(rows, c: int) -> list[Counter]:
    """Value counts per column across a collection of rows."""
    counts = [Counter() for _ in range(2 * c)]
    for row in rows:
        for j, v in enumerate(row):
            counts[j][v] += 1
    return counts


def histogram_offences(rows, c: int) -> list[tuple[int, int]]:
    """(column, value) pairs whose count differs from the binomial quota."""
    offences = []
    for j, counter in enumerate(column_histogram(rows, c)):
        for value in range(c + 1):
            if counter.get(value, 0) != column_quota(c, value):
                offences.append((j, value))
    return offences


def complement_pairing(rows, c: int) -> list[tuple[int, int]] | None:
    """Pair up rows so each pair sums to ``(c, ..., c)``, if unique.

    Returns the pairing as index pairs when every row has exactly one
    complement partner (a row equal to its own complement must then
    appear exactly twice, giving one pair).  Returns ``None`` when the
    pairing does not exist or is not forced.
    """
    target = (c,) * (2 * c)
    by_row = Counter(tuple(r) for r in rows)
    for row, count in by_row.items():
        partner = tuple(t - v for t, v in zip(target, row))
        if partner == row:
            if count != 2:
                return None
        elif by_row.get(partner, 0) != count or count != 1:
            return None
    first_index: dict[tuple[int, ...], list[int]] = {}
    for i, row in enumerate(rows):
        first_index.setdefault(tuple(row), []).append(i)
    pairs = []
    for row, indices in first_index.items():
        partner = tuple(t - v for t, v in zip(target, row))
        if partner == row:
            pairs.append((indices[0], indices[1]))
        elif row < partner:
            pairs.append((indices[0], first_index[partner][0]))
    return sorted(pairs)


def alternating_phase(row, c: int) -> int | None:
    """Starting value if the row strictly alternates ``k, k+1, k, ...``."""
    if len(row) != 2 * c:
        raise ValueError(f"expected a row of length {2 * c}, got {len(row)}")
    k = row[0]
    if all(v == k + (j % 2) for j, v in enumerate(row)):
        return k
    if all(v == k - (j % 2) for j, v in enumerate(row)):
        return k
    return None


def find_alternating_rows(rows, c: int) -> list[int]:
    """Indices of rows of the form ``k, k+1, k, k+1, ...`` (either phase)."""
    return [i for i, row in enumerate(rows) if alternating_phase(row, c) is not None]


def alternating_rows_ok(rows, c: int) -> bool:
    """Rule iv: exactly two alternating rows, with starts summing right.

    The up-phase row ``k, k+1, ...`` and down-phase row ``l, l-1, ...``
    must satisfy ``k + l = c``.
    """
    hits = find_alternating_rows(rows, c)
    if len(hits) != 2:
        return False
    starts = []
    for i in hits:
        row = rows[i]
        k = row[0]
        up = all(v == k + (j % 2) for j, v in enumerate(row))
        starts.append((k, up))
    (k1, up1), (k2, up2) = starts
    return up1 != up2 and k1 + k2 == c
