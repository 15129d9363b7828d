"""Gauss-code data for oriented knot diagrams and projections.

One indexing convention is used everywhere in this package:

* visits are numbered ``0 .. 2c-1`` along the traversal;
* edge ``j`` is the arc that enters visit ``j``, so edge 0 precedes
  visit 0 and edge ``(j+1) % 2c`` leaves visit ``j``;
* column ``j`` of a label sequence (and of every matrix built from
  label sequences) holds the warping degree based on edge ``j``.

Diagrams are abstract Gauss data.  Nothing is checked or assumed about
planarity, so virtual (non-realizable) words are accepted; every
operation here is well defined for them.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass


class GaussCodeError(ValueError):
    """Malformed Gauss-code text or inconsistent diagram data."""


@dataclass(frozen=True)
class Visit:
    """One pass through a crossing: which crossing, and on which strand."""

    crossing: int
    over: bool

    @property
    def strand(self) -> str:
        return "O" if self.over else "U"


@dataclass(frozen=True)
class KnotProjection:
    """A closed curve with ``c`` double points, as a double-occurrence word.

    ``word[j]`` is the crossing visited at position ``j``; every id in
    ``1..c`` occurs exactly twice.
    """

    word: tuple[int, ...]

    def __post_init__(self):
        if not self.word or len(self.word) % 2:
            raise GaussCodeError("projection word must have positive even length")
        c = len(self.word) // 2
        for k in range(1, c + 1):
            hits = self.word.count(k)
            if hits != 2:
                raise GaussCodeError(f"crossing {k} appears {hits} times, expected 2")

    @property
    def crossing_count(self) -> int:
        return len(self.word) // 2

    def positions(self, crossing: int) -> tuple[int, int]:
        """The two visit positions of one crossing."""
        first = self.word.index(crossing)
        second = self.word.index(crossing, first + 1)
        return first, second


@dataclass(frozen=True)
class OrientedKnotDiagram:
    """Oriented knot diagram as Gauss data: visit order, strands, signs.

    Crossing ids are exactly ``1..c``; ``signs[k-1]`` is the sign of
    crossing ``k``.
    """

    visits: tuple[Visit, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if not self.visits or len(self.visits) % 2:
            raise GaussCodeError("diagram must have positive even visit count")
        c = len(self.visits) // 2
        passes: dict[int, list[bool]] = {}
        for v in self.visits:
            passes.setdefault(v.crossing, []).append(v.over)
        for k in range(1, c + 1):
            strands = passes.pop(k, [])
            if len(strands) != 2:
                raise GaussCodeError(f"crossing {k} appears {len(strands)} times, expected 2")
            if strands[0] == strands[1]:
                raise GaussCodeError(f"crossing {k} passed twice on the same strand")
        if passes:
            raise GaussCodeError(f"crossing ids must be 1..{c}, got extra {sorted(passes)}")
        if len(self.signs) != c:
            raise GaussCodeError(f"expected {c} signs, got {len(self.signs)}")
        for k, s in enumerate(self.signs, start=1):
            if s not in (1, -1):
                raise GaussCodeError(f"sign of crossing {k} must be +1 or -1, got {s!r}")

    @property
    def crossing_count(self) -> int:
        return len(self.visits) // 2

    def sign(self, crossing: int) -> int:
        return self.signs[crossing - 1]


@dataclass(frozen=True)
class LabeledSequence:
    """A cyclic row of warping-degree labels, each optionally barred.

    Bars mark the label just after an overpass of a negative crossing;
    an overpass at the last visit wraps its bar onto column 0.
    """

    values: tuple[int, ...]
    bars: tuple[bool, ...]

    def __post_init__(self):
        if len(self.values) != len(self.bars):
            raise ValueError("values and bars must have equal length")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def bar_count(self) -> int:
        return sum(self.bars)

    def cells(self) -> tuple[tuple[int, bool], ...]:
        return tuple(zip(self.values, self.bars))

    @staticmethod
    def unsigned(values) -> "LabeledSequence":
        values = tuple(values)
        return LabeledSequence(values, (False,) * len(values))


_TOKEN = re.compile(r"([OUou])(\d+)([+\-−])")


def parse_gauss_code(text: str) -> OrientedKnotDiagram:
    """Parse a Gauss code like ``"O1+U2+O3+U1+O2+U3+"``.

    Tokens are strand letter, crossing id, crossing sign.  Whitespace is
    ignored; both ASCII ``-`` and U+2212 are accepted as minus.
    """
    stripped = re.sub(r"\s+", "", text)
    if not stripped:
        raise GaussCodeError("empty Gauss code")
    visits = []
    sign_of: dict[int, int] = {}
    pos = 0
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None:
            raise GaussCodeError(f"malformed token at offset {pos}: {stripped[pos:pos + 8]!r}")
        strand, digits, sign_ch = m.groups()
        crossing = int(digits)
        if crossing < 1:
            raise GaussCodeError(f"crossing ids start at 1, got {crossing}")
        sign = 1 if sign_ch == "+" else -1
        if sign_of.setdefault(crossing, sign) != sign:
            raise GaussCodeError(f"inconsistent sign tokens for crossing {crossing}")
        visits.append(Visit(crossing, strand in "Oo"))
        pos = m.end()
    c = len(visits) // 2
    if set(sign_of) != set(range(1, c + 1)):
        # Let the diagram constructor produce the precise complaint.
        return OrientedKnotDiagram(tuple(visits), (1,) * c)
    signs = tuple(sign_of[k] for k in range(1, c + 1))
    return OrientedKnotDiagram(tuple(visits), signs)


def format_gauss_code(diagram: OrientedKnotDiagram) -> str:
    """Inverse of :func:`parse_gauss_code` (normalized, no whitespace)."""
    return "".join(
        f"{v.strand}{v.crossing}{'+' if diagram.sign(v.crossing) > 0 else '-'}"
        for v in diagram.visits
    )


def diagram_to_json(diagram: OrientedKnotDiagram) -> dict:
    return {
        "visits": [
            {"id": v.crossing, "strand": v.strand, "sign": diagram.sign(v.crossing)}
            for v in diagram.visits
        ]
    }


def diagram_from_json(data: dict) -> OrientedKnotDiagram:
    try:
        items = data["visits"]
        visits = tuple(Visit(int(it["id"]), it["strand"] == "O") for it in items)
        sign_of = {int(it["id"]): int(it["sign"]) for it in items}
    except (KeyError, TypeError, ValueError) as exc:
        raise GaussCodeError(f"bad diagram JSON: {exc}") from exc
    c = len(visits) // 2
    if set(sign_of) != set(range(1, c + 1)):
        raise GaussCodeError("diagram JSON ids must be 1..c")
    return OrientedKnotDiagram(visits, tuple(sign_of[k] for k in range(1, c + 1)))


def warping_degree(diagram: OrientedKnotDiagram, base_edge: int) -> int:
    """Number of crossings first met as undercrossings from ``base_edge``.

    Evaluated by brute force straight from the definition; this is the
    reference the incremental labeling is checked against.
    """
    n = len(diagram.visits)
    if not 0 <= base_edge < n:
        raise ValueError(f"base edge must be in 0..{n - 1}, got {base_edge}")
    seen: set[int] = set()
    degree = 0
    for step in range(n):
        visit = diagram.visits[(base_edge + step) % n]
        if visit.crossing in seen:
            continue
        seen.add(visit.crossing)
        if not visit.over:
            degree += 1
    return degree


def warping_labels(diagram: OrientedKnotDiagram) -> LabeledSequence:
    """Warping degrees on all ``2c`` edges as one cyclic sequence.

    Column ``j`` is the degree based on edge ``j``.  Only the base value
    is counted directly; the rest of the walk is incremental, an
    overpass raising the label by one and an underpass lowering it.
    """
    labels = [warping_degree(diagram, 0)]
    for visit in diagram.visits[:-1]:
        labels.append(labels[-1] + (1 if visit.over else -1))
    return LabeledSequence.unsigned(labels)


def signed_labels(diagram: OrientedKnotDiagram) -> LabeledSequence:
    """Warping labels plus a bar after every overpass of a negative crossing."""
    base = warping_labels(diagram)
    n = len(base)
    bars = [False] * n
    for pos, visit in enumerate(diagram.visits):
        if visit.over and diagram.sign(visit.crossing) < 0:
            bars[(pos + 1) % n] = True
    return LabeledSequence(base.values, tuple(bars))


def crossing_change(diagram: OrientedKnotDiagram, crossing: int) -> OrientedKnotDiagram:
    """Swap over/under at one crossing and flip its sign (an involution)."""
    if not 1 <= crossing <= diagram.crossing_count:
        raise ValueError(f"unknown crossing {crossing}")
    visits = tuple(
        Visit(v.crossing, not v.over) if v.crossing == crossing else v
        for v in diagram.visits
    )
    signs = tuple(
        -s if k == crossing else s for k, s in enumerate(diagram.signs, start=1)
    )
    return OrientedKnotDiagram(visits, signs)


def underlying_projection(diagram: OrientedKnotDiagram) -> KnotProjection:
    """Forget all over/under and sign data."""
    return KnotProjection(tuple(v.crossing for v in diagram.visits))


def apply_assignment(
    projection: KnotProjection, reference: OrientedKnotDiagram, mask: int
) -> OrientedKnotDiagram:
    """The diagram of ``projection`` selected by a crossing-change mask.

    Bit ``k-1`` of ``mask`` flips crossing ``k`` relative to
    ``reference``; the ``2**c`` masks enumerate all diagrams over the
    projection.
    """
    if underlying_projection(reference).word != projection.word:
        raise ValueError("reference diagram does not project to the given projection")
    c = reference.crossing_count
    if not 0 <= mask < 2**c:
        raise ValueError(f"mask must be in 0..{2**c - 1}, got {mask}")
    visits = tuple(
        Visit(v.crossing, v.over ^ bool(mask >> (v.crossing - 1) & 1))
        for v in reference.visits
    )
    signs = tuple(
        -s if mask >> k & 1 else s for k, s in enumerate(reference.signs)
    )
    return OrientedKnotDiagram(visits, signs)


def reference_diagram(projection: KnotProjection) -> OrientedKnotDiagram:
    """A fixed diagram over a projection: first pass over, all signs +1."""
    seen: set[int] = set()
    visits = []
    for k in projection.word:
        visits.append(Visit(k, k not in seen))
        seen.add(k)
    return OrientedKnotDiagram(tuple(visits), (1,) * projection.crossing_count)


def rotated(diagram: OrientedKnotDiagram, shift: int) -> OrientedKnotDiagram:
    """The same diagram read from edge ``shift`` (cyclic start change)."""
    n = len(diagram.visits)
    shift %= n
    return OrientedKnotDiagram(
        diagram.visits[shift:] + diagram.visits[:shift], diagram.signs
    )


def relabel_first_appearance(diagram: OrientedKnotDiagram) -> OrientedKnotDiagram:
    """Rename crossings to 1..c in order of first appearance."""
    mapping: dict[int, int] = {}
    for v in diagram.visits:
        mapping.setdefault(v.crossing, len(mapping) + 1)
    visits = tuple(Visit(mapping[v.crossing], v.over) for v in diagram.visits)
    signs = [0] * diagram.crossing_count
    for old, new in mapping.items():
        signs[new - 1] = diagram.sign(old)
    return OrientedKnotDiagram(visits, tuple(signs))


def canonical_key(diagram: OrientedKnotDiagram) -> tuple:
    """A key invariant under cyclic start shifts and crossing relabeling.

    Two diagrams are the same Gauss data up to those moves iff their
    keys are equal.
    """
    n = len(diagram.visits)
    best = None
    for start in range(n):
        relabel: dict[int, int] = {}
        seq = []
        for step in range(n):
            v = diagram.visits[(start + step) % n]
            k = relabel.setdefault(v.crossing, len(relabel) + 1)
            seq.append((k, v.over, diagram.sign(v.crossing)))
        key = tuple(seq)
        if best is None or key < best:
            best = key
    return best


def projection_key(projection: KnotProjection) -> tuple:
    """Like :func:`canonical_key` for bare words (no strands, no signs)."""
    n = len(projection.word)
    best = None
    for start in range(n):
        relabel: dict[int, int] = {}
        seq = []
        for step in range(n):
            k = projection.word[(start + step) % n]
            seq.append(relabel.setdefault(k, len(relabel) + 1))
        key = tuple(seq)
        if best is None or key < best:
            best = key
    return best


def random_diagram(
    c: int, rng: random.Random | None = None, *, evenly_interleaved: bool = False
) -> OrientedKnotDiagram:
    """Random Gauss data with ``c`` crossings.

    With ``evenly_interleaved=True`` the two visits of every crossing
    land on opposite parities, which is exactly the condition for the
    word to admit alternating strand assignments (and is necessary for
    it to come from a curve on the sphere).  The default places the two
    visits anywhere, so virtual words appear too.
    """
    if c < 1:
        raise ValueError("need at least one crossing")
    rng = rng or random.Random()
    if evenly_interleaved:
        odds = list(range(1, 2 * c, 2))
        rng.shuffle(odds)
        ids = list(range(1, c + 1))
        rng.shuffle(ids)
        word = [0] * (2 * c)
        for k, (even, odd) in zip(ids, zip(range(0, 2 * c, 2), odds)):
            word[even] = word[odd] = k
    else:
        word = [k for k in range(1, c + 1) for _ in range(2)]
        rng.shuffle(word)
    first_over = {k: rng.random() < 0.5 for k in range(1, c + 1)}
    seen: set[int] = set()
    visits = []
    for k in word:
        over = first_over[k] if k not in seen else not first_over[k]
        seen.add(k)
        visits.append(Visit(k, over))
    signs = tuple(rng.choice((1, -1)) for _ in range(c))
    return OrientedKnotDiagram(tuple(visits), signs)
