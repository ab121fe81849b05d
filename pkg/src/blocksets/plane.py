"""Projective planes as explicit point/line incidence structures.

Points and lines of PG(2, q) are homogeneous triples over GF(q), normalized
so the first nonzero coordinate equals 1 and indexed in lexicographic order
of the concatenated coefficient vectors.  Planes of arbitrary order can also
be loaded from text files; only the Desarguesian constructor assumes
coordinates exist.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gf import FieldElement, FieldSpec

MAX_PLANE_FIELD_ORDER = 128

ProjPoint = tuple[FieldElement, FieldElement, FieldElement]


class PlaneFormatError(ValueError):
    """Raised when a plane or point-set file violates its format contract."""


@dataclass
class AxiomReport:
    """Outcome of an exhaustive projective-plane axiom check."""

    ok: bool
    failures: list[str] = field(default_factory=list)

    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None


class IncidencePlane:
    """A projective plane of order n as indexed points and sorted line lists.

    Immutable after construction; all queries are pure, so instances are safe
    to share between concurrent tasks.  The point universe is 0 .. n^2+n, and
    each line is stored as a sorted tuple of point indices together with a
    bitmask over the universe for fast intersection counting.
    """

    def __init__(
        self,
        order: int,
        lines,
        fieldspec: FieldSpec | None = None,
        point_coords: list[ProjPoint] | None = None,
    ):
        if order < 2:
            raise ValueError("plane order must be at least 2")
        self.order = order
        self.num_points = order * order + order + 1
        self.num_lines = len(lines)
        checked = []
        for line in lines:
            pts = tuple(sorted(line))
            for i in pts:
                if not 0 <= i < self.num_points:
                    raise ValueError(f"point index {i} out of range")
            checked.append(pts)
        self.lines: tuple[tuple[int, ...], ...] = tuple(checked)
        self.line_masks: tuple[int, ...] = tuple(
            sum(1 << i for i in pts) for pts in self.lines
        )
        through: list[list[int]] = [[] for _ in range(self.num_points)]
        for j, pts in enumerate(self.lines):
            for i in pts:
                through[i].append(j)
        self.point_lines: tuple[tuple[int, ...], ...] = tuple(
            tuple(ls) for ls in through
        )
        self.field = fieldspec
        self.point_coords = point_coords

    def __eq__(self, other):
        return (
            isinstance(other, IncidencePlane)
            and self.order == other.order
            and self.lines == other.lines
        )

    def __hash__(self):
        return hash((self.order, self.lines))

    def __repr__(self):
        kind = "coordinatized" if self.point_coords else "abstract"
        return f"IncidencePlane(order={self.order}, {kind})"

    def lines_through_point(self, point: int) -> tuple[int, ...]:
        if not 0 <= point < self.num_points:
            raise ValueError(f"point index {point} out of range")
        return self.point_lines[point]

    def line_through(self, p1: int, p2: int) -> int:
        """Index of the unique line containing both points."""
        if p1 == p2:
            raise ValueError("line_through requires two distinct points")
        candidates = set(self.point_lines[p1])
        for j in self.point_lines[p2]:
            if j in candidates:
                return j
        raise ValueError(f"no common line through {p1} and {p2}")


def build_desarguesian_plane(spec: FieldSpec) -> IncidencePlane:
    """Construct PG(2, q) over the given field.

    Points are normalized homogeneous triples (first nonzero coordinate 1);
    a line is the dual triple [a:b:c], incident with (x:y:z) exactly when
    ax + by + cz = 0.  Both sides are indexed in lexicographic order of the
    concatenated coefficient vectors, so two builds of the same field yield
    identical structures.
    """
    q = spec.order
    if q > MAX_PLANE_FIELD_ORDER:
        raise ValueError(f"field order {q} exceeds plane cap {MAX_PLANE_FIELD_ORDER}")
    add_t, mul_t, inv_t = spec.int_tables()
    one = spec.index_of(spec.one)
    neg_t = [add_t[i].index(0) for i in range(q)]

    triples = [(0, 0, one)]
    triples.extend((0, one, z) for z in range(q))
    triples.extend((one, y, z) for y in range(q) for z in range(q))
    triples.sort()
    point_index = {t: i for i, t in enumerate(triples)}

    def normalize(v):
        for c in v:
            if c:
                iv = inv_t[c]
                return (mul_t[v[0]][iv], mul_t[v[1]][iv], mul_t[v[2]][iv])
        raise AssertionError("zero vector on a line")

    lines = []
    for a, b, c in triples:
        if a == one:
            v1 = (neg_t[b], one, 0)
            v2 = (neg_t[c], 0, one)
        elif b == one:
            v1 = (one, 0, 0)
            v2 = (0, neg_t[c], one)
        else:
            v1 = (one, 0, 0)
            v2 = (0, one, 0)
        on_line = {point_index[normalize(v1)]}
        for lam in range(q):
            w = (
                add_t[v2[0]][mul_t[lam][v1[0]]],
                add_t[v2[1]][mul_t[lam][v1[1]]],
                add_t[v2[2]][mul_t[lam][v1[2]]],
            )
            on_line.add(point_index[normalize(w)])
        if len(on_line) != q + 1:
            raise AssertionError("line does not carry q+1 points")
        lines.append(sorted(on_line))

    coords = [
        (spec.element_at(x), spec.element_at(y), spec.element_at(z))
        for x, y, z in triples
    ]
    return IncidencePlane(q, lines, fieldspec=spec, point_coords=coords)


_MAX_REPORTED_FAILURES = 25


def verify_plane_axioms(plane: IncidencePlane) -> AxiomReport:
    """Exhaustively check the projective-plane axioms.

    Verifies the global counts, per-line cardinality, per-point degree, and
    that any two distinct points lie on exactly one common line.  Failures
    are report entries (with a first counterexample), never exceptions.
    """
    n = plane.order
    expected = n * n + n + 1
    failures: list[str] = []

    def note(msg: str):
        if len(failures) < _MAX_REPORTED_FAILURES:
            failures.append(msg)

    if plane.num_lines != expected:
        note(f"line count {plane.num_lines} != n^2+n+1 = {expected}")
    for j, pts in enumerate(plane.lines):
        if len(pts) != n + 1:
            note(f"line {j} cardinality {len(pts)} != n+1 = {n + 1}")
    for i in range(plane.num_points):
        deg = len(plane.point_lines[i])
        if deg != n + 1:
            note(f"point {i} lies on {deg} lines, expected n+1 = {n + 1}")

    pair_line: dict[tuple[int, int], int] = {}
    for j, pts in enumerate(plane.lines):
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                pair = (pts[a], pts[b])
                prev = pair_line.get(pair)
                if prev is None:
                    pair_line[pair] = j
                else:
                    note(f"points {pair[0]} and {pair[1]} lie on lines {prev} and {j}")
    if len(pair_line) != plane.num_points * (plane.num_points - 1) // 2:
        for a in range(plane.num_points):
            for b in range(a + 1, plane.num_points):
                if (a, b) not in pair_line:
                    note(f"points {a} and {b} lie on no common line")
                    break
            else:
                continue
            break

    return AxiomReport(ok=not failures, failures=failures)


def save_plane(plane: IncidencePlane, path) -> None:
    """Write a plane in the text format accepted by load_plane."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"order {plane.order}\n")
        for pts in plane.lines:
            fh.write(" ".join(str(i) for i in pts) + "\n")


def load_plane(path) -> IncidencePlane:
    """Read a plane file and validate it, including the plane axioms.

    Format: line 1 is ``order <n>``; then exactly n^2+n+1 non-empty lines,
    each with n+1 distinct zero-based point indices separated by single
    spaces.  Lines starting with ``#`` are comments.  Structural problems
    are reported with their file line number.
    """
    rows: list[tuple[int, str]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            rows.append((lineno, text))
    if not rows:
        raise PlaneFormatError("empty plane file")

    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "order":
        raise PlaneFormatError(f"line {lineno}: expected 'order <n>'")
    try:
        n = int(parts[1])
    except ValueError:
        raise PlaneFormatError(f"line {lineno}: order is not an integer") from None
    if n < 2:
        raise PlaneFormatError(f"line {lineno}: order must be at least 2")

    expected = n * n + n + 1
    body = rows[1:]
    if len(body) != expected:
        raise PlaneFormatError(
            f"expected {expected} incidence lines for order {n}, found {len(body)}"
        )

    lines = []
    for lineno, text in body:
        try:
            pts = [int(tok) for tok in text.split()]
        except ValueError:
            raise PlaneFormatError(f"line {lineno}: non-integer point index") from None
        if len(pts) != n + 1 or len(set(pts)) != len(pts):
            raise PlaneFormatError(f"line {lineno}: line cardinality != n+1")
        for i in pts:
            if not 0 <= i < expected:
                raise PlaneFormatError(f"line {lineno}: point index {i} out of range")
        lines.append(pts)

    plane = IncidencePlane(n, lines)
    report = verify_plane_axioms(plane)
    if not report.ok:
        raise PlaneFormatError(f"plane axioms violated: {report.first_failure()}")
    return plane
