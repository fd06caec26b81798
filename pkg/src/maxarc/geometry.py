"""Projective planes: construction of PG(2,q), ingestion of line tables, duals, validation.

Plane file format ("lines format"): one line of the plane per row, n+1
whitespace-separated decimal point indices; blank rows and ``#`` comments
are ignored. Indices may be 0- or 1-based.
"""

from __future__ import annotations

import itertools
from typing import Any, Iterable, Sequence, TextIO

import numpy as np

from .errors import ParameterError, ParseError, ValidationError, ValidationReport
from .gf import Field

Triple = tuple[int, int, int]


class ProjectivePlane:
    """Points ``0..N-1`` and ``N`` lines (sorted point tuples), N = n^2+n+1.

    ``line_masks[i]`` has bit p set iff point p is on line i;
    ``point_masks[p]`` has bit i set iff point p is on line i.
    ``coords``/``line_coords`` are only present for planes built over a field.
    """

    def __init__(
        self,
        order: int,
        lines: Iterable[Iterable[int]],
        label: str = "",
        *,
        field: Field | None = None,
        coords: Sequence[Triple] | None = None,
        line_coords: Sequence[Triple] | None = None,
        provenance: dict[str, Any] | None = None,
    ):
        if order < 2:
            raise ParameterError(f"plane order must be at least 2, got {order}")
        self.order = order
        self.lines: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(line)) for line in lines)
        self.label = label
        self.field = field
        self.coords = tuple(coords) if coords is not None else None
        self.line_coords = tuple(line_coords) if line_coords is not None else None
        self.provenance = dict(provenance or {})
        self.line_masks = [_mask(line) for line in self.lines]
        pm = [0] * self.num_points
        for i, line in enumerate(self.lines):
            for p in line:
                if 0 <= p < self.num_points:
                    pm[p] |= 1 << i
        self.point_masks = pm
        self._point_index = None if self.coords is None else {c: i for i, c in enumerate(self.coords)}

    @property
    def num_points(self) -> int:
        n = self.order
        return n * n + n + 1

    @property
    def num_lines(self) -> int:
        return len(self.lines)

    def __repr__(self) -> str:
        return f"ProjectivePlane(order={self.order}, label={self.label!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ProjectivePlane)
            and self.order == other.order
            and self.lines == other.lines
        )

    __hash__ = None  # type: ignore[assignment]

    def point_lines(self, p: int) -> list[int]:
        return _bits(self.point_masks[p])

    def line_through(self, p: int, q: int) -> int:
        common = self.point_masks[p] & self.point_masks[q]
        if p == q or common == 0:
            raise ParameterError(f"no unique line through points {p} and {q}")
        return (common & -common).bit_length() - 1

    def meet(self, a: int, b: int) -> int:
        common = self.line_masks[a] & self.line_masks[b]
        if a == b or common == 0:
            raise ParameterError(f"lines {a} and {b} have no unique common point")
        return (common & -common).bit_length() - 1

    def point_of(self, coord: Triple) -> int:
        """Index of the point with homogeneous coordinates ``coord`` (any scaling)."""
        if self._point_index is None or self.field is None:
            raise ParameterError("coordinates required: plane was not built over a field")
        return self._point_index[normalize(self.field, coord)]

    def incidence_matrix(self) -> np.ndarray:
        """Lines x points 0/1 matrix."""
        a = np.zeros((self.num_lines, self.num_points), dtype=np.uint8)
        for i, line in enumerate(self.lines):
            a[i, list(line)] = 1
        return a


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def normalize(field: Field, v: Sequence[int]) -> Triple:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    for a in v:
        if a:
            inv = field.inv(a)
            return tuple(field.mul(inv, x) for x in v)  # type: ignore[return-value]
    raise ParameterError("the zero vector is not a projective point")


def normalized_triples(field: Field) -> list[Triple]:
    """All normalized nonzero triples over ``field``, in lexicographic order."""
    q = field.order
    out: list[Triple] = [(0, 0, 1)]
    out += [(0, 1, z) for z in range(q)]
    out += [(1, y, z) for y in range(q) for z in range(q)]
    return out


def build_pg2(field: Field) -> ProjectivePlane:
    """The Desarguesian plane PG(2,q) over ``field``.

    Points and lines are both indexed by their normalized coordinate
    triples in lexicographic order; point x lies on line a iff a.x = 0.
    """
    triples = normalized_triples(field)
    lines = []
    for a in triples:
        lines.append([i for i, x in enumerate(triples) if field.dot(a, x) == 0])
    plane = ProjectivePlane(
        field.order,
        lines,
        label=f"PG(2,{field.order})",
        field=field,
        coords=triples,
        line_coords=triples,
    )
    validate_plane(plane).raise_if_invalid("construction produced an invalid plane")
    return plane


def validate_plane(plane: ProjectivePlane) -> ValidationReport:
    """Check counts, line sizes, point degrees and exact pair coverage."""
    n = plane.order
    npts = plane.num_points
    report = ValidationReport(f"projective plane of order {n}")
    if plane.num_lines != npts:
        report.add("line_count", expected=npts, found=plane.num_lines)
    counts = np.zeros((npts, npts), dtype=np.int32)
    for i, line in enumerate(plane.lines):
        if len(line) != n + 1:
            report.add("line_size", line=i, expected=n + 1, found=len(line))
        bad = [p for p in line if not 0 <= p < npts]
        if bad:
            report.add("index_out_of_range", line=i, points=bad)
            continue
        if len(set(line)) != len(line):
            report.add("duplicate_point_in_line", line=i)
            continue
        idx = np.asarray(line)
        counts[np.ix_(idx, idx)] += 1
    degrees = np.diagonal(counts)
    for p in np.flatnonzero(degrees != n + 1):
        report.add("point_degree", point=int(p), expected=n + 1, found=int(degrees[p]))
    upper = np.triu(counts, 1)
    iu, ju = np.triu_indices(npts, 1)
    pair_counts = upper[iu, ju]
    for idx in np.flatnonzero(pair_counts > 1):
        report.add("pair covered twice", pair=(int(iu[idx]), int(ju[idx])), count=int(pair_counts[idx]))
    for idx in np.flatnonzero(pair_counts == 0):
        report.add("pair uncovered", pair=(int(iu[idx]), int(ju[idx])))
    return report


def dual_plane(plane: ProjectivePlane) -> ProjectivePlane:
    """Point i of the dual is line i of ``plane``; dual line j lists the lines through point j."""
    lines = [plane.point_lines(p) for p in range(plane.num_points)]
    label = plane.label[:-2] if plane.label.endswith(".d") else plane.label + ".d"
    return ProjectivePlane(
        plane.order,
        lines,
        label=label,
        field=plane.field,
        coords=plane.line_coords,
        line_coords=plane.coords,
    )


def read_indices(source: TextIO) -> list[tuple[int, list[int]]]:
    """(row number, integers) for every non-blank, non-comment row."""
    rows = []
    for lineno, raw in enumerate(source, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            rows.append((lineno, [int(tok) for tok in text.replace(",", " ").split()]))
        except ValueError as exc:
            raise ParseError(f"non-integer token: {exc}", lineno) from None
    return rows


def detect_base(values: Iterable[int], count: int) -> int | None:
    """0 if index 0 occurs, 1 if index ``count`` occurs, None if neither.

    Raises if both occur, since that cannot be a valid index range.
    """
    vals = set(values)
    zero, top = 0 in vals, count in vals
    if zero and top:
        raise ParseError(f"indices span 0..{count}, too many for {count} points")
    if zero:
        return 0
    if top:
        return 1
    return None


def load_plane(source: TextIO, expected_order: int, label: str = "") -> ProjectivePlane:
    """Parse a plane in lines format and validate it."""
    n = expected_order
    npts = n * n + n + 1
    rows = read_indices(source)
    if len(rows) != npts:
        raise ParseError(f"expected {npts} rows for a plane of order {n}, found {len(rows)}")
    for lineno, row in rows:
        if len(row) != n + 1:
            raise ParseError(f"expected {n + 1} indices, found {len(row)}", lineno)
        if len(set(row)) != len(row):
            dup = sorted(p for p in set(row) if row.count(p) > 1)
            raise ParseError(f"duplicate index {dup[0]} in row", lineno)
    base = detect_base((p for _, row in rows for p in row), npts)
    if base is None:
        raise ParseError("cannot detect index base: neither 0 nor the point count occurs")
    for lineno, row in rows:
        for p in row:
            if not base <= p < npts + base:
                raise ParseError(f"index {p} out of range", lineno)
    plane = ProjectivePlane(n, [[p - base for p in row] for _, row in rows], label=label)
    report = validate_plane(plane)
    if not report.valid:
        where: list[int] = []
        for v in report.violations:
            if "line" in v.detail:
                where = [v.detail["line"]]
            elif v.kind == "pair covered twice":
                p, q = v.detail["pair"]
                where = _bits(plane.point_masks[p] & plane.point_masks[q])
            if where:
                break
        msg = "invalid plane"
        if where:
            msg += " at row(s) " + ", ".join(str(rows[i][0]) for i in where)
        raise ValidationError(msg, report)
    return plane


def dump_plane(plane: ProjectivePlane, out: TextIO, base: int = 0) -> None:
    """Write ``plane`` in lines format."""
    out.write(f"# {plane.label or 'projective plane'} of order {plane.order}\n")
    for line in plane.lines:
        out.write(" ".join(str(p + base) for p in line) + "\n")


def plane_to_text(plane: ProjectivePlane, base: int = 0) -> str:
    import io

    buf = io.StringIO()
    dump_plane(plane, buf, base)
    return buf.getvalue()


def lines_meet_once(plane: ProjectivePlane) -> bool:
    """Dual axiom: any two distinct lines share exactly one point."""
    masks = plane.line_masks
    return all((a & b).bit_count() == 1 for a, b in itertools.combinations(masks, 2))
