"""Maximal arcs, the regular hyperoval, dual arcs and arc designs.

A maximal (m,k)-arc in a plane of order q = sk is a point set met by every
line in 0 or k points; then m = (sk-s+1)k. The lines missing it form a
maximal ((sk-k+1)s, s)-arc of the dual plane.

Arc file format: whitespace/newline separated point indices, ``#`` comments
allowed, 0- or 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TextIO

from .design import Design, DesignProvenance, derive_params, validate_design
from .errors import ParameterError, ParseError, ValidationError, ValidationReport
from .geometry import ProjectivePlane, detect_base, dual_plane, read_indices


@dataclass(frozen=True, eq=False)
class Arc:
    plane: ProjectivePlane
    points: frozenset[int]
    k: int

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def s(self) -> int:
        return self.plane.order // self.k

    @property
    def mask(self) -> int:
        m = 0
        for p in self.points:
            m |= 1 << p
        return m

    def sorted_points(self) -> list[int]:
        return sorted(self.points)

    def __repr__(self) -> str:
        return f"Arc(({self.m},{self.k}) in {self.plane.label or 'plane'} of order {self.plane.order})"


def arc_size(q: int, k: int) -> int:
    """Cardinality (sk-s+1)k of a maximal arc of degree k in a plane of order q = sk."""
    if k < 1 or q % k:
        raise ParameterError(f"k={k} does not divide the plane order {q}")
    s = q // k
    return (s * k - s + 1) * k


def validate_maximal_arc(plane: ProjectivePlane, points: Iterable[int], k: int) -> ValidationReport:
    """List every line meeting ``points`` in neither 0 nor k points."""
    pts = frozenset(points)
    report = ValidationReport(f"maximal arc of degree {k}")
    if plane.order % k:
        report.add("degree_does_not_divide_order", k=k, order=plane.order)
    bad = sorted(p for p in pts if not 0 <= p < plane.num_points)
    if bad:
        report.add("index_out_of_range", points=bad)
        return report
    if not pts:
        report.add("empty")
        return report
    mask = 0
    for p in pts:
        mask |= 1 << p
    for i, lm in enumerate(plane.line_masks):
        c = (lm & mask).bit_count()
        if c and c != k:
            report.add("line_intersection", line=i, size=c, expected=k)
    return report


def make_arc(plane: ProjectivePlane, points: Iterable[int], k: int) -> Arc:
    pts = frozenset(points)
    validate_maximal_arc(plane, pts, k).raise_if_invalid(f"not a maximal arc of degree {k}")
    return Arc(plane, pts, k)


def regular_hyperoval(plane: ProjectivePlane) -> Arc:
    """The conic y^2 = xz together with its nucleus (0,1,0)."""
    field = plane.field
    if field is None or plane.coords is None:
        raise ParameterError("coordinates required: plane was not built by build_pg2")
    if field.order % 2:
        raise ParameterError("hyperovals need even order")
    coords = [(1, c, field.mul(c, c)) for c in field.elements()]
    coords += [(0, 1, 0), (0, 0, 1)]
    return make_arc(plane, (plane.point_of(c) for c in coords), 2)


def load_arc(source: TextIO, plane: ProjectivePlane, k: int, index_base: int | None = None) -> Arc:
    """Read and validate a maximal arc of degree ``k``.

    With ``index_base=None`` the base is 0 if index 0 occurs, 1 if the point
    count occurs, and otherwise whichever base gives a valid arc (rejected if
    both or neither do).
    """
    values = []
    for lineno, row in read_indices(source):
        for p in row:
            if p in values:
                raise ParseError(f"duplicate point {p}", lineno)
            values.append(p)
    expected = arc_size(plane.order, k)
    if len(values) != expected:
        s = plane.order // k
        raise ParseError(
            f"wrong cardinality: (sk-s+1)k = {expected} expected for k={k}, q={plane.order} "
            f"(s={s}), found {len(values)}"
        )
    npts = plane.num_points
    if index_base is None:
        index_base = detect_base(values, npts)
    if index_base is None:
        fits = [
            b for b in (0, 1)
            if all(b <= p < npts + b for p in values)
            and validate_maximal_arc(plane, (p - b for p in values), k).valid
        ]
        if len(fits) != 1:
            raise ParseError(
                "cannot detect index base: "
                + ("valid as both 0- and 1-based" if fits else "not a maximal arc under either base")
            )
        index_base = fits[0]
    bad = [p for p in values if not index_base <= p < npts + index_base]
    if bad:
        raise ParseError(f"point index {bad[0]} out of range for {npts} points")
    pts = frozenset(p - index_base for p in values)
    report = validate_maximal_arc(plane, pts, k)
    if not report.valid:
        first = report.violations[0].detail
        raise ValidationError(f"not a maximal arc (offending line {first.get('line')})", report)
    return Arc(plane, pts, k)


def dump_arc(arc: Arc, out: TextIO, base: int = 0) -> None:
    out.write(f"# maximal ({arc.m},{arc.k})-arc in {arc.plane.label or 'plane'} of order {arc.plane.order}\n")
    out.write("\n".join(str(p + base) for p in arc.sorted_points()) + "\n")


def dual_arc(plane: ProjectivePlane, arc: Arc, dual: ProjectivePlane | None = None) -> Arc:
    """The lines missing ``arc``, as a maximal ((sk-k+1)s, s)-arc of the dual plane.

    Pass ``dual`` to reuse an already built dual plane.
    """
    q = plane.order
    if q % arc.k:
        raise ParameterError(f"k={arc.k} does not divide the plane order {q}")
    s = q // arc.k
    mask = arc.mask
    disjoint = [i for i, lm in enumerate(plane.line_masks) if not lm & mask]
    meeting = plane.num_lines - len(disjoint)
    if meeting * arc.k != arc.m * (q + 1):
        raise ValidationError(f"arc of size {arc.m} meets {meeting} lines, expected {arc.m * (q + 1) // arc.k}")
    if len(disjoint) != (s * arc.k - arc.k + 1) * s:
        raise ValidationError(f"{len(disjoint)} external lines, expected {(s * arc.k - arc.k + 1) * s}")
    if dual is None:
        dual = dual_plane(plane)
    return make_arc(dual, disjoint, s)


def extract_design(plane: ProjectivePlane, arc: Arc) -> Design:
    """The 2-((sk-s+1)k, k, 1) design cut out on ``arc`` by the lines of ``plane``.

    Design point i is the i-th smallest arc point; blocks follow line order.
    """
    if arc.k == 1:
        raise ParameterError("degenerate: no design for k = 1")
    pts = arc.sorted_points()
    index = {p: i for i, p in enumerate(pts)}
    mask = arc.mask
    blocks, line_ids = [], []
    for i, lm in enumerate(plane.line_masks):
        if lm & mask:
            blocks.append(tuple(index[p] for p in plane.lines[i] if p in index))
            line_ids.append(i)
    design = Design(
        derive_params(len(pts), arc.k, 1),
        tuple(blocks),
        provenance=DesignProvenance(plane, tuple(pts), tuple(line_ids)),
    )
    validate_design(design).raise_if_invalid("arc does not yield a Steiner design")
    return design
