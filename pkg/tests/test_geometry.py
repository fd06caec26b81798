import io
import itertools

import pytest

from maxarc.errors import ParseError, ValidationError
from maxarc.geometry import (
    ProjectivePlane,
    build_pg2,
    dual_plane,
    dump_plane,
    lines_meet_once,
    load_plane,
    plane_to_text,
    validate_plane,
)
from maxarc.gf import Field
from oracles import is_projective_plane

FANO = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]


@pytest.mark.parametrize("t, npts", [(1, 7), (2, 21), (4, 273)])
def test_build_pg2_counts(t, npts):
    plane = build_pg2(Field(t))
    assert plane.num_points == plane.num_lines == npts
    assert all(len(line) == plane.order + 1 for line in plane.lines)
    assert validate_plane(plane).valid
    assert lines_meet_once(plane)


@pytest.mark.parametrize("t", [1, 2])
def test_build_pg2_against_brute_force(t):
    assert is_projective_plane(build_pg2(Field(t)).lines, 2**t)


def test_build_is_deterministic():
    a, b = build_pg2(Field(4)), build_pg2(Field(4))
    assert a.lines == b.lines and a.coords == b.coords


def test_canonical_order_is_lexicographic(pg16_plane):
    assert list(pg16_plane.coords) == sorted(pg16_plane.coords)
    assert pg16_plane.coords[0] == (0, 0, 1)
    assert pg16_plane.point_of((0, 0, 5)) == 0


def test_incidence_is_dot_product(pg16_plane):
    f = pg16_plane.field
    for i in (0, 17, 200):
        a = pg16_plane.line_coords[i]
        assert pg16_plane.lines[i] == tuple(
            p for p, x in enumerate(pg16_plane.coords) if f.dot(a, x) == 0
        )


def test_load_round_trip(pg16_plane):
    text = plane_to_text(pg16_plane)
    loaded = load_plane(io.StringIO(text), 16)
    assert loaded.lines == pg16_plane.lines


def test_load_one_based(pg16_plane):
    loaded = load_plane(io.StringIO(plane_to_text(pg16_plane, base=1)), 16)
    assert loaded.lines == pg16_plane.lines


def test_load_fano_with_comments():
    text = "# Fano\n\n" + "\n".join(" ".join(map(str, l)) + "  # line" for l in FANO)
    plane = load_plane(io.StringIO(text), 2)
    assert plane.order == 2 and validate_plane(plane).valid


def test_load_altered_index_fails(pg16_plane):
    rows = [list(l) for l in pg16_plane.lines]
    rows[5][3] = next(p for p in range(273) if p not in rows[5])
    text = "\n".join(" ".join(map(str, r)) for r in rows)
    with pytest.raises(ValidationError) as err:
        load_plane(io.StringIO(text), 16)
    assert {"pair covered twice", "pair uncovered"} <= err.value.report.kinds()
    assert "row" in str(err.value)


@pytest.mark.parametrize(
    "text, match",
    [
        ("0 1 2\n" * 6, "expected 7 rows"),
        ("\n".join(" ".join(map(str, l)) for l in FANO[:-1]) + "\n2 4\n", "row 7: expected 3 indices"),
        ("\n".join(" ".join(map(str, l)) for l in FANO[:-1]) + "\n2 4 4\n", "row 7: duplicate index 4"),
        ("\n".join(" ".join(str(p + 9) for p in l) for l in FANO), "index base"),
        ("0 1 x\n", "row 1: non-integer"),
    ],
)
def test_load_format_errors(text, match):
    with pytest.raises(ParseError, match=match):
        load_plane(io.StringIO(text), 2)


def test_duplicated_line_reported():
    lines = FANO[:-1] + [FANO[0]]
    report = validate_plane(ProjectivePlane(2, lines))
    assert report.count("pair covered twice") == 3
    assert report.count("pair uncovered") == 3


def test_deleted_line_reported():
    report = validate_plane(ProjectivePlane(2, FANO[:-1]))
    assert "line_count" in report.kinds()
    assert report.count("pair uncovered") == 3
    assert "pair covered twice" not in report.kinds()


def test_dual_of_fano_is_plane():
    d = dual_plane(ProjectivePlane(2, FANO))
    assert validate_plane(d).valid and d.order == 2


def test_double_dual_is_identity(pg16_plane):
    d = dual_plane(pg16_plane)
    assert validate_plane(d).valid
    dd = dual_plane(d)
    assert dd.lines == pg16_plane.lines
    assert dd.label == pg16_plane.label and d.label == "PG(2,16).d"


def test_dual_incidence(pg16_plane):
    d = dual_plane(pg16_plane)
    for j, line in enumerate(d.lines):
        assert all(j in pg16_plane.lines[i] for i in line)


def test_point_and_line_masks_agree(pg16_plane):
    for p, q in itertools.combinations(range(0, 273, 37), 2):
        line = pg16_plane.line_through(p, q)
        assert p in pg16_plane.lines[line] and q in pg16_plane.lines[line]


def test_dump_has_header():
    buf = io.StringIO()
    dump_plane(ProjectivePlane(2, FANO, label="Fano"), buf)
    assert buf.getvalue().splitlines()[0].startswith("# Fano")
