"""Finite fields GF(2^t) and the Desarguesian planes PG(2,q) built over them."""

from maxarc import Field, build_pg2, dual_plane, validate_plane
from maxarc.geometry import ProjectivePlane
from maxarc.gf import poly_str

f = Field.of_order(16)
print(f"GF(16) modulo {poly_str(f.modulus)}, generator {f.generator}")
a, b = 7, 11
print(f"{a} * {b} = {f.mul(a, b)}, {a} / {b} = {f.div(a, b)}, sqrt({a}) = {f.sqrt(a)}")
assert f.mul(f.div(a, b), b) == a

plane = build_pg2(f)
print(f"{plane.label}: {plane.num_points} points, {len(plane.lines)} lines of {len(plane.lines[0])}")
print("first line:", plane.lines[0])
print("point 5 has coordinates", plane.coords[5])

p, q = 3, 200
line = plane.line_through(p, q)
print(f"points {p} and {q} lie on line {line}: {plane.lines[line]}")

report = validate_plane(plane)
print("validation:", report.summary())

dual = dual_plane(plane)
print(f"dual {dual.label} valid: {validate_plane(dual).valid}")

# a corrupted copy is caught and explained
broken = list(plane.lines)
broken[1] = broken[0]
bad = ProjectivePlane(16, broken, "broken")
print("corrupted copy:", validate_plane(bad).summary(limit=2))
