"""From the regular hyperoval of PG(2,16) to a resolvable 2-(120,8,1) design."""

from maxarc import Field, build_pg2, dual_arc, extract_design, regular_hyperoval, validate_design, validate_maximal_arc

plane = build_pg2(Field.of_order(16))
h = regular_hyperoval(plane)
print(f"hyperoval: {h.m} points, degree {h.k}: {sorted(h.points)}")
print("valid maximal arc:", validate_maximal_arc(plane, h.points, h.k).valid)

# each line meets the hyperoval in 0 or 2 points
meets = {len(set(l) & h.points) for l in plane.lines}
print("line intersection sizes:", sorted(meets))

# lines missing the hyperoval form a maximal arc of the dual plane
darc = dual_arc(plane, h)
print(f"dual arc: {darc.m} lines of PG(2,16), degree {darc.k} in the dual plane")

design = extract_design(darc.plane, darc)
p = design.params
print(f"design 2-({p.v},{p.k},{p.lam}): b={p.b}, r={p.r}, v = nk with n={p.n}, s={p.s}")
print("design axioms hold:", validate_design(design).valid)
print("block 0:", design.blocks[0])
