"""Pairwise compatible resolutions and the plane they rebuild around the design."""

from collections import Counter

from maxarc import (
    Field,
    build_pg2,
    compatible,
    dual_arc,
    embed,
    extract_design,
    max_compatible_sets,
    parallel_classes,
    regular_hyperoval,
    resolutions,
    validate_plane,
)
from maxarc.resolve import class_multiplicities, embedded_arc

plane = build_pg2(Field.of_order(16))
darc = dual_arc(plane, regular_hyperoval(plane))
design = extract_design(darc.plane, darc)
classes = parallel_classes(design)
res = resolutions(design, classes)

print(f"largest possible compatible set: {design.params.max_compatible} resolutions")
pairs = sum(compatible(res[i], res[j], classes) for i in range(len(res)) for j in range(i + 1, len(res)))
print(f"{pairs} compatible pairs among {len(res)} resolutions")

sets = max_compatible_sets(design, res, classes)
print(f"compatible sets of full size: {len(sets)}")
cset = sets[0]
mult = Counter(class_multiplicities(cset, res).values())
print(f"classes used: {sum(mult.values())}, each by {sorted(mult)} resolutions")

new = embed(design, cset, res, classes)
print(f"embedded structure: {new.num_points} points, valid plane of order {new.order}: {validate_plane(new).valid}")
back = extract_design(new, embedded_arc(new))
print("design recovered from the embedding:", back.blocks == design.blocks)
