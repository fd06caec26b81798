"""Parallel classes and resolutions as cliques, for K6 and for the 2-(120,8,1) design."""

import time

from maxarc import Field, build_pg2, dual_arc, extract_design, parallel_classes, regular_hyperoval, resolutions


def design_of(q):
    plane = build_pg2(Field.of_order(q))
    darc = dual_arc(plane, regular_hyperoval(plane))
    return extract_design(darc.plane, darc)


# PG(2,4): the design is K6, classes are perfect matchings, resolutions are 1-factorizations
k6 = design_of(4)
classes = parallel_classes(k6)
print(f"K6: {len(classes)} perfect matchings")
for c in classes[:3]:
    print("  ", [k6.blocks[b] for b in c.blocks])
res = resolutions(k6, classes)
print(f"K6: {len(res)} one-factorizations, e.g. classes {res[0].classes}")

# PG(2,16): classes are 15-cliques among blocks, resolutions are 17-cliques among classes
design = design_of(16)
start = time.perf_counter()
classes = parallel_classes(design)
print(f"2-(120,8,1): {len(classes)} parallel classes ({time.perf_counter() - start:.2f} s)")
start = time.perf_counter()
res = resolutions(design, classes, jobs=2)
print(f"2-(120,8,1): {len(res)} resolutions ({time.perf_counter() - start:.2f} s, 2 workers)")
