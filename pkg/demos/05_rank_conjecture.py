"""2-ranks of incidence matrices and the lower bound 3^t - 2^t."""

import numpy as np

from maxarc import BitMatrix, Field, build_pg2, check_rank_conjecture, dual_arc, extract_design, incidence_matrix, rank2, regular_hyperoval

for t in (2, 3, 4):
    plane = build_pg2(Field(t))
    darc = dual_arc(plane, regular_hyperoval(plane))
    design = extract_design(darc.plane, darc)
    rep = check_rank_conjecture(design, t)
    p = design.params
    print(f"t={t}: 2-({p.v},{p.k},1) rank {rep.rank}, bound {rep.bound}, holds {rep.holds}, equality {rep.equality}")

# the rank does not depend on how points and blocks are numbered
a = incidence_matrix(design).to_array()
rng = np.random.default_rng(0)
shuffled = a[rng.permutation(a.shape[0])][:, rng.permutation(a.shape[1])]
print("rank after shuffling rows and columns:", rank2(BitMatrix.from_array(shuffled)))
