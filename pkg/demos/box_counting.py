"""Box-counting dimension of generated skeletons next to the similarity dimension.

Both coverings are shown: compact boxes from random seeds (averaged over
trials) and overlapping radius balls (deterministic).
"""

from hofnet import GeneratorParams, all_pairs_distances, box_dimension, generate, similarity_dimension
from hofnet.boxcover import CBB, OBCA

for K, m, t in [(1, 0, 6), (2, 3, 2), (2, 3, 3), (4, 3, 2)]:
    p = GeneratorParams(K, m, t)
    g = generate(p).skeleton
    dm = all_pairs_distances(g)  # shared by both methods
    res, cbb = box_dimension(g, CBB, trials=20, seed=1, dm=dm)
    _, obca = box_dimension(g, OBCA, dm=dm)
    print(f"K={K} m={m} t={t}  n={g.n} diameter={dm.diameter}")
    for s in res.samples if dm.diameter <= 10 else ():
        print(f"    l_B={s.l_B:2d}  N_B={s.mean_N_B:9.2f} +- {s.std_N_B:.2f}")
    print(
        f"  d_s={similarity_dimension(p):.3f}  cbb={cbb.d_B:.3f} (r2 {cbb.r_squared:.3f})"
        f"  obca={obca.d_B:.3f} (r2 {obca.r_squared:.3f})"
    )

# Small skeletons have very few box sizes to regress on, so the estimates
# sit well below d_s at t=2 and climb as t grows.
