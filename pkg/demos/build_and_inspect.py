"""Build a few small complexes and look at what the generator produces."""

from collections import Counter

from hofnet import GeneratorParams, generate, maximal_cliques, similarity_dimension

# One iteration on a triangle with one multiplier per bottom.
c = generate(GeneratorParams(K=2, m=1, t=1))
print("nodes", c.n, "edges", c.skeleton.n_edges, "facets", len(c.facets))
print("roles", Counter(r.kind for r in c.skeleton.roles))
print("facets", c.facets)

# The facet count multiplies by S every iteration.
for t in range(4):
    p = GeneratorParams(3, 2, t)
    print(f"K=3 m=2 t={t}: facets={len(generate(p).facets)}  S**t={p.S**t}")

# For K >= 3 the skeleton carries triangles that are not faces of any facet,
# so the clique complex of the skeleton is larger than the complex itself.
c = generate(GeneratorParams(3, 1, 1))
sizes = Counter(len(q) for q in maximal_cliques(c.skeleton))
print("maximal clique sizes in K_1(3,1):", dict(sizes))

for K in range(1, 7):
    print(f"K={K} m=3: d_s = {similarity_dimension(GeneratorParams(K, 3, 0)):.4f}")
