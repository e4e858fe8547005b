"""Generalized-degree counts: exact tables, a network census, and exponents."""

from hofnet import (
    GeneratorParams,
    empirical_gdd,
    fit_power_law,
    gamma_closed_form,
    generate,
    growth_factor,
    ratio_C_l,
    theory_distribution,
    y_table,
)

# The recurrence table agrees with counting faces in the built network.
K, m, t = 4, 2, 2
tab = y_table(K, m, t)
c = generate(GeneratorParams(K, m, t))
for l in range(1, K):
    print(f"l={l}  table={tab.degree_counts(l)}  census={empirical_gdd(c, l).counts}")

# Counts grow like c_{l,r} S**t once t is large compared with K.
K, m = 5, 10
S = GeneratorParams(K, m, 0).S
for t in (3, 6, 12, 24):
    tab = y_table(K, m, t)
    row = [tab.Y(1, r) / S**t for r in range(K)]
    print(f"t={t:2d}  Y(1,r)/S^t = " + " ".join(f"{x:.4g}" for x in row))
print("limit          = " + " ".join(f"{growth_factor(K, m, 1, r):.4g}" for r in range(K)))
print("C_1 =", ratio_C_l(K, m, 1))

# Fitted versus closed-form exponent, from tables alone (no network needed).
for K, m in [(5, 55), (15, 100), (25, 10)]:
    t = max(K, 8)
    for l in (1, 2):
        fit = fit_power_law(theory_distribution(K, m, t, l))
        closed = gamma_closed_form(K, m, l)
        print(f"K={K} m={m} l={l}  fit={fit.gamma:.4f} (r2 {fit.r_squared:.4f})  closed={closed.gamma:.4f}")
