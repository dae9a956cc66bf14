"""Safe row reductions for the ANOVA-type statistic.

The ANOVA-type statistic N * ||HT - y||^2 is NOT invariant under re-encoding
the hypothesis: rescaling a row rescales its contribution.  Two operations
are safe: dropping zero rows, and collapsing rows that are scalar multiples
of each other into their representative scaled by sqrt(1 + sum of squared
multipliers).  Projector matrices routinely contain both kinds of redundancy,
so the reduction makes them cheaper without touching the statistic.
"""

import numpy as np

import quadform as qf

rng = np.random.default_rng(7)

# Projectors for two hypotheses about a 2x2 covariance matrix, acting on the
# half-vectorized coordinates (v11, v12, v22):
diagonality = np.diag([0.0, 1.0, 0.0])                 # v12 = 0
sphericity = 0.5 * np.array([[1.0, 0.0, -1.0],
                             [0.0, 2.0, 0.0],
                             [-1.0, 0.0, 1.0]])        # v11 = v22, v12 = 0

for name, matrix in (("diagonality", diagonality), ("sphericity", sphericity)):
    print(f"{name} projector:")
    part = qf.dependence_classes(matrix)
    print(f"  zero rows: {list(part.zero_rows)}")
    for cls in part.classes:
        print(
            f"  class members {list(cls.members)}, coefficients "
            f"{[round(c, 4) for c in cls.coefficients]}, weight {cls.weight:.4f}"
        )
    hyp = qf.LinearHypothesis(matrix, np.zeros(3))
    reduced = qf.reduce_for_ats(hyp)
    print(f"  reduced matrix ({reduced.m} row(s) instead of {hyp.m}):")
    print(np.array_str(reduced.h, precision=4))

    print("  statistic values agree:")
    t = rng.standard_normal(3)
    sigma = qf.sample_covariance(rng.standard_normal((30, 3)))
    inp = qf.StatisticInput(t, sigma, n=30)
    print(f"    ATS   original {qf.ats(hyp, t, 30).value:.12g}")
    print(f"    ATS   reduced  {qf.ats(reduced, t, 30).value:.12g}")
    print(f"    ATS_s original {qf.ats_standardized(hyp, inp).value:.12g}")
    print(f"    ATS_s reduced  {qf.ats_standardized(reduced, inp).value:.12g}")
    print()

# What is NOT safe: rescaling a row, even though the hypothesis is unchanged.
plain = qf.LinearHypothesis([[1.0]], [0.0])
doubled = qf.LinearHypothesis([[2.0]], [0.0])
print("Row rescaling keeps the hypothesis:", qf.equivalent(plain, doubled).value)
print(
    "but changes the ATS:",
    qf.ats(plain, [1.0], 1).value,
    "vs",
    qf.ats(doubled, [1.0], 1).value,
)
print("\nThe Wald statistic shrugs at the same re-encoding:")
inp1 = qf.StatisticInput([1.0], [[1.0]], 1)
print(
    "  WTS:",
    qf.wts(plain, inp1).value,
    "vs",
    qf.wts(doubled, inp1).value,
)
