"""How the hypothesis-matrix choice does (not) matter for the Wald statistic.

A linear null hypothesis H theta = y can be written with many different
matrices.  This walkthrough builds three encodings of the same three-group
mean-equality hypothesis, shows that they share one projector and one Wald
statistic value, and then shows how right-hand sides interact with the
projector form.
"""

import numpy as np

import quadform as qf

rng = np.random.default_rng(1)

# ---------------------------------------------------------------------------
# Three encodings of mu_1 = mu_2 = mu_3 for the mean vector (mu_1, mu_2, mu_3)
# ---------------------------------------------------------------------------
h_all_pairs = np.array([[1.0, -1.0, 0.0],
                        [0.0, 1.0, -1.0],
                        [1.0, 0.0, -1.0]])     # every pairwise difference
h_projector = np.array([[2.0, -1.0, -1.0],
                        [-1.0, 2.0, -1.0],
                        [-1.0, -1.0, 2.0]]) / 3.0   # the centering projector
h_adjacent = np.array([[1.0, -1.0, 0.0],
                       [0.0, 1.0, -1.0]])      # adjacent differences only

encodings = {
    "all pairwise differences": qf.LinearHypothesis(h_all_pairs, np.zeros(3)),
    "centering projector": qf.LinearHypothesis(h_projector, np.zeros(3)),
    "adjacent differences": qf.LinearHypothesis(h_adjacent, np.zeros(2)),
}

print("All three encodings have the same solution set:")
reference = encodings["all pairwise differences"]
for name, hyp in encodings.items():
    verdict = qf.equivalent(reference, hyp)
    print(f"  vs {name:28s} -> {verdict.value}")

print("\nOne unique projector onto the shared row space:")
for name, hyp in encodings.items():
    p = qf.projection(hyp.h)
    print(f"  {name:28s} ->\n{np.array_str(p, precision=4)}")

print("\nAnd one Wald-statistic value, whatever the encoding:")
sigma = qf.sample_covariance(rng.standard_normal((40, 3)))
inp = qf.StatisticInput(rng.standard_normal(3), sigma, n=40)
for name, hyp in encodings.items():
    print(f"  {name:28s} -> WTS = {qf.wts(hyp, inp).value:.12g}")

# ---------------------------------------------------------------------------
# Nonzero right-hand sides: the projector needs a mapped right-hand side
# ---------------------------------------------------------------------------
print("\nTesting 'the 2x2 covariance matrix is the identity' two ways:")
v_is_identity_a = qf.LinearHypothesis(np.eye(3), [1.0, 0.0, 1.0])
v_is_identity_b = qf.LinearHypothesis(
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [1.0, 0.0, -1.0]], [1.0, 0.0, 0.0]
)
print(" ", qf.equivalent(v_is_identity_a, v_is_identity_b).value)
print("  canonical form of either encoding:")
canon = qf.canonical_form(v_is_identity_b)
print(np.array_str(np.column_stack([canon.h, canon.y]), precision=4))

print("\nKeeping the original y while switching to the projector breaks it:")
hyp = qf.LinearHypothesis(2.0 * np.eye(2), [2.0, 2.0])   # theta = (1, 1)
form = qf.projection_form(hyp)
naive = qf.LinearHypothesis(form.p, hyp.y)               # theta = (2, 2)
print(f"  projector with original y -> {qf.equivalent(hyp, naive).value}")
print(f"  projector with mapped y {form.y} -> equivalent: {form.equivalent}")
