"""Quadratic-form test statistics over linear hypotheses.

Implements the Wald-type statistic, whose value is invariant under the choice
of hypothesis matrix, the diagonal-kernel modification of it, and the
ANOVA-type statistic with its trace-standardized variant, which are not.
Also hosts the half-vectorization helpers for covariance-matrix hypotheses
and a plain sample-covariance estimator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hypothesis import LinearHypothesis
from .linalg import (
    DEFAULT_TOLERANCE,
    _EPS,
    NumericError,
    Tolerance,
    as_matrix,
    as_vector,
    pinv,
)

# Quadratic forms with PSD kernels cannot be negative; values above this
# floor are rounding noise and snap to zero, anything below is an error.
_NEGATIVE_FLOOR = -1e-9


@dataclass(frozen=True, eq=False)
class StatisticInput:
    """Statistic vector T, its covariance, and the total sample size.

    The covariance must be symmetric positive semidefinite; both properties
    are checked once at construction (within 1e-10 relative) so that the
    statistic evaluations themselves stay cheap inside resampling loops.
    """

    t: np.ndarray
    sigma: np.ndarray
    n: float

    def __post_init__(self) -> None:
        t = as_vector(self.t).copy()
        sigma = as_matrix(self.sigma).copy()
        _check_covariance(sigma)
        if t.shape[0] != sigma.shape[0]:
            raise ValueError(
                f"T has length {t.shape[0]} but Sigma is "
                f"{sigma.shape[0]}x{sigma.shape[1]}"
            )
        n = float(self.n)
        if not (np.isfinite(n) and n > 0):
            raise ValueError(f"sample size must be positive and finite, got {self.n}")
        t.flags.writeable = False
        sigma.flags.writeable = False
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "n", n)

    @property
    def d(self) -> int:
        return self.t.shape[0]


@dataclass(frozen=True)
class StatisticResult:
    """A computed statistic: which form, its value, and the row count used."""

    kind: str
    value: float
    m_effective: int


def _check_covariance(sigma: np.ndarray) -> None:
    if sigma.shape[0] != sigma.shape[1]:
        raise ValueError(f"covariance must be square, got shape {sigma.shape}")
    scale = float(np.linalg.norm(sigma))
    if float(np.linalg.norm(sigma - sigma.T)) > 1e-10 * scale:
        raise ValueError("covariance is not symmetric")
    if float(np.linalg.eigvalsh(sigma)[0]) < -1e-10 * scale:
        raise ValueError("covariance is not positive semidefinite")


def _finish(kind: str, value: float, m: int) -> StatisticResult:
    if value < _NEGATIVE_FLOOR:
        raise NumericError(
            f"{kind} evaluated to {value}; kernel is not PSD at working precision"
        )
    return StatisticResult(kind, max(value, 0.0), m)


def _check_match(hyp: LinearHypothesis, d: int) -> None:
    if hyp.d != d:
        raise ValueError(
            f"hypothesis has {hyp.d} columns but the statistic vector has length {d}"
        )


def wts(
    hyp: LinearHypothesis, inp: StatisticInput, tol: Tolerance | None = None
) -> StatisticResult:
    """Wald-type statistic ``N * (HT - y)' (H Sigma H')^+ (HT - y)``.

    For positive definite covariance the value depends only on the solution
    set of the hypothesis, not on the concrete matrix encoding it, so any two
    equivalent systems give the same number.
    """
    _check_match(hyp, inp.d)
    r = hyp.h @ inp.t - hyp.y
    kernel = hyp.h @ inp.sigma @ hyp.h.T
    value = inp.n * float(r @ pinv(kernel, tol) @ r)
    return _finish("WTS", value, hyp.m)


def mats(
    hyp: LinearHypothesis, inp: StatisticInput, tol: Tolerance | None = None
) -> StatisticResult:
    """Modified ANOVA-type statistic: the Wald form with kernel ``H diag(Sigma) H'``.

    Carries no sample-size factor.  Requires every diagonal entry of the
    covariance to be strictly positive; under that condition the value shares
    the Wald statistic's invariance under the hypothesis-matrix choice.
    """
    _check_match(hyp, inp.d)
    diag = np.diag(inp.sigma)
    if np.any(diag <= 0):
        raise ValueError("MATS requires strictly positive covariance diagonal entries")
    r = hyp.h @ inp.t - hyp.y
    kernel = (hyp.h * diag) @ hyp.h.T
    value = float(r @ pinv(kernel, tol) @ r)
    return _finish("MATS", value, hyp.m)


def ats(hyp: LinearHypothesis, t, n: float) -> StatisticResult:
    """ANOVA-type statistic ``N * ||HT - y||^2``.

    Unlike the Wald form, this value changes under most re-encodings of the
    hypothesis (already rescaling a row rescales its contribution); only zero
    rows, parallel-row collapsing with the proper weight, and row permutations
    leave it alone.  See ``reduce_for_ats``.
    """
    t = as_vector(t)
    _check_match(hyp, t.shape[0])
    n = float(n)
    if not (np.isfinite(n) and n > 0):
        raise ValueError(f"sample size must be positive and finite, got {n}")
    r = hyp.h @ t - hyp.y
    return _finish("ATS", n * float(r @ r), hyp.m)


def ats_standardized(
    hyp: LinearHypothesis, inp: StatisticInput, tol: Tolerance | None = None
) -> StatisticResult:
    """ANOVA-type statistic divided by ``trace(H Sigma H')``."""
    _check_match(hyp, inp.d)
    hs = hyp.h @ inp.sigma
    denom = float(np.sum(hs * hyp.h))
    floor = _EPS * float(np.linalg.norm(hyp.h) ** 2) * float(np.linalg.norm(inp.sigma))
    if denom <= floor:
        raise ValueError(
            "trace(H Sigma H') vanishes; the hypothesis annihilates the covariance"
        )
    raw = ats(hyp, inp.t, inp.n)
    return StatisticResult("ATS_s", raw.value / denom, hyp.m)


class WtsKernel:
    """Wald-type statistic with the kernel pseudo-inverse factored once.

    The pseudo-inverse of ``H Sigma H'`` depends only on the hypothesis and
    the covariance, so for repeated evaluation against many statistic vectors
    (bootstrap or permutation replicates) it pays to compute it a single time.
    Instances are immutable and safe to share across threads; ``evaluate``
    returns exactly what :func:`wts` returns for the same inputs.
    """

    def __init__(
        self,
        hypothesis: LinearHypothesis,
        sigma,
        n: float,
        tol: Tolerance | None = None,
    ) -> None:
        sigma = as_matrix(sigma).copy()
        _check_covariance(sigma)
        if hypothesis.d != sigma.shape[0]:
            raise ValueError(
                f"hypothesis has {hypothesis.d} columns but Sigma is "
                f"{sigma.shape[0]}x{sigma.shape[1]}"
            )
        n = float(n)
        if not (np.isfinite(n) and n > 0):
            raise ValueError(f"sample size must be positive and finite, got {n}")
        kernel = hypothesis.h @ sigma @ hypothesis.h.T
        inverse = pinv(kernel, tol)
        inverse.flags.writeable = False
        self._hypothesis = hypothesis
        self._n = n
        self._inverse = inverse

    @property
    def hypothesis(self) -> LinearHypothesis:
        return self._hypothesis

    def evaluate(self, t) -> StatisticResult:
        hyp = self._hypothesis
        r = hyp.h @ as_vector(t) - hyp.y
        value = self._n * float(r @ self._inverse @ r)
        return _finish("WTS", value, hyp.m)


def vech_upper(v) -> np.ndarray:
    """Row-wise upper-triangle vectorization of a symmetric matrix.

    For a symmetric p x p matrix returns the length p(p+1)/2 vector
    ``(v11, ..., v1p, v22, ..., v2p, ..., vpp)``.
    """
    v = as_matrix(v)
    p, q = v.shape
    if p != q:
        raise ValueError(f"vech needs a square matrix, got shape {v.shape}")
    scale = float(np.linalg.norm(v))
    if float(np.linalg.norm(v - v.T)) > 1e-10 * scale:
        raise ValueError("vech needs a symmetric matrix")
    return v[np.triu_indices(p)].copy()


def diag_selector(p: int) -> np.ndarray:
    """Indicator of the diagonal positions in the vech ordering.

    The returned vector s of length p(p+1)/2 satisfies
    ``s @ vech_upper(V) == trace(V)`` for symmetric V.
    """
    p = int(p)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    out = np.zeros(p * (p + 1) // 2)
    idx = 0
    for i in range(p):
        out[idx] = 1.0
        idx += p - i
    return out


def sample_covariance(x) -> np.ndarray:
    """Unbiased sample covariance (divisor n - 1) of observation rows."""
    x = as_matrix(x)
    if x.shape[0] < 2:
        raise ValueError(f"need at least 2 observations, got {x.shape[0]}")
    centered = x - x.mean(axis=0)
    cov = centered.T @ centered / (x.shape[0] - 1)
    return (cov + cov.T) / 2.0
