"""Dense real-matrix primitives: SVD, pseudo-inverse, rank, RREF, projectors.

All operations are pure functions over numpy arrays.  Inputs are validated
eagerly: matrices must be 2-d, nonempty and finite, so numerical routines
never see NaN or Inf.  Rank decisions are governed by a :class:`Tolerance`;
the default singular-value cutoff is ``max(rows, cols) * eps * s_max``, which
makes them invariant under rescaling of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_EPS = float(np.finfo(np.float64).eps)

# Zero-snap safety factor for row elimination.  Cancellation residue of a
# dependent row can exceed a bare max(m, n) * eps multiple of the row scale
# once pivot normalizations introduce non-representable fractions.
_SNAP_SAFETY = 64.0


class NumericError(RuntimeError):
    """An iterative numerical routine failed (e.g. SVD non-convergence)."""


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds shared by the rank-sensitive operations.

    ``rank_tol`` is an absolute singular-value cutoff; ``None`` derives the
    standard scale-invariant cutoff from the matrix itself.  Inside
    :func:`rref` it acts as a relative multiplier against each row's running
    magnitude.  ``eq_tol`` is the relative tolerance for entrywise matrix
    comparisons.
    """

    rank_tol: float | None = None
    eq_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.rank_tol is not None and not (0.0 <= self.rank_tol < np.inf):
            raise ValueError(f"rank_tol must be finite and >= 0, got {self.rank_tol}")
        if not (0.0 <= self.eq_tol < np.inf):
            raise ValueError(f"eq_tol must be finite and >= 0, got {self.eq_tol}")


DEFAULT_TOLERANCE = Tolerance()


def as_matrix(a) -> np.ndarray:
    """Coerce input to a 2-d float64 array, rejecting empty or non-finite data."""
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got array of shape {m.shape}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"matrix dimensions must be positive, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite (no NaN or Inf)")
    return m


def as_vector(v) -> np.ndarray:
    """Coerce input to a 1-d float64 array of finite entries."""
    x = np.asarray(v, dtype=np.float64)
    if x.ndim != 1 or x.shape[0] < 1:
        raise ValueError(f"expected a nonempty 1-d vector, got array of shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("vector entries must be finite (no NaN or Inf)")
    return x


def svd(a) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD: returns ``(u, s, vt)`` with ``a == u @ diag(s) @ vt``.

    Singular values come sorted in descending order; ``u`` has orthonormal
    columns and ``vt`` orthonormal rows.
    """
    a = as_matrix(a)
    try:
        return np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"SVD did not converge: {exc}") from exc


def _rank_cutoff(s: np.ndarray, shape: tuple[int, int], tol: Tolerance) -> float:
    if tol.rank_tol is not None:
        return tol.rank_tol
    smax = float(s[0]) if s.size else 0.0
    return max(shape) * _EPS * smax


def pinv(a, tol: Tolerance | None = None) -> np.ndarray:
    """Moore-Penrose pseudo-inverse via SVD.

    Singular values at or below the rank cutoff are treated as exactly zero,
    so rank-deficient kernels invert cleanly on their range.  The result
    satisfies the four Penrose conditions up to rounding.
    """
    a = as_matrix(a)
    tol = tol or DEFAULT_TOLERANCE
    u, s, vt = svd(a)
    keep = s > _rank_cutoff(s, a.shape, tol)
    inv = np.zeros_like(s)
    inv[keep] = 1.0 / s[keep]
    return (vt.T * inv) @ u.T


def rank(a, tol: Tolerance | None = None) -> int:
    """Numerical rank: the number of singular values above the cutoff."""
    a = as_matrix(a)
    tol = tol or DEFAULT_TOLERANCE
    s = svd(a)[1]
    return int(np.count_nonzero(s > _rank_cutoff(s, a.shape, tol)))


def rref(a, tol: Tolerance | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form by Gauss-Jordan elimination with partial pivoting.

    Returns ``(r, pivots)`` where ``pivots`` lists the pivot column indices in
    ascending order.  Pivot entries are exactly 1 with exact zeros above and
    below them, and zero rows sort last.  During elimination, entries that are
    negligible relative to the largest magnitude their row has carried are
    snapped to exact zero; the relative multiplier is ``rank_tol`` when set,
    otherwise ``64 * max(rows, cols) * eps``.  Judging residue against the
    running row magnitude (not the current one) lets fully cancelled rows
    collapse to exact zero rows.
    """
    a = as_matrix(a)
    tol = tol or DEFAULT_TOLERANCE
    r = a.copy()
    m, n = r.shape
    rel = tol.rank_tol if tol.rank_tol is not None else _SNAP_SAFETY * max(m, n) * _EPS
    scale = np.max(np.abs(r), axis=1)
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        p = row + int(np.argmax(np.abs(r[row:, col])))
        if abs(r[p, col]) <= rel * scale[p]:
            continue
        if p != row:
            r[[row, p]] = r[[p, row]]
            scale[[row, p]] = scale[[p, row]]
        pv = r[row, col]
        r[row] /= pv
        scale[row] /= abs(pv)
        f = r[:, col].copy()
        f[row] = 0.0
        r -= np.outer(f, r[row])
        r[:, col] = 0.0
        r[row, col] = 1.0
        np.maximum(scale, np.abs(f) * scale[row], out=scale)
        np.maximum(scale, np.max(np.abs(r), axis=1), out=scale)
        r[np.abs(r) <= rel * scale[:, None]] = 0.0
        pivots.append(col)
        row += 1
    return r, pivots


def projection(h, tol: Tolerance | None = None) -> np.ndarray:
    """Orthogonal projector onto the row space of ``h``: ``hT (h hT)^+ h``.

    The projector depends only on the row space, so any matrix with the same
    row space produces the same result; it is symmetric and idempotent up to
    rounding.
    """
    h = as_matrix(h)
    return h.T @ pinv(h @ h.T, tol) @ h


def kron(a, b) -> np.ndarray:
    """Kronecker product, shape ``(ra * rb, ca * cb)``."""
    return np.kron(as_matrix(a), as_matrix(b))
