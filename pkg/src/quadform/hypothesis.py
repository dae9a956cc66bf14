"""Linear hypotheses ``H theta = y``: equivalence, canonical and reduced forms.

Many different matrix/vector pairs encode the same null hypothesis.  This
module decides when two encodings have identical solution sets, produces the
row-echelon canonical representative, converts to the unique projector form,
and collapses zero rows and pairwise parallel rows in the way that leaves the
ANOVA-type statistic unchanged.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import (
    DEFAULT_TOLERANCE,
    _EPS,
    Tolerance,
    as_matrix,
    as_vector,
    pinv,
    rank,
    rref,
)


class InconsistentHypothesisError(ValueError):
    """The linear system ``H theta = y`` admits no solution."""


class EquivalenceVerdict(enum.Enum):
    """Outcome of comparing the solution sets of two linear hypotheses.

    Inconsistent systems have empty solution sets and are never reported as
    equivalent, not even to each other.
    """

    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not-equivalent"
    INCONSISTENT_LEFT = "inconsistent-left"
    INCONSISTENT_RIGHT = "inconsistent-right"
    BOTH_INCONSISTENT = "both-inconsistent"


@dataclass(frozen=True, eq=False)
class LinearHypothesis:
    """A null hypothesis ``H theta = y`` with H of shape (m, d), y of length m.

    Arrays are copied and frozen at construction, so instances are immutable
    and safe to share across threads.  An all-zero H paired with a nonzero y
    is rejected: no theta can satisfy it.
    """

    h: np.ndarray
    y: np.ndarray

    def __post_init__(self) -> None:
        h = as_matrix(self.h).copy()
        y = as_vector(self.y).copy()
        if y.shape[0] != h.shape[0]:
            raise ValueError(f"y has length {y.shape[0]} but H has {h.shape[0]} rows")
        if not h.any() and y.any():
            raise ValueError("all-zero H with nonzero y has no solution")
        h.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "y", y)

    @property
    def m(self) -> int:
        """Number of constraint rows."""
        return self.h.shape[0]

    @property
    def d(self) -> int:
        """Dimension of the constrained parameter vector."""
        return self.h.shape[1]

    def augmented(self) -> np.ndarray:
        """The m x (d + 1) block matrix ``[H | y]``."""
        return np.column_stack([self.h, self.y])


class ProjectionForm(NamedTuple):
    """Projector encoding of a hypothesis: ``p theta = y`` plus an equivalence flag."""

    p: np.ndarray
    equivalent: bool
    y: np.ndarray


@dataclass(frozen=True)
class DependenceClass:
    """Rows that are pairwise scalar multiples of one representative row.

    ``members`` holds ascending row indices; ``members[0]`` is the
    representative.  ``coefficients[j]`` is the scalar with
    ``row[members[j]] == coefficients[j] * row[members[0]]``, so
    ``coefficients[0] == 1``.
    """

    members: tuple[int, ...]
    coefficients: tuple[float, ...]

    @property
    def representative(self) -> int:
        return self.members[0]

    @property
    def weight(self) -> float:
        """Row multiplier preserving quadratic row sums: sqrt of summed squared coefficients."""
        return float(np.sqrt(np.sum(np.square(self.coefficients))))


@dataclass(frozen=True)
class DependencePartition:
    """Partition of row indices into zero rows and linear-dependence classes.

    Classes are ordered by their smallest member index; together with
    ``zero_rows`` they cover every row index exactly once.
    """

    zero_rows: tuple[int, ...]
    classes: tuple[DependenceClass, ...]


def is_consistent(hyp: LinearHypothesis, tol: Tolerance | None = None) -> bool:
    """True when the system has at least one solution: rank(H) == rank([H | y])."""
    tol = tol or DEFAULT_TOLERANCE
    return rank(hyp.h, tol) == rank(hyp.augmented(), tol)


def _reduced_augmented(
    hyp: LinearHypothesis, tol: Tolerance
) -> tuple[np.ndarray, list[int], bool]:
    """RREF of [H | y] with zero rows dropped, plus pivots and a consistency flag.

    A pivot landing in the y column means no solution exists.
    """
    r, pivots = rref(hyp.augmented(), tol)
    consistent = not pivots or pivots[-1] != hyp.d
    return r[: len(pivots)], pivots, consistent


def equivalent(
    h1: LinearHypothesis, h2: LinearHypothesis, tol: Tolerance | None = None
) -> EquivalenceVerdict:
    """Decide whether two hypotheses have identical solution sets.

    The decision compares the reduced row echelon forms of the two augmented
    systems after dropping zero rows, entrywise within ``eq_tol``.
    """
    tol = tol or DEFAULT_TOLERANCE
    if h1.d != h2.d:
        raise ValueError(f"hypotheses constrain different spaces: d={h1.d} vs d={h2.d}")
    r1, p1, c1 = _reduced_augmented(h1, tol)
    r2, p2, c2 = _reduced_augmented(h2, tol)
    if not c1 and not c2:
        return EquivalenceVerdict.BOTH_INCONSISTENT
    if not c1:
        return EquivalenceVerdict.INCONSISTENT_LEFT
    if not c2:
        return EquivalenceVerdict.INCONSISTENT_RIGHT
    if p1 != p2:
        return EquivalenceVerdict.NOT_EQUIVALENT
    if np.allclose(r1, r2, rtol=tol.eq_tol, atol=tol.eq_tol):
        return EquivalenceVerdict.EQUIVALENT
    return EquivalenceVerdict.NOT_EQUIVALENT


def canonical_form(hyp: LinearHypothesis, tol: Tolerance | None = None) -> LinearHypothesis:
    """Row-echelon canonical representative of the hypothesis.

    Equivalent hypotheses share one canonical form up to ``eq_tol``, which is
    what makes it usable as a hypothesis-matrix choice for statistics that are
    not invariant under re-encoding.  The fully unconstrained hypothesis
    (all-zero H, zero y) keeps a single zero row so the result remains a
    well-formed hypothesis.
    """
    tol = tol or DEFAULT_TOLERANCE
    rows, pivots, consistent = _reduced_augmented(hyp, tol)
    if not consistent:
        raise InconsistentHypothesisError("cannot canonicalize: hypothesis has no solution")
    if not pivots:
        return LinearHypothesis(np.zeros((1, hyp.d)), np.zeros(1))
    return LinearHypothesis(rows[:, :-1], rows[:, -1])


def projection_form(hyp: LinearHypothesis, tol: Tolerance | None = None) -> ProjectionForm:
    """Express the hypothesis through the unique projector onto H's row space.

    Returns ``(p, equivalent, y)`` with ``p = HT (H HT)^+ H``.  For a zero
    right-hand side, ``p theta = 0`` always has the original solution set.
    Otherwise the right-hand side is mapped to ``HT (H HT)^+ y`` and the flag
    records whether ``p theta = y_out`` still encodes the same hypothesis,
    verified through :func:`equivalent` rather than assumed.
    """
    tol = tol or DEFAULT_TOLERANCE
    if not is_consistent(hyp, tol):
        raise InconsistentHypothesisError("no projection form: hypothesis has no solution")
    gram_inv = pinv(hyp.h @ hyp.h.T, tol)
    p = hyp.h.T @ gram_inv @ hyp.h
    if not hyp.y.any():
        return ProjectionForm(p, True, np.zeros(hyp.d))
    y_out = hyp.h.T @ gram_inv @ hyp.y
    verdict = equivalent(hyp, LinearHypothesis(p, y_out), tol)
    return ProjectionForm(p, verdict is EquivalenceVerdict.EQUIVALENT, y_out)


def dependence_classes(h, tol: Tolerance | None = None) -> DependencePartition:
    """Group matrix rows into zero rows and classes of pairwise parallel rows.

    A row counts as zero when its norm is at or below the rank cutoff.  Two
    rows share a class when their unit-normalized forms, with sign fixed so
    the first significant component is positive, agree entrywise within
    ``eq_tol``.  Each member's coefficient relative to the class
    representative (the smallest row index) is recovered by projection.
    """
    h = as_matrix(h)
    tol = tol or DEFAULT_TOLERANCE
    m, d = h.shape
    norms = np.linalg.norm(h, axis=1)
    if tol.rank_tol is not None:
        zero_cut = tol.rank_tol
    else:
        zero_cut = max(m, d) * _EPS * float(norms.max(initial=0.0))
    zero_rows: list[int] = []
    groups: list[tuple[list[int], list[float]]] = []
    units: list[np.ndarray] = []
    for i in range(m):
        if norms[i] <= zero_cut:
            zero_rows.append(i)
            continue
        u = h[i] / norms[i]
        lead = int(np.argmax(np.abs(u) > tol.eq_tol))
        if u[lead] < 0:
            u = -u
        for ref, (members, coeffs) in zip(units, groups):
            if np.max(np.abs(u - ref)) <= tol.eq_tol:
                rep = members[0]
                members.append(i)
                coeffs.append(float(h[i] @ h[rep] / norms[rep] ** 2))
                break
        else:
            units.append(u)
            groups.append(([i], [1.0]))
    return DependencePartition(
        zero_rows=tuple(zero_rows),
        classes=tuple(DependenceClass(tuple(ms), tuple(cs)) for ms, cs in groups),
    )


def reduce_for_ats(hyp: LinearHypothesis, tol: Tolerance | None = None) -> LinearHypothesis:
    """Collapse zero rows and parallel-row classes without changing the ATS.

    Each class of pairwise parallel rows is replaced by its representative row
    scaled by the square root of the summed squared class coefficients, with
    the right-hand side entry scaled identically; zero rows are dropped.  Both
    the plain and the trace-standardized ANOVA-type statistics are invariant
    under this reduction, as is the solution set.

    The output is unique for a given input matrix; two different (if
    equivalent) starting matrices may still reduce to different outputs.
    """
    tol = tol or DEFAULT_TOLERANCE
    if not is_consistent(hyp, tol):
        raise InconsistentHypothesisError("cannot reduce: hypothesis has no solution")
    partition = dependence_classes(hyp.h, tol)
    for cls in partition.classes:
        rep = cls.representative
        for idx, coeff in zip(cls.members, cls.coefficients):
            expected = coeff * hyp.y[rep]
            if abs(hyp.y[idx] - expected) > tol.eq_tol * (1.0 + abs(expected)):
                raise InconsistentHypothesisError(
                    f"rows {rep} and {idx} are parallel but their right-hand "
                    f"sides disagree; the hypothesis has no solution"
                )
    if not partition.classes:
        return LinearHypothesis(np.zeros((1, hyp.d)), np.zeros(1))
    rows = []
    rhs = []
    for cls in partition.classes:
        w = cls.weight
        rows.append(w * hyp.h[cls.representative])
        rhs.append(w * hyp.y[cls.representative])
    return LinearHypothesis(np.vstack(rows), np.array(rhs))
