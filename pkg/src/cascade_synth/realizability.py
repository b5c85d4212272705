"""Pure-cascade realizability: the triangularity test and the stage split.

A system is realizable as a pure cascade of one-mode stages exactly when its
drift matrix A = 2 Theta (R + Im(K^dag K)) is lower 2x2-block triangular on
the (q1, p1, ..., qn, pn) ordering; the construction then reads the stages
straight off the column blocks of K and the diagonal blocks of R.
"""

from __future__ import annotations

from dataclasses import dataclass

from .composition import CascadeChain, one_mode_stages
from .errors import NotCascadeRealizable
from .model import DEFAULT_TOL, SlhSystem, drift_matrix, max_abs


@dataclass(frozen=True)
class TriangularityReport:
    """Outcome of the lower 2x2-block-triangularity test on the drift matrix.

    max_upper_residual is the max-norm over the 2x2 blocks strictly above the
    block diagonal; the verdict is relative, is_triangular iff
    max_upper_residual <= tolerance_used * scale with scale = max(1, |A|_max).
    """

    is_triangular: bool
    max_upper_residual: float
    tolerance_used: float
    scale: float


def is_cascade_realizable(sys: SlhSystem, tol=DEFAULT_TOL) -> TriangularityReport:
    """Test whether the drift matrix is lower 2x2-block triangular."""
    a = drift_matrix(sys)
    residual = 0.0
    for j in range(sys.n):
        for k in range(j + 1, sys.n):
            residual = max(residual, max_abs(a[2 * j : 2 * j + 2, 2 * k : 2 * k + 2]))
    scale = max(1.0, max_abs(a))
    return TriangularityReport(
        is_triangular=residual <= tol * scale,
        max_upper_residual=residual,
        tolerance_used=tol,
        scale=scale,
    )


def decompose_cascade(sys: SlhSystem, tol=DEFAULT_TOL) -> CascadeChain:
    """Split a cascade-realizable system into its chain of one-mode stages.

    Stage 0 is (S, K_1, R_11); stage j > 0 is (I, K_{j+1}, R_{j+1,j+1}) with
    K_j the j-th m x 2 column block of K and R_jj the j-th diagonal 2x2 block
    of R.  Cascading the result reproduces (S, K, R).  Raises
    NotCascadeRealizable, with the failing report attached, when the drift
    matrix is not lower block triangular at the given tolerance.
    """
    if sys.n == 0:
        raise ValueError("cannot decompose a system with no modes")
    report = is_cascade_realizable(sys, tol)
    if not report.is_triangular:
        raise NotCascadeRealizable(report)
    return CascadeChain(stages=one_mode_stages(sys))
