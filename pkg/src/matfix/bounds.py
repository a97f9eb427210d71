"""A priori enclosures for the positive definite solution.

Three nested containment statements are computed:

* the coarse matrix interval [Q, Q + sum(Ai* Q^-1 Ai)],
* the scalar interval [beta*I, alpha*I] from a coupled scalar fixed point,
* a refined matrix interval [Q + (1/alpha) sum(Ai* Ai), Q + (1/beta) sum(Ai* Ai)]
  that always sits inside the scalar one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import MaxIterationsExceeded
from .solver import EquationInstance

Array = np.ndarray


@dataclass(frozen=True)
class ScalarBounds:
    """Fixed-point scalars with lambda_min(Q) <= beta <= alpha."""

    alpha: float
    beta: float
    iterations: int
    converged: bool


@dataclass(frozen=True)
class MatrixInterval:
    """Loewner interval: every admissible X satisfies lower <= X <= upper."""

    lower: Array
    upper: Array


def _singular_value_extremes(A: Array) -> tuple[float, float]:
    """(smallest, largest) singular value; these square to the eigenvalue
    extremes of A*A without forming the square."""
    s = np.linalg.svd(np.asarray(A), compute_uv=False)
    if s.size == 0:
        return 0.0, 0.0
    return float(s[-1]), float(s[0])


def scalar_bounds(
    instance: EquationInstance, tol: float = 1e-14, max_iter: int = 10000
) -> ScalarBounds:
    """Iterate the coupled scalar recurrences to their fixed point (alpha, beta).

    beta_0 = lambda_min(Q),
    alpha_k = lambda_max(Q) + sum(lambda_max(Ai*Ai)) / beta_k,
    beta_{k+1} = lambda_min(Q) + sum(lambda_min(Ai*Ai)) / alpha_k,

    stopping when |d alpha| + |d beta| < tol (or when the doubles stop
    changing at all, which covers large-magnitude data where tol is below
    resolution).  The alpha sequence is non-increasing, beta non-decreasing.
    """
    lam_min_q, lam_max_q = linalg.eig_extremes(linalg.hermitian_part(instance.Q))
    s_max = 0.0
    s_min = 0.0
    for Ai in instance.A:
        lo, hi = _singular_value_extremes(Ai)
        s_max += hi * hi
        s_min += lo * lo

    beta = lam_min_q
    alpha_prev = np.inf
    for k in range(1, max_iter + 1):
        alpha = lam_max_q + s_max / beta
        beta_next = lam_min_q + s_min / alpha
        delta = abs(alpha - alpha_prev) + abs(beta_next - beta)
        stalled = alpha == alpha_prev and beta_next == beta
        alpha_prev, beta = alpha, beta_next
        if delta < tol or stalled:
            return ScalarBounds(alpha=float(alpha), beta=float(beta), iterations=k, converged=True)
    raise MaxIterationsExceeded(
        f"scalar bounds did not meet tol={tol} within {max_iter} iterations "
        f"(alpha={alpha_prev}, beta={beta})"
    )


def coarse_interval(instance: EquationInstance) -> MatrixInterval:
    """[Q, Q + sum(Ai* Q^-1 Ai)]: every positive definite solution lies here."""
    Q = linalg.hermitian_part(instance.Q)
    Qinv = linalg.inverse(Q)
    upper = Q.astype(complex).copy()
    for Ai in instance.A:
        upper = upper + Ai.conj().T @ Qinv @ Ai
    return MatrixInterval(lower=Q, upper=linalg.hermitian_part(upper))


def refined_interval(instance: EquationInstance, sb: ScalarBounds) -> MatrixInterval:
    """[Q + (1/alpha) sum(Ai*Ai), Q + (1/beta) sum(Ai*Ai)], inside [beta I, alpha I]."""
    if not sb.converged:
        raise ValueError("refined_interval requires converged scalar bounds")
    Q = linalg.hermitian_part(instance.Q)
    gram = np.zeros_like(Q)
    for Ai in instance.A:
        gram = gram + Ai.conj().T @ Ai
    lower = linalg.hermitian_part(Q + gram / sb.alpha)
    upper = linalg.hermitian_part(Q + gram / sb.beta)
    return MatrixInterval(lower=lower, upper=upper)


def scalar_interval(instance: EquationInstance, sb: ScalarBounds) -> MatrixInterval:
    """[beta I, alpha I] as a MatrixInterval for uniform membership checks."""
    n = instance.n
    return MatrixInterval(lower=sb.beta * np.eye(n), upper=sb.alpha * np.eye(n))


def default_membership_tolerance(interval: MatrixInterval) -> float:
    n = np.asarray(interval.upper).shape[0]
    return n * float(np.finfo(float).eps) * linalg.spectral_norm(interval.upper)


def membership(X: Array, interval: MatrixInterval, tol: float | None = None) -> bool:
    """True iff X - lower and upper - X are PSD up to eigenvalue slack -tol.

    The default slack n*eps*||upper|| suits exact-arithmetic checks; callers
    holding an iteratively computed X should pass a slack tied to the solve
    residual instead.
    """
    X = np.asarray(X)
    if X.shape != np.asarray(interval.lower).shape:
        raise ValueError("dimension mismatch between X and interval")
    if tol is None:
        tol = default_membership_tolerance(interval)
    lo_min, _ = linalg.eig_extremes(linalg.hermitian_part(X - interval.lower))
    hi_min, _ = linalg.eig_extremes(linalg.hermitian_part(interval.upper - X))
    return lo_min >= -tol and hi_min >= -tol
