"""Dense complex matrix primitives: norms, eigen extremes, Kronecker/vec machinery.

Conventions fixed project-wide:

* ``vec`` stacks columns (column-major), so vec(A E B) = (B^T kron A) vec(E).
* The spectral norm is the largest singular value; the Frobenius norm is the
  entrywise 2-norm.
* Hermitian matrices are kept exactly conjugate-symmetric by mirroring the
  lower triangle (see :func:`hermitian_part`), never by trusting rounding.
"""

from __future__ import annotations

import numpy as np

from .errors import EigenSolverError, SingularMatrix

Array = np.ndarray

_EPS = float(np.finfo(float).eps)


def as_matrix(a, *, name: str = "matrix") -> Array:
    """Coerce input to a 2-D complex128 array and reject non-finite entries."""
    M = np.asarray(a, dtype=complex)
    if M.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got ndim={M.ndim}")
    if not np.isfinite(M).all():
        raise ValueError(f"{name} contains non-finite entries")
    return M


def spectral_norm(M: Array) -> float:
    """Largest singular value of M."""
    M = np.asarray(M)
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, 2))


def frobenius_norm(M: Array) -> float:
    """Square root of the sum of squared entry moduli."""
    return float(np.linalg.norm(np.asarray(M), "fro"))


def eig_extremes(H: Array) -> tuple[float, float]:
    """Smallest and largest eigenvalue of a Hermitian matrix.

    Raises :class:`EigenSolverError` if the dense symmetric eigensolver does
    not converge (rare; surfaced as a diagnostic rather than a crash).
    """
    try:
        w = np.linalg.eigvalsh(np.asarray(H))
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"eigensolver failed: {exc}") from exc
    return float(w[0]), float(w[-1])


def default_pd_tolerance(H: Array) -> float:
    """Default positive-definiteness tolerance n*eps*lambda_max (floored at 0)."""
    n = np.asarray(H).shape[0]
    if n == 0:
        return 0.0
    _, lam_max = eig_extremes(H)
    return n * _EPS * max(lam_max, 0.0)


def is_positive_definite(H: Array, tol: float | None = None) -> bool:
    """True iff lambda_min(H) > tol.

    ``tol`` defaults to n*eps*lambda_max(H).  Eigenvalues are used rather
    than a Cholesky attempt so the same eigen data serves the scalar bound
    sequences downstream.
    """
    H = np.asarray(H)
    if H.size == 0:
        return True
    if tol is None:
        tol = default_pd_tolerance(H)
    lam_min, _ = eig_extremes(H)
    return lam_min > tol


def kron(A: Array, B: Array) -> Array:
    """Kronecker product with (i,j) block a_ij * B."""
    return np.kron(np.asarray(A), np.asarray(B))


def vec(M: Array) -> Array:
    """Stack the columns of M into one vector (column-major)."""
    return np.asarray(M).reshape(-1, order="F")


def unvec(v: Array, rows: int, cols: int | None = None) -> Array:
    """Inverse of :func:`vec` for a rows x cols matrix."""
    if cols is None:
        cols = rows
    return np.asarray(v).reshape((rows, cols), order="F")


def vec_permutation(n: int) -> Array:
    """The n^2 x n^2 permutation P with vec(E^T) = P vec(E) for every n x n E.

    P is real, orthogonal, symmetric, and an involution.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    P = np.zeros((n * n, n * n))
    for r in range(n):
        for c in range(n):
            P[c * n + r, r * n + c] = 1.0
    return P


def hermitian_part(M: Array) -> Array:
    """(M + M*)/2 with exact conjugate symmetry enforced structurally.

    The lower triangle of the average is mirrored into the upper one and the
    diagonal imaginary part is zeroed, so the result is Hermitian by storage,
    not merely up to rounding.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("hermitian_part requires a square matrix")
    H = (M + M.conj().T) / 2.0
    low = np.tril(H, -1)
    out = low + low.conj().T + np.diag(H.diagonal().real)
    return out


def is_exactly_hermitian(M: Array) -> bool:
    """Exact entrywise check M == M* (no tolerance)."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return False
    return bool(np.array_equal(M, M.conj().T))


def inverse(M: Array) -> Array:
    """Matrix inverse with a singularity diagnostic.

    Raises :class:`SingularMatrix` carrying a 1-norm condition estimate when
    M is singular to working precision.
    """
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    try:
        Minv = np.linalg.inv(M)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrix(f"matrix of order {n} is exactly singular") from exc
    # cheap 1-norm condition estimate; SVD would be overkill per call
    cond1 = float(np.linalg.norm(M, 1) * np.linalg.norm(Minv, 1))
    if not np.isfinite(Minv).all() or cond1 > 0.1 / _EPS:
        raise SingularMatrix(
            f"matrix of order {n} is singular to working precision "
            f"(cond_1 ~ {cond1:.3e})",
            condition_estimate=cond1,
        )
    return Minv
