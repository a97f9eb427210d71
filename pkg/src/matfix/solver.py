"""Fixed-point solver for X - sum(Ai* X^-1 Ai) = Q.

The map F(Y) = Q + sum(Ai* Y^-1 Ai) has a unique positive definite fixed
point for any positive definite Q, and the iteration X_k = F(X_{k-1})
converges from every positive definite start.  Convergence here is declared
on the equation residual ||F(X_k) - X_k|| in the spectral norm, which is the
quantity the returned report carries per iteration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    NotHermitian,
    NotPositiveDefinite,
    SingularIterate,
    ValidationError,
)

Array = np.ndarray


@dataclass(frozen=True)
class EquationInstance:
    """Coefficient matrices A_1..A_m and right-hand side Q.

    Construction only coerces to complex arrays; structural invariants are
    checked by :func:`validate` so that invalid data can still be represented
    (and reported on).
    """

    A: tuple[Array, ...]
    Q: Array

    def __init__(self, A, Q):
        object.__setattr__(
            self,
            "A",
            tuple(linalg.as_matrix(Ai, name=f"A[{i}]") for i, Ai in enumerate(A)),
        )
        object.__setattr__(self, "Q", linalg.as_matrix(Q, name="Q"))

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return self.Q.shape[0]


@dataclass(frozen=True)
class SolveSettings:
    """Iteration controls.

    ``x0`` selects the starting matrix: ``None`` starts from Q, a scalar c
    starts from c*I, and an explicit matrix is used as given.
    """

    x0: float | Array | None = None
    tol: float = 1e-10
    max_iter: int = 1000

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


@dataclass(frozen=True)
class SolveReport:
    X: Array
    iterations: int
    residual_norm: float
    converged: bool
    history: tuple[float, ...] = field(default_factory=tuple)


def validate(instance: EquationInstance) -> None:
    """Check all structural invariants, reporting every violation at once.

    Raises the specific error when exactly one invariant fails, or a
    :class:`ValidationError` whose ``violations`` lists all failures.
    """
    violations: list[ValidationError] = []
    n = instance.Q.shape[0]
    if instance.Q.shape[0] != instance.Q.shape[1]:
        violations.append(DimensionMismatch(f"Q must be square, got {instance.Q.shape}"))
    if instance.m < 1:
        violations.append(DimensionMismatch("need at least one coefficient matrix"))
    for i, Ai in enumerate(instance.A):
        if Ai.shape != (n, n):
            violations.append(
                DimensionMismatch(f"A[{i}] has shape {Ai.shape}, expected ({n}, {n})")
            )
    if instance.Q.shape[0] == instance.Q.shape[1]:
        if not linalg.is_exactly_hermitian(instance.Q):
            violations.append(NotHermitian("Q is not Hermitian"))
        elif not linalg.is_positive_definite(instance.Q):
            violations.append(NotPositiveDefinite("Q is not positive definite"))
    if not violations:
        return
    if len(violations) == 1:
        raise violations[0]
    raise ValidationError(
        "; ".join(str(v) for v in violations), violations=tuple(violations)
    )


def _initial_iterate(instance: EquationInstance, settings: SolveSettings) -> Array:
    if settings.x0 is None:
        return instance.Q.copy()
    if np.isscalar(settings.x0):
        return complex(settings.x0).real * np.eye(instance.n, dtype=complex)
    X0 = linalg.as_matrix(settings.x0, name="x0")
    if X0.shape != (instance.n, instance.n):
        raise DimensionMismatch(f"x0 has shape {X0.shape}, expected ({instance.n}, {instance.n})")
    return X0


def _apply_map(instance: EquationInstance, X: Array) -> Array:
    """F(X) = Q + sum(Ai* X^-1 Ai)."""
    out = instance.Q.astype(complex).copy()
    for Ai in instance.A:
        out = out + Ai.conj().T @ np.linalg.solve(X, Ai)
    return out


def solve(
    instance: EquationInstance,
    settings: SolveSettings | None = None,
    *,
    allow_nonhermitian: bool = False,
) -> SolveReport:
    """Run the fixed-point iteration until the equation residual drops below tol.

    Each Hermitian iterate is re-symmetrized through
    :func:`linalg.hermitian_part` so conjugate symmetry is structural.  With
    ``allow_nonhermitian`` the validation, re-symmetrization and positive
    definiteness guards are all skipped and the raw iteration is applied to
    the matrices exactly as given.

    Returns a report with ``converged=False`` (rather than raising) when the
    iteration cap is hit; raises :class:`SingularIterate` if an iterate stops
    being positive definite, which for valid input signals numerical
    breakdown rather than a property of the equation.
    """
    if settings is None:
        settings = SolveSettings()
    if not allow_nonhermitian:
        validate(instance)

    X = _initial_iterate(instance, settings)
    if not allow_nonhermitian:
        X = linalg.hermitian_part(X)
        if not linalg.is_positive_definite(X):
            raise NotPositiveDefinite("starting matrix X0 must be positive definite")

    try:
        FX = _apply_map(instance, X)
    except np.linalg.LinAlgError as exc:
        raise SingularIterate(f"starting matrix is singular: {exc}") from exc

    history: list[float] = []
    for k in range(1, settings.max_iter + 1):
        X = linalg.hermitian_part(FX) if not allow_nonhermitian else FX
        if not allow_nonhermitian and not linalg.is_positive_definite(X):
            raise SingularIterate(f"iterate {k} lost positive definiteness")
        try:
            FX = _apply_map(instance, X)
        except np.linalg.LinAlgError as exc:
            raise SingularIterate(f"iterate {k} is singular: {exc}") from exc
        res = linalg.spectral_norm(FX - X)
        history.append(res)
        if res < settings.tol:
            return SolveReport(
                X=X,
                iterations=k,
                residual_norm=res,
                converged=True,
                history=tuple(history),
            )
    return SolveReport(
        X=X,
        iterations=settings.max_iter,
        residual_norm=history[-1],
        converged=False,
        history=tuple(history),
    )


def residual(instance: EquationInstance, X: Array) -> tuple[Array, float]:
    """Residual R(X) = Q + sum(Ai* X^-1 Ai) - X and its spectral norm.

    R is Hermitian by construction for Hermitian X; it is re-symmetrized to
    keep that structural.  X must be positive definite.
    """
    X = linalg.as_matrix(X, name="X")
    H = linalg.hermitian_part(X)
    if not linalg.is_positive_definite(H):
        raise NotPositiveDefinite("residual requires a positive definite X")
    R = linalg.hermitian_part(_apply_map(instance, H) - H)
    return R, linalg.spectral_norm(R)


def residual_raw(instance: EquationInstance, X: Array) -> tuple[Array, float]:
    """Residual without Hermitian/positive-definite guards (raw-mode runs)."""
    X = np.asarray(X, dtype=complex)
    R = _apply_map(instance, X) - X
    return R, linalg.spectral_norm(R)


def scalar_solution(a: list[complex] | tuple[complex, ...], q: float) -> float:
    """Closed-form 1x1 solution x = (q + sqrt(q^2 + 4*sum|a_i|^2))/2."""
    s = sum(abs(ai) ** 2 for ai in a)
    return (q + np.sqrt(q * q + 4.0 * s)) / 2.0
