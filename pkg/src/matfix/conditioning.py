"""Rice-style condition numbers of the solution, complex and real case.

The first-order map from data perturbations to the solution perturbation is
assembled as one real block row whose spectral norm, scaled by the weight
xi, is the condition number:

* complex case: blocks (rho S_c, eta_1 U_1, ..., eta_m U_m) built from the
  real/imaginary split of L^-1 and L^-1 composed with the P_i ingredients;
* real case: blocks (rho S_r, eta_1 U_1, ..., eta_m U_m) with
  S_r = (I + sum(kron(C_i, C_i)))^-1 and U_i = S_r(kron(I, C_i) + kron(C_i, I) Pi)
  for C_i = A_i^T X^-1.

Absolute mode uses unit weights; relative mode uses Frobenius norms of the
data (eta_i = ||A_i||_F, rho = ||Q||_F, xi = ||X||_F).

``cond_fd_oracle`` is an independent Monte-Carlo lower estimate obtained
from actual perturbed solves; it never consults the block formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotReal
from .operators import OperatorBundle
from .solver import EquationInstance, SolveSettings, solve

Array = np.ndarray


@dataclass(frozen=True)
class ConditionReport:
    mode: str
    case: str
    value: float
    xi: float
    rho: float
    etas: tuple[float, ...]
    assembled: Array


def _weights(instance: EquationInstance, X: Array, mode: str) -> tuple[float, float, tuple[float, ...]]:
    if mode == "absolute":
        return 1.0, 1.0, tuple(1.0 for _ in instance.A)
    if mode == "relative":
        xi = linalg.frobenius_norm(X)
        rho = linalg.frobenius_norm(instance.Q)
        etas = tuple(linalg.frobenius_norm(Ai) for Ai in instance.A)
        return xi, rho, etas
    raise ValueError(f"mode must be 'absolute' or 'relative', got {mode!r}")


def cond_complex(
    instance: EquationInstance,
    X: Array,
    bundle: OperatorBundle,
    mode: str = "relative",
) -> ConditionReport:
    """Condition number from the complex-case block construction.

    The 2n^2 x 2n^2(m+1) block row acts on the stacked real/imaginary parts
    of (vec dQ, vec dA_1, ..., vec dA_m); its spectral norm divided by xi is
    the condition number.
    """
    n = instance.n
    xi, rho, etas = _weights(instance, X, mode)
    Linv = linalg.inverse(bundle.L_rep)
    P = linalg.vec_permutation(n)
    eye = np.eye(n)

    S, Sig = Linv.real, Linv.imag
    Sc = np.block([[S, -Sig], [Sig, S]])
    blocks = [rho * Sc]
    for i, Bi in enumerate(bundle.B):
        M1 = Linv @ linalg.kron(eye, Bi.conj().T)
        M2 = Linv @ linalg.kron(Bi.T, eye) @ P
        U1, O1 = M1.real, M1.imag
        U2, O2 = M2.real, M2.imag
        Ui = np.block([[U1 + U2, O2 - O1], [O1 + O2, U1 - U2]])
        blocks.append(etas[i] * Ui)
    assembled = np.hstack(blocks)
    return ConditionReport(
        mode=mode,
        case="complex",
        value=linalg.spectral_norm(assembled) / xi,
        xi=xi,
        rho=rho,
        etas=etas,
        assembled=assembled,
    )


def _require_real(M: Array, what: str, tol: float) -> Array:
    M = np.asarray(M)
    if np.iscomplexobj(M):
        scale = max(float(np.abs(M).max()), 1.0)
        if float(np.abs(M.imag).max()) > tol * scale:
            raise NotReal(f"{what} has imaginary part beyond tolerance {tol}")
        return np.ascontiguousarray(M.real)
    return np.asarray(M, dtype=float)


def cond_real(
    instance: EquationInstance,
    X: Array,
    mode: str = "relative",
    imag_tol: float = 1e-12,
) -> ConditionReport:
    """Condition number for real data via the real-case block construction.

    The formula is applied with C_i = A_i^T X^-1 exactly as written, so it
    also accepts a nonsymmetric real X from a raw-mode solve.
    """
    n = instance.n
    Xr = _require_real(X, "X", imag_tol)
    _require_real(instance.Q, "Q", imag_tol)
    As = [_require_real(Ai, f"A[{i}]", imag_tol) for i, Ai in enumerate(instance.A)]

    xi, rho, etas = _weights(instance, Xr, mode)
    Xinv = linalg.inverse(Xr).real
    P = linalg.vec_permutation(n)
    eye = np.eye(n)

    Cs = [Ai.T @ Xinv for Ai in As]
    Lr = np.eye(n * n) + sum(linalg.kron(C, C) for C in Cs)
    Sr = linalg.inverse(Lr).real
    blocks = [rho * Sr]
    for i, C in enumerate(Cs):
        Ui = Sr @ (linalg.kron(eye, C) + linalg.kron(C, eye) @ P)
        blocks.append(etas[i] * Ui)
    assembled = np.hstack(blocks)
    return ConditionReport(
        mode=mode,
        case="real",
        value=linalg.spectral_norm(assembled) / xi,
        xi=xi,
        rho=rho,
        etas=etas,
        assembled=assembled,
    )


def _is_real_instance(instance: EquationInstance) -> bool:
    return float(np.abs(instance.Q.imag).max(initial=0.0)) == 0.0 and all(
        float(np.abs(Ai.imag).max(initial=0.0)) == 0.0 for Ai in instance.A
    )


def _random_direction(
    rng: np.random.Generator, instance: EquationInstance, kind: int, real_case: bool
) -> tuple[list[Array], Array]:
    """Directions cycle through: full random, pure dQ, pure single dA_i.

    Pure-block directions matter: for near-degenerate maxima (all A_i = 0,
    say) a uniformly random direction wastes most of its weight on blocks the
    solution does not react to, and the Monte-Carlo maximum would stall far
    below the condition number.
    """
    n, m = instance.n, instance.m

    def rmat() -> Array:
        G = rng.standard_normal((n, n))
        if not real_case:
            G = G + 1j * rng.standard_normal((n, n))
        return G

    dA = [np.zeros((n, n), dtype=float if real_case else complex) for _ in range(m)]
    H = np.zeros((n, n), dtype=float if real_case else complex)
    if kind == 0:
        for i in range(m):
            dA[i] = rmat()
        H = rmat()
    elif kind == 1:
        H = rmat()
    else:
        dA[(kind - 2) % m] = rmat()
    if real_case:
        H = (H + H.T) / 2.0
    else:
        H = linalg.hermitian_part(H)
    return dA, H


def cond_fd_oracle(
    instance: EquationInstance,
    X: Array,
    mode: str = "relative",
    step: float = 1e-6,
    trials: int = 100,
    *,
    seed: int = 0,
    case: str | None = None,
    allow_nonhermitian: bool = False,
    solve_tol: float = 1e-12,
) -> float:
    """Monte-Carlo lower estimate of the condition number by finite differences.

    Each trial draws a deterministic direction (dA_1..dA_m, dQ) of unit
    weighted Frobenius norm, re-solves the perturbed equation at steps
    ``step`` and ``step/2``, and Richardson-extrapolates the two quotients
    ||dX||_F/(xi * delta) to remove the O(step) bias.  The maximum over
    trials approaches the condition number from below as trials grow.
    """
    X = np.asarray(X, dtype=complex)
    xi, rho, etas = _weights(instance, X, mode)
    real_case = case == "real" if case is not None else _is_real_instance(instance)
    settings = SolveSettings(x0=X if allow_nonhermitian else linalg.hermitian_part(X),
                             tol=solve_tol, max_iter=5000)

    best = 0.0
    for t in range(trials):
        rng = np.random.default_rng((seed, t))
        dA, H = _random_direction(rng, instance, t % (instance.m + 2), real_case)
        w = np.sqrt(
            sum(linalg.frobenius_norm(dA[i]) ** 2 / etas[i] ** 2 for i in range(instance.m))
            + linalg.frobenius_norm(H) ** 2 / rho ** 2
        )
        if w == 0.0:
            continue

        def quotient(delta: float) -> float:
            scale = delta / w
            pert = EquationInstance(
                A=[instance.A[i] + scale * dA[i] for i in range(instance.m)],
                Q=instance.Q + scale * H,
            )
            rep = solve(pert, settings, allow_nonhermitian=allow_nonhermitian)
            return linalg.frobenius_norm(rep.X - X) / (xi * delta)

        e1 = quotient(step)
        e2 = quotient(step / 2.0)
        best = max(best, 2.0 * e2 - e1)
    return best
