"""Sensitivity operators at a solved instance.

With B_i = X^-1 A_i, the linear operator L maps W to W + sum(B_i* W B_i);
its n^2 x n^2 matrix representation under column-major vec is

    L_rep = I + sum(kron(B_i^T, B_i*)).

The operators P_i map Z to L^-1(B_i* Z + Z* B_i); their representations are

    P_i_rep = L_rep^-1 (kron(I, B_i*) + kron(B_i^T, I) Pi),

with Pi the vec-permutation.  The scalar surrogates bundled here are the
ingredients of the operator-based perturbation bound and the condition
numbers:

* ``l``        reciprocal of the spectral norm of L_rep.  This lower-bounds
               the true inverse-operator norm surrogate ||L^-1||^-1 in any
               submultiplicative norm (||L|| * ||L^-1|| >= 1), so using it
               keeps the downstream bound valid, and it reproduces the
               reference feasibility values.  The smallest singular value of
               L_rep would not: it can overshoot the Hermitian-restricted
               operator norm.
* ``n_ops[i]`` largest singular value of P_i_rep.
* ``theta_is`` spectral norms of the B_i; ``theta`` is the sum of squares.
* ``zeta``     spectral norm of X^-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import SingularOperator
from .solver import EquationInstance

Array = np.ndarray


@dataclass(frozen=True)
class OperatorBundle:
    B: tuple[Array, ...]
    L_rep: Array
    Pi_reps: tuple[Array, ...]
    l: float
    n_ops: tuple[float, ...]
    theta_is: tuple[float, ...]
    theta: float
    zeta: float
    norm_kind: str = field(default="reciprocal-spectral(L), spectral(P_i) on vec representations")

    @property
    def m(self) -> int:
        return len(self.B)

    @property
    def n(self) -> int:
        return self.B[0].shape[0] if self.B else int(np.sqrt(self.L_rep.shape[0]))


def l_representation(B: tuple[Array, ...], n: int) -> Array:
    """I + sum(kron(B_i^T, B_i*)); acts on vec(W) as vec(W + sum B_i* W B_i)."""
    L = np.eye(n * n, dtype=complex)
    for Bi in B:
        L = L + linalg.kron(Bi.T, Bi.conj().T)
    return L


def build_bundle(instance: EquationInstance, X: Array) -> OperatorBundle:
    """Assemble operator representations and scalar surrogates at the solution X.

    X is expected to be the (near-)converged positive definite solution; a
    singular L representation signals that it is not, and raises
    :class:`SingularOperator`.
    """
    X = np.asarray(X, dtype=complex)
    n = X.shape[0]
    Xinv = linalg.inverse(X)
    B = tuple(Xinv @ Ai for Ai in instance.A)

    L_rep = l_representation(B, n)
    sv = np.linalg.svd(L_rep, compute_uv=False)
    s_max, s_min = float(sv[0]), float(sv[-1])
    if s_min <= n * n * np.finfo(float).eps * s_max:
        raise SingularOperator(
            f"L representation singular to working precision (s_min={s_min:.3e}); "
            "X does not look like a valid solution"
        )
    # trace(L_rep) >= n^2 forces ||L_rep|| >= 1, so l <= 1 <= 1 + theta.
    l = 1.0 / s_max

    L_inv = linalg.inverse(L_rep)
    P = linalg.vec_permutation(n)
    eye = np.eye(n)
    Pi_reps = tuple(
        L_inv @ (linalg.kron(eye, Bi.conj().T) + linalg.kron(Bi.T, eye) @ P) for Bi in B
    )
    n_ops = tuple(linalg.spectral_norm(Pi) for Pi in Pi_reps)
    theta_is = tuple(linalg.spectral_norm(Bi) for Bi in B)
    theta = float(sum(t * t for t in theta_is))
    zeta = linalg.spectral_norm(Xinv)
    return OperatorBundle(
        B=B,
        L_rep=L_rep,
        Pi_reps=Pi_reps,
        l=l,
        n_ops=n_ops,
        theta_is=theta_is,
        theta=theta,
        zeta=zeta,
    )


def apply_l(bundle: OperatorBundle, W: Array) -> Array:
    """L acting directly on a matrix: W + sum(B_i* W B_i)."""
    out = np.asarray(W, dtype=complex).copy()
    for Bi in bundle.B:
        out = out + Bi.conj().T @ W @ Bi
    return out


def solve_l(bundle: OperatorBundle, RHS: Array) -> Array:
    """Solve L(V) = RHS through the vec representation."""
    n = RHS.shape[0]
    v = np.linalg.solve(bundle.L_rep, linalg.vec(RHS))
    return linalg.unvec(v, n)
