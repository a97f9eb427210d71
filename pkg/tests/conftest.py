import numpy as np
import pytest

from matfix import EquationInstance, SolveSettings, solve


def make_random_instance(rng, n=None, m=None, coeff_scale=0.5, complex_data=True):
    """Random instance with lambda_min(Q) >= 1 and sum||A_i||^2 < coeff_scale^2.

    Keeping the coefficients comfortably inside beta^2 makes every bound
    (xi1, xi2, xi3, backward) applicable, which is what the property sweeps
    need; scale up coeff_scale to probe the infeasible regimes.
    """
    if n is None:
        n = int(rng.integers(2, 7))
    if m is None:
        m = int(rng.integers(1, 4))
    G = rng.standard_normal((n, n))
    if complex_data:
        G = G + 1j * rng.standard_normal((n, n))
    Q = G @ G.conj().T + n * np.eye(n)
    Q = (Q + Q.conj().T) / 2
    # normalize so lambda_min(Q) = 1, keeping beta >= 1
    lam_min = np.linalg.eigvalsh(Q)[0]
    Q = Q / lam_min
    A = []
    for _ in range(m):
        Gi = rng.standard_normal((n, n))
        if complex_data:
            Gi = Gi + 1j * rng.standard_normal((n, n))
        Gi = Gi / np.linalg.norm(Gi, 2)
        A.append(coeff_scale / np.sqrt(m) * Gi)
    return EquationInstance(A=A, Q=Q)


def solve_tight(instance, tol=1e-13):
    rep = solve(instance, SolveSettings(tol=tol, max_iter=5000))
    assert rep.converged
    return rep.X


@pytest.fixture
def rng():
    return np.random.default_rng(20240801)


@pytest.fixture
def random_instance():
    return make_random_instance
