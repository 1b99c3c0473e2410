"""Symplectic group cocycles ``theta: G -> g*`` evaluated on words.

A symplectic cocycle is determined by its derivative at the identity, the
Chevalley-Eilenberg cocycle ``c(X, Y) = <d_e theta(X), Y>``.  On a single
exponential it has the closed form ``theta(exp X) = phi1(ad*_X) d_e theta(X)``
with ``phi1(z) = (e^z - 1)/z``; on longer words it is obtained by folding the
cocycle identity ``theta(g1 g2) = Ad*_{g1} theta(g2) + theta(g1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from ._linalg import TOL_VERIFY, phi1_apply
from .cohomology import TwoCochain, ce_residual, solve_coboundary
from .errors import DimensionError, NotACocycleError
from .lie_core import (
    GroupWord,
    LieAlgebra,
    MatrixRep,
    bracket,
    coad_matrix,
    conform,
    exp_coAd,
    require_identity_word,
    word_Ad,
    word_coAd,
)
from .sampling import DEFAULT_SEED, VerificationReport, make_rng, random_ball, random_word


@dataclass(frozen=True, eq=False)
class SymplecticCocycle:
    """The unique symplectic cocycle on the simply connected group with ``d_e theta = dtheta``."""

    algebra: LieAlgebra
    dtheta: TwoCochain

    def derivative(self, x: Any) -> np.ndarray:
        """The covector ``d_e theta(x)``, i.e. ``c(x, .)``."""
        x = conform(self.algebra.dim, x, "x")
        return self.dtheta.matrix.T @ x


def from_ce_cocycle(L: LieAlgebra, c: TwoCochain, tol: float = TOL_VERIFY) -> SymplecticCocycle:
    if c.dim != L.dim:
        raise DimensionError(f"cochain has dimension {c.dim}, algebra has {L.dim}")
    res = ce_residual(L, c)
    if res > tol:
        raise NotACocycleError(f"not a Chevalley-Eilenberg cocycle: residual {res:.3e}", res)
    return SymplecticCocycle(L, c)


def theta_exp(s: SymplecticCocycle, x: Any) -> np.ndarray:
    """``theta(exp x) = phi1(ad*_x) d_e theta(x)``."""
    x = conform(s.algebra.dim, x, "x")
    return phi1_apply(coad_matrix(s.algebra, x), s.derivative(x))


def theta_exp_rk4(s: SymplecticCocycle, x: Any, steps: int = 400) -> np.ndarray:
    """Independent oracle for :func:`theta_exp`.

    Integrates ``u' = ad*_x u``, ``gamma' = u`` on ``[0, 1]`` with classical
    RK4 from ``u(0) = d_e theta(x)``, ``gamma(0) = 0``; then
    ``gamma(1) = theta(exp x)`` because ``u(t) = Ad*_{exp tx} d_e theta(x)``.
    No matrix exponential is involved.
    """
    x = conform(s.algebra.dim, x, "x")
    a = coad_matrix(s.algebra, x)
    n = a.shape[0]
    f_mat = np.zeros((2 * n, 2 * n))
    f_mat[:n, :n] = a
    f_mat[n:, :n] = np.eye(n)
    y = np.concatenate([s.derivative(x), np.zeros(n)])
    h = 1.0 / steps
    for _ in range(steps):
        k1 = f_mat @ y
        k2 = f_mat @ (y + 0.5 * h * k1)
        k3 = f_mat @ (y + 0.5 * h * k2)
        k4 = f_mat @ (y + h * k3)
        y = y + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    return y[n:]


def theta_word(s: SymplecticCocycle, w: GroupWord) -> np.ndarray:
    """Right fold of the cocycle identity over the letters of ``w``."""
    L = s.algebra
    if w.dim != L.dim:
        raise DimensionError(f"word letters have dimension {w.dim}, algebra has {L.dim}")
    theta = np.zeros(L.dim)
    for x in w.letters[::-1]:
        theta = theta_exp(s, x) + exp_coAd(L, x) @ theta
    return theta


def coadjoint_of_cochain(L: LieAlgebra, c: TwoCochain, w: GroupWord) -> TwoCochain:
    """``(Ad*_g c)(X, Y) = c(Ad_{g^{-1}} X, Ad_{g^{-1}} Y)``."""
    ad_inv = word_Ad(L, w.inverse())
    return TwoCochain(ad_inv.T @ c.matrix @ ad_inv)


def verify_symplectic_identity(
    s: SymplecticCocycle,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
) -> VerificationReport:
    """Check ``<theta(g), [X, Y]> = c(X, Y) - (Ad*_g c)(X, Y)`` on random data."""
    rng = make_rng(seed)
    L, c = s.algebra, s.dtheta
    worst = 0.0
    for _ in range(samples):
        w = random_word(rng, L.dim)
        x, y = random_ball(rng, L.dim), random_ball(rng, L.dim)
        lhs = theta_word(s, w) @ bracket(L, x, y)
        rhs = c(x, y) - coadjoint_of_cochain(L, c, w)(x, y)
        worst = max(worst, abs(lhs - rhs))
    return VerificationReport(worst, samples, tol)


def cocycle_identity_residual(s: SymplecticCocycle, w1: GroupWord, w2: GroupWord) -> float:
    """``|theta(w1 w2) - Ad*_{w1} theta(w2) - theta(w1)|`` in the max-norm."""
    lhs = theta_word(s, w1 * w2)
    rhs = word_coAd(s.algebra, w1) @ theta_word(s, w2) + theta_word(s, w1)
    return float(np.max(np.abs(lhs - rhs)))


def verify_cocycle_identity(
    s: SymplecticCocycle,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
) -> VerificationReport:
    rng = make_rng(seed)
    n = s.algebra.dim
    worst = 0.0
    for _ in range(samples):
        w1, w2 = random_word(rng, n), random_word(rng, n)
        worst = max(worst, cocycle_identity_residual(s, w1, w2))
    return VerificationReport(worst, samples, tol)


def trivialize(
    s: SymplecticCocycle,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
) -> np.ndarray | None:
    """Return ``mu0`` with ``theta(g) = Ad*_g mu0 - mu0``, or ``None`` if ``[theta] != 0``.

    Differentiating ``Ad*_g mu0 - mu0`` gives ``c(X, Y) = -<mu0, [X, Y]>``,
    which is ``ce_d1(mu0)``; the candidate is then confirmed on sampled words.
    """
    L = s.algebra
    mu0 = solve_coboundary(L, s.dtheta, tol)
    if mu0 is None:
        return None
    rng = make_rng(seed)
    for _ in range(samples):
        w = random_word(rng, L.dim)
        expected = word_coAd(L, w) @ mu0 - mu0
        if np.max(np.abs(theta_word(s, w) - expected)) > tol:
            return None
    return mu0


def holonomy_defect(
    s: SymplecticCocycle,
    rep: MatrixRep,
    w: GroupWord,
    tol: float = TOL_VERIFY,
) -> np.ndarray:
    """Value of ``theta`` on a word representing the identity of the represented group.

    A defect of norm above ``tol`` certifies that ``theta`` does not descend
    to a single-valued cocycle on that group.  Raises
    :class:`~liecocycle.errors.NotIdentityWordError` if ``w`` is not an
    identity word both in ``rep`` and in the adjoint representation.
    """
    require_identity_word(s.algebra, rep, w, tol)
    return theta_word(s, w)
