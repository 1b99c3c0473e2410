"""The left-invariant presymplectic form on G and the self-action potentials.

``Omega`` is the closed left-invariant 2-form with ``Omega(lambda_X,
lambda_Y) = c(X, Y)``.  Right-invariant fields are realised on words by
left multiplication, ``rho_Y`` flowing ``g -> exp(tY) g``, so that
``Omega(rho_X, rho_Y)(g) = c(Ad_{g^-1} X, Ad_{g^-1} Y)``.  The candidate
potentials are ``Phi_X(g) = -<theta(g), X>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from ._linalg import TOL_FD, TOL_VERIFY
from .cocycle import SymplecticCocycle, coadjoint_of_cochain, theta_word
from .cohomology import TwoCochain, ce_residual, solve_coboundary
from .errors import CocycleMismatchError, DimensionError, NotACocycleError
from .lie_core import GroupWord, LieAlgebra, bracket, conform, word_Ad
from .sampling import DEFAULT_SEED, VerificationReport, make_rng, random_ball, random_word

DEFAULT_STEP = 1e-4


@dataclass(frozen=True, eq=False)
class LeftInvariantTwoForm:
    algebra: LieAlgebra
    c: TwoCochain
    tol: float = TOL_VERIFY

    def __post_init__(self):
        if self.c.dim != self.algebra.dim:
            raise DimensionError(f"cochain has dimension {self.c.dim}, algebra has {self.algebra.dim}")
        # closedness of Omega is the cocycle condition on c
        res = ce_residual(self.algebra, self.c)
        if res > self.tol:
            raise NotACocycleError(f"left-invariant form is not closed: CE residual {res:.3e}", res)


def omega_left(F: LeftInvariantTwoForm, x: Any, y: Any) -> float:
    return F.c(x, y)


def omega_right(F: LeftInvariantTwoForm, w: GroupWord, x: Any, y: Any) -> float:
    """``Omega(rho_X, rho_Y)`` at the endpoint of ``w``."""
    ad_inv = word_Ad(F.algebra, w.inverse())
    x = conform(F.algebra.dim, x, "x")
    y = conform(F.algebra.dim, y, "y")
    return omega_left(F, ad_inv @ x, ad_inv @ y)


def phi_potential(s: SymplecticCocycle, x: Any, w: GroupWord) -> float:
    x = conform(s.algebra.dim, x, "x")
    return -float(theta_word(s, w) @ x)


def lie_derivative_fd(
    s: SymplecticCocycle,
    x: Any,
    y: Any,
    w: GroupWord,
    step: float = DEFAULT_STEP,
    richardson: bool = False,
) -> float:
    """Central difference of ``Phi_X`` along ``rho_Y`` at ``w``.

    With ``richardson=True`` the steps ``h`` and ``h/2`` are combined into a
    fourth-order estimate.
    """
    y = conform(s.algebra.dim, y, "y")

    def central(h: float) -> float:
        return (phi_potential(s, x, w.prepend(h * y)) - phi_potential(s, x, w.prepend(-h * y))) / (2 * h)

    d = central(step)
    if richardson:
        return (4.0 * central(step / 2) - d) / 3.0
    return d


def _check_form_match(F: LeftInvariantTwoForm, s: SymplecticCocycle, tol: float) -> None:
    if s.algebra.dim != F.algebra.dim:
        raise DimensionError(f"cocycle dimension {s.algebra.dim} != form dimension {F.algebra.dim}")
    res = float(np.max(np.abs(s.dtheta.matrix - F.c.matrix), initial=0.0))
    if res > tol:
        raise CocycleMismatchError(f"cocycle does not match the form (mismatch {res:.3e})", res)


def neeb_verify(
    F: LeftInvariantTwoForm,
    s: SymplecticCocycle,
    samples: int = 200,
    step: float = DEFAULT_STEP,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol_fd: float = TOL_FD,
    tol: float = TOL_VERIFY,
) -> VerificationReport:
    """Sampled check of ``i_{rho_X} Omega = d Phi_X``.

    Compares the finite-difference derivative of ``Phi_X`` along ``rho_Y``
    with ``Omega(rho_X, rho_Y)`` at random words.  A passing report certifies
    the potentials exist on the sampled points, which is the integrability
    criterion for the central extension defined by ``c``.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    _check_form_match(F, s, tol)
    rng = make_rng(seed)
    n = F.algebra.dim
    worst = 0.0
    for _ in range(samples):
        w = random_word(rng, n)
        x, y = random_ball(rng, n), random_ball(rng, n)
        fd = lie_derivative_fd(s, x, y, w, step)
        worst = max(worst, abs(fd - omega_right(F, w, x, y)))
    return VerificationReport(worst, samples, tol_fd, {"step": step})


@dataclass
class HamiltonianReport:
    """Verdict of :func:`self_hamiltonian_check`.

    ``report`` checks ``Phi'_{[X,Y]} = Omega(rho_X, rho_Y)`` when a shift
    exists, and otherwise the identity
    ``c(X, Y) = Omega(rho_X, rho_Y) - Phi_{[X,Y]}`` that obstructs it.
    """

    hamiltonian: bool
    shift: np.ndarray | None
    report: VerificationReport

    def to_json(self) -> dict:
        return {
            "hamiltonian": self.hamiltonian,
            "shift": None if self.shift is None else self.shift.tolist(),
            "report": self.report.to_json(),
        }


def self_hamiltonian_check(
    F: LeftInvariantTwoForm,
    s: SymplecticCocycle,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
) -> HamiltonianReport:
    _check_form_match(F, s, tol)
    L = F.algebra
    shift = solve_coboundary(L, F.c, tol)
    rng = make_rng(seed)
    worst = 0.0
    for _ in range(samples):
        w = random_word(rng, L.dim)
        x, y = random_ball(rng, L.dim), random_ball(rng, L.dim)
        xy = bracket(L, x, y)
        rhs = omega_right(F, w, x, y)
        if shift is not None:
            lhs = phi_potential(s, xy, w) - float(shift @ xy)
            worst = max(worst, abs(lhs - rhs))
        else:
            worst = max(worst, abs(F.c(x, y) - (rhs - phi_potential(s, xy, w))))
    return HamiltonianReport(shift is not None, shift, VerificationReport(worst, samples, tol))


def omega_right_via_cochain(F: LeftInvariantTwoForm, w: GroupWord, x: Any, y: Any) -> float:
    """``(Ad*_g c)(X, Y)``, an independent route to :func:`omega_right`."""
    return coadjoint_of_cochain(F.algebra, F.c, w)(x, y)
