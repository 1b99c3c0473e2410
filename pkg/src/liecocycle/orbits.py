"""Pointwise linear algebra of coadjoint and affine orbits."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ._linalg import TOL_RANK, TOL_VERIFY, nullspace
from .cocycle import SymplecticCocycle
from .cohomology import TwoCochain
from .errors import DimensionError
from .extension import CentralExtension, check_cocycle_match, affine_action, hat_coadjoint
from .lie_core import LieAlgebra, bracket, conform, word_Ad
from .sampling import DEFAULT_SEED, VerificationReport, make_rng, random_ball, random_word


@dataclass
class OrbitPointReport:
    alpha: np.ndarray
    stabilizer_basis: np.ndarray
    orbit_dim: int
    form_rank: int
    singular_values: np.ndarray = field(repr=False, default_factory=lambda: np.zeros(0))

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.tolist(),
            "stabilizer_basis": self.stabilizer_basis.tolist(),
            "orbit_dim": self.orbit_dim,
            "form_rank": self.form_rank,
        }


def kks_matrix(L: LieAlgebra, alpha: Any) -> np.ndarray:
    """``B[i, j] = <alpha, [e_i, e_j]>``."""
    alpha = conform(L.dim, alpha, "alpha")
    return np.einsum("ijk,k->ij", L.structure, alpha)


def kks_form(L: LieAlgebra, alpha: Any, x: Any, y: Any) -> float:
    alpha = conform(L.dim, alpha, "alpha")
    return float(alpha @ bracket(L, x, y))


def affine_symplectic_form(L: LieAlgebra, c: TwoCochain, alpha: Any, x: Any, y: Any) -> float:
    """``<alpha, [X, Y]> + c(X, Y)``."""
    return kks_form(L, alpha, x, y) + c(x, y)


def _point_report(form: np.ndarray, alpha: np.ndarray, tol_rank: float, what: str) -> OrbitPointReport:
    stab = nullspace(form, tol_rank, what)
    sv = np.linalg.svd(form, compute_uv=False)
    rank = form.shape[0] - stab.shape[0]
    if rank % 2:
        warnings.warn(
            f"{what}: odd numerical rank {rank}; singular values "
            f"{np.array2string(sv, precision=3)}",
            RuntimeWarning,
            stacklevel=3,
        )
    return OrbitPointReport(alpha, stab, rank, rank, sv)


def stabilizer(L: LieAlgebra, alpha: Any, tol_rank: float = TOL_RANK) -> OrbitPointReport:
    """Stabilizer subalgebra of ``alpha`` as the radical of ``B_alpha``."""
    alpha = conform(L.dim, alpha, "alpha")
    return _point_report(kks_matrix(L, alpha), alpha, tol_rank, "stabilizer")


def affine_stabilizer(
    L: LieAlgebra, c: TwoCochain, alpha: Any, tol_rank: float = TOL_RANK
) -> OrbitPointReport:
    """Radical of ``(X, Y) -> <alpha, [X, Y]> + c(X, Y)``."""
    alpha = conform(L.dim, alpha, "alpha")
    if c.dim != L.dim:
        raise DimensionError(f"cochain has dimension {c.dim}, algebra has {L.dim}")
    return _point_report(kks_matrix(L, alpha) + c.matrix, alpha, tol_rank, "affine stabilizer")


def correspondence_check(
    E: CentralExtension,
    s: SymplecticCocycle,
    alpha: Any,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
    tol_rank: float = TOL_RANK,
) -> VerificationReport:
    """Compare the affine orbit through ``alpha`` with the coadjoint orbit of ``(alpha, 1)``.

    Clause ``i``: the factored coadjoint action on the ``zeta = 1`` hyperplane
    is the affine action.  Clause ``ii``: the KKS form of the extension at
    ``(alpha, 1)`` on lifts ``(X, 0), (Y, 0)`` equals the affine form.
    Clause ``iii``: the stabilizer of ``(alpha, 1)`` contains the centre and
    the orbit dimensions agree.  Each clause residual is listed in
    ``details``; the report's residual is their maximum.
    """
    check_cocycle_match(E, s, tol)
    L = E.base
    alpha = conform(L.dim, alpha, "alpha")
    rng = make_rng(seed)
    r1 = r2 = 0.0
    zeta_exact = True
    for _ in range(samples):
        w = random_word(rng, L.dim)
        x, y = random_ball(rng, L.dim), random_ball(rng, L.dim)
        hat_alpha, zeta = hat_coadjoint(E, s, w, (alpha, 1.0), tol)
        zeta_exact &= zeta == 1.0
        r1 = max(r1, float(np.max(np.abs(hat_alpha - affine_action(L, s, w, alpha)))))
        lifted = kks_form(E.extended, E.lift(alpha, 1.0), E.lift(x), E.lift(y))
        r2 = max(r2, abs(lifted - affine_symplectic_form(L, E.cocycle, alpha, x, y)))
    hat_point = E.lift(alpha, 1.0)
    hat_report = stabilizer(E.extended, hat_point, tol_rank)
    aff_report = affine_stabilizer(L, E.cocycle, alpha, tol_rank)
    centre = np.zeros(E.dim)
    centre[-1] = 1.0
    centre_defect = float(np.linalg.norm(kks_matrix(E.extended, hat_point) @ centre))
    if hat_report.stabilizer_basis.shape[0]:
        # distance of the centre from the numerical stabilizer
        proj = hat_report.stabilizer_basis.T @ (hat_report.stabilizer_basis @ centre)
        centre_defect = max(centre_defect, float(np.linalg.norm(centre - proj)))
    else:
        centre_defect = max(centre_defect, 1.0)
    dim_gap = abs(hat_report.orbit_dim - aff_report.orbit_dim)
    r3 = max(centre_defect, float(dim_gap))
    details = {
        "clause_i": r1,
        "clause_ii": r2,
        "clause_iii": r3,
        "zeta_preserved": bool(zeta_exact),
        "affine_orbit_dim": aff_report.orbit_dim,
        "extended_orbit_dim": hat_report.orbit_dim,
    }
    worst = max(r1, r2, r3) if zeta_exact else float("inf")
    return VerificationReport(worst, samples, tol, details)


def affine_form_invariance(
    L: LieAlgebra,
    s: SymplecticCocycle,
    alpha: Any,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
) -> VerificationReport:
    """``omega_aff`` at ``rho(g) alpha`` on ``(Ad_g X, Ad_g Y)`` equals its value at ``alpha`` on ``(X, Y)``."""
    alpha = conform(L.dim, alpha, "alpha")
    rng = make_rng(seed)
    c = s.dtheta
    worst = 0.0
    for _ in range(samples):
        w = random_word(rng, L.dim)
        x, y = random_ball(rng, L.dim), random_ball(rng, L.dim)
        ad = word_Ad(L, w)
        moved = affine_action(L, s, w, alpha)
        lhs = affine_symplectic_form(L, c, moved, ad @ x, ad @ y)
        worst = max(worst, abs(lhs - affine_symplectic_form(L, c, alpha, x, y)))
    return VerificationReport(worst, samples, tol)
