"""One-dimensional central extensions and the factored (co)adjoint actions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from ._linalg import TOL_VERIFY
from .cocycle import SymplecticCocycle, theta_word
from .cohomology import TwoCochain, ce_residual
from .errors import CocycleMismatchError, DimensionError, NotACocycleError
from .lie_core import GroupWord, LieAlgebra, conform, word_Ad, word_coAd


def _central_label(basis: tuple[str, ...]) -> str:
    if "Z" not in basis:
        return "Z"
    k = 1
    while f"Z_{k}" in basis:
        k += 1
    return f"Z_{k}"


@dataclass(frozen=True, eq=False)
class CentralExtension:
    """``g^ = g + R`` with ``[(X,u),(Y,v)] = ([X,Y], c(X,Y))``; the last basis vector is central."""

    base: LieAlgebra
    cocycle: TwoCochain
    extended: LieAlgebra

    @property
    def dim(self) -> int:
        return self.extended.dim

    def lift(self, x: Any, u: float = 0.0) -> np.ndarray:
        x = conform(self.base.dim, x, "x")
        return np.append(x, u)


def central_extend(L: LieAlgebra, c: TwoCochain, tol: float = TOL_VERIFY) -> CentralExtension:
    if c.dim != L.dim:
        raise DimensionError(f"cochain has dimension {c.dim}, algebra has {L.dim}")
    res = ce_residual(L, c)
    if res > tol:
        raise NotACocycleError(
            f"cannot extend by a non-cocycle: CE residual {res:.3e} > {tol:.1e}", res
        )
    n = L.dim
    s = np.zeros((n + 1, n + 1, n + 1))
    s[:n, :n, :n] = L.structure
    s[:n, :n, n] = c.matrix
    name = f"{L.name}^" if L.name else ""
    ext = LieAlgebra(s, basis=L.basis + (_central_label(L.basis),), name=name, tol=tol)
    return CentralExtension(L, c, ext)


def check_cocycle_match(E: CentralExtension, s: SymplecticCocycle, tol: float) -> None:
    if s.algebra.dim != E.base.dim:
        raise DimensionError(
            f"cocycle lives on dimension {s.algebra.dim}, extension base has {E.base.dim}"
        )
    res = float(np.max(np.abs(s.dtheta.matrix - E.cocycle.matrix), initial=0.0))
    if res > tol:
        raise CocycleMismatchError(
            f"symplectic cocycle does not integrate the extension's cocycle (mismatch {res:.3e})",
            res,
        )


def hat_adjoint(
    E: CentralExtension, s: SymplecticCocycle, w: GroupWord, tol: float = TOL_VERIFY
) -> np.ndarray:
    """Matrix of ``(X, u) -> (Ad_g X, u - <theta(g^{-1}), X>)``."""
    check_cocycle_match(E, s, tol)
    n = E.base.dim
    out = np.zeros((n + 1, n + 1))
    out[:n, :n] = word_Ad(E.base, w)
    out[n, :n] = -theta_word(s, w.inverse())
    out[n, n] = 1.0
    return out


def hat_coadjoint(
    E: CentralExtension,
    s: SymplecticCocycle,
    w: GroupWord,
    ac: tuple[Any, float],
    tol: float = TOL_VERIFY,
) -> tuple[np.ndarray, float]:
    """``(alpha, zeta) -> (Ad*_g alpha - zeta theta(g), zeta)``; ``zeta`` is returned untouched."""
    check_cocycle_match(E, s, tol)
    alpha, zeta = ac
    alpha = conform(E.base.dim, alpha, "alpha")
    return word_coAd(E.base, w) @ alpha - zeta * theta_word(s, w), zeta


def affine_action(L: LieAlgebra, s: SymplecticCocycle, w: GroupWord, alpha: Any) -> np.ndarray:
    """``rho(g) alpha = Ad*_g alpha - theta(g)``."""
    if s.algebra.dim != L.dim:
        raise DimensionError(f"cocycle lives on dimension {s.algebra.dim}, algebra has {L.dim}")
    alpha = conform(L.dim, alpha, "alpha")
    return word_coAd(L, w) @ alpha - 1.0 * theta_word(s, w)
