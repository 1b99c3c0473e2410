"""Chevalley-Eilenberg cochains with trivial coefficients in degrees 1 to 3."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

import numpy as np

from ._linalg import TOL_RANK, TOL_VERIFY, nullspace, numerical_rank, range_basis
from .errors import DimensionError
from .lie_core import LieAlgebra, conform


class TwoCochain:
    """Alternating bilinear form ``c`` with ``matrix[i, j] = c(e_i, e_j)``.

    Only the strict upper triangle of the input is read; the stored matrix is
    its exact antisymmetric completion.
    """

    def __init__(self, matrix: Any):
        m = np.asarray(matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"two-cochain must be a square matrix, got shape {m.shape}")
        upper = np.triu(m, 1)
        full = upper - upper.T
        full.setflags(write=False)
        self.matrix = full

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, x: Any, y: Any) -> float:
        # summed over i < j so that c(x, x) = 0 and c(y, x) = -c(x, y) hold exactly
        x = conform(self.dim, x, "x")
        y = conform(self.dim, y, "y")
        i, j = np.triu_indices(self.dim, 1)
        return float(self.matrix[i, j] @ (x[i] * y[j] - x[j] * y[i]))

    def __repr__(self) -> str:
        return f"TwoCochain({self.matrix.tolist()})"

    def __add__(self, other: "TwoCochain") -> "TwoCochain":
        return TwoCochain(self.matrix + other.matrix)

    def __sub__(self, other: "TwoCochain") -> "TwoCochain":
        return TwoCochain(self.matrix - other.matrix)

    def __mul__(self, scalar: float) -> "TwoCochain":
        return TwoCochain(scalar * self.matrix)

    __rmul__ = __mul__

    @classmethod
    def zero(cls, n: int) -> "TwoCochain":
        return cls(np.zeros((n, n)))

    @classmethod
    def from_entries(cls, n: int, entries: dict[tuple[int, int], float]) -> "TwoCochain":
        m = np.zeros((n, n))
        for (i, j), v in entries.items():
            if i < j:
                m[i, j] = v
            elif i > j:
                m[j, i] = -v
        return cls(m)

    @classmethod
    def from_vector(cls, n: int, vec: np.ndarray) -> "TwoCochain":
        """Inverse of :meth:`to_vector` (coordinates on pairs ``i < j``)."""
        m = np.zeros((n, n))
        m[np.triu_indices(n, 1)] = vec
        return cls(m)

    def to_vector(self) -> np.ndarray:
        return self.matrix[np.triu_indices(self.dim, 1)].copy()

    def to_json(self) -> dict:
        entries = [
            {"i": i, "j": j, "value": float(self.matrix[i, j])}
            for i, j in itertools.combinations(range(self.dim), 2)
            if self.matrix[i, j] != 0
        ]
        return {"entries": entries}


def _check(L: LieAlgebra, c: TwoCochain) -> None:
    if c.dim != L.dim:
        raise DimensionError(f"cochain has dimension {c.dim}, algebra has {L.dim}")


def ce_d1(L: LieAlgebra, alpha: Any) -> TwoCochain:
    """``(d alpha)(X, Y) = -<alpha, [X, Y]>``."""
    alpha = conform(L.dim, alpha, "alpha")
    return TwoCochain(-np.einsum("ijk,k->ij", L.structure, alpha))


def ce_d2(L: LieAlgebra, c: TwoCochain) -> np.ndarray:
    """Three-cochain ``-c([X,Y],Z) + c([X,Z],Y) - c([Y,Z],X)`` on basis triples.

    Returned as the fully antisymmetric ``n x n x n`` tensor ``T[i, j, k]``.
    """
    _check(L, c)
    s, m = L.structure, c.matrix
    # t[i, j, k] = c([e_i, e_j], e_k)
    t = np.einsum("ijm,mk->ijk", s, m)
    return -t + t.transpose(0, 2, 1) - t.transpose(2, 0, 1)


def ce_residual(L: LieAlgebra, c: TwoCochain) -> float:
    """Max-norm of ``ce_d2(c)``; zero exactly for cocycles."""
    return float(np.max(np.abs(ce_d2(L, c)), initial=0.0))


def d1_matrix(L: LieAlgebra) -> np.ndarray:
    """Matrix of ``ce_d1`` from covector coordinates to pair coordinates."""
    iu = np.triu_indices(L.dim, 1)
    return -L.structure[iu]


def d2_matrix(L: LieAlgebra) -> np.ndarray:
    """Matrix of ``ce_d2`` from pair coordinates to triple coordinates ``i<j<k``."""
    n = L.dim
    pairs = list(itertools.combinations(range(n), 2))
    triples = list(itertools.combinations(range(n), 3))
    m = np.zeros((len(triples), len(pairs)))
    for col in range(len(pairs)):
        vec = np.zeros(len(pairs))
        vec[col] = 1.0
        t = ce_d2(L, TwoCochain.from_vector(n, vec))
        m[:, col] = [t[i, j, k] for i, j, k in triples]
    return m


@dataclass(frozen=True)
class H2Report:
    dim_Z2: int
    dim_B2: int
    dim_H2: int
    cocycle_basis: list[TwoCochain]
    coboundary_basis: list[TwoCochain]

    def to_json(self) -> dict:
        return {
            "dim_Z2": self.dim_Z2,
            "dim_B2": self.dim_B2,
            "dim_H2": self.dim_H2,
            "cocycle_basis": [c.to_json() for c in self.cocycle_basis],
            "coboundary_basis": [c.to_json() for c in self.coboundary_basis],
        }


def h2_report(L: LieAlgebra, tol_rank: float = TOL_RANK) -> H2Report:
    """Dimensions of ``Z^2``, ``B^2`` and ``H^2`` with explicit bases.

    The first ``dim_H2`` members of ``cocycle_basis`` span a complement of
    the coboundaries inside the cocycles, orthogonal to them in pair
    coordinates; the remaining members span the coboundaries.
    """
    n = L.dim
    d1 = d1_matrix(L)
    d2 = d2_matrix(L)
    z = nullspace(d2, tol_rank, "d2") if d2.shape[1] else np.zeros((0, 0))
    b = range_basis(d1, tol_rank)
    dim_z = z.shape[0]
    dim_b = numerical_rank(d1, tol_rank, "d1")
    dim_h = max(dim_z - dim_b, 0)
    h = np.zeros((0, d1.shape[0]))
    if dim_h:
        # Project the cocycles off the coboundaries; the top singular
        # directions of what is left represent H^2.
        proj = z - (z @ b.T) @ b
        u, _, _ = np.linalg.svd(proj.T, full_matrices=False)
        h = u[:, :dim_h].T
    reps = [TwoCochain.from_vector(n, v) for v in h]
    cobs = [TwoCochain.from_vector(n, v) for v in b]
    return H2Report(
        dim_Z2=dim_z,
        dim_B2=dim_b,
        dim_H2=dim_h,
        cocycle_basis=reps + cobs,
        coboundary_basis=cobs,
    )


def solve_coboundary(
    L: LieAlgebra,
    c: TwoCochain,
    tol_verify: float = TOL_VERIFY,
    tol_rank: float = TOL_RANK,
) -> np.ndarray | None:
    """Find ``alpha`` with ``ce_d1(alpha) == c``, or ``None`` when ``[c] != 0``.

    Uses the minimum-norm least-squares solution; it is accepted when the
    residual is at most ``tol_verify * ||c||``.
    """
    _check(L, c)
    target = c.to_vector()
    d1 = d1_matrix(L)
    if target.size == 0:
        return np.zeros(L.dim)
    alpha, *_ = np.linalg.lstsq(d1, target, rcond=tol_rank)
    resid = np.linalg.norm(d1 @ alpha - target)
    if resid <= tol_verify * np.linalg.norm(target):
        return alpha
    return None
