"""Lie algebras given by structure constants, and words of exponentials.

Vectors of the algebra and covectors of its dual are plain 1-d numpy arrays
of coordinates in the basis ``e_i`` and the dual basis ``eps^i``; the pairing
``<alpha, X>`` is the dot product.  Group elements are represented by
:class:`GroupWord` instances ``exp(X_1) ... exp(X_k)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from ._linalg import TOL_ALG, expm
from .errors import DimensionError, InvalidAlgebraError, NotIdentityWordError


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def conform(n: int, x: Any, what: str = "vector") -> np.ndarray:
    """Return ``x`` as a float array of length ``n`` or raise DimensionError."""
    arr = np.asarray(x, dtype=float)
    if arr.shape != (n,):
        raise DimensionError(f"{what} has shape {arr.shape}, expected ({n},)")
    return arr


class LieAlgebra:
    """Finite-dimensional real Lie algebra with ``[e_i, e_j] = sum_k c^k_ij e_k``.

    The structure tensor is indexed ``structure[i, j, k] = c^k_ij``.  Only the
    entries with ``i < j`` are taken from the input; the rest are filled in by
    antisymmetry, so the stored tensor is exactly antisymmetric.  The Jacobi
    identity is checked on every basis triple against ``tol``.
    """

    def __init__(
        self,
        structure: Any,
        basis: Sequence[str] | None = None,
        name: str = "",
        tol: float = TOL_ALG,
    ):
        s = np.asarray(structure, dtype=float)
        if s.ndim != 3 or s.shape[0] != s.shape[1] or s.shape[1] != s.shape[2]:
            raise InvalidAlgebraError(f"structure tensor must be n x n x n, got {s.shape}")
        n = s.shape[0]
        if n < 1:
            raise InvalidAlgebraError("dimension must be positive")
        iu = np.triu_indices(n, 1)
        canon = np.zeros_like(s)
        canon[iu] = s[iu]
        canon = canon - canon.transpose(1, 0, 2)
        lower_defect = float(np.max(np.abs(s - canon), initial=0.0))
        if lower_defect > tol and np.any(s[np.tril_indices(n, 0)] != 0):
            raise InvalidAlgebraError(
                f"structure tensor is not antisymmetric (defect {lower_defect:.3e})",
                lower_defect,
            )
        if basis is None:
            basis = [f"e{i + 1}" for i in range(n)]
        basis = [str(b) for b in basis]
        if len(basis) != n:
            raise InvalidAlgebraError(f"{len(basis)} basis labels for dimension {n}")
        if len(set(basis)) != n:
            raise InvalidAlgebraError("basis labels must be distinct")
        self.name = name
        self.basis = tuple(basis)
        self.structure = _frozen(canon)
        self.jacobi_residual = jacobi_residual(self.structure)
        if self.jacobi_residual > tol:
            raise InvalidAlgebraError(
                f"Jacobi identity fails: residual {self.jacobi_residual:.3e} > {tol:.1e}",
                self.jacobi_residual,
            )

    @property
    def dim(self) -> int:
        return self.structure.shape[0]

    def __repr__(self) -> str:
        return f"LieAlgebra(name={self.name!r}, dim={self.dim}, basis={list(self.basis)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.basis == other.basis and np.array_equal(self.structure, other.structure)

    def __hash__(self) -> int:
        return hash((self.basis, self.structure.tobytes()))

    def basis_vector(self, i: int) -> np.ndarray:
        e = np.zeros(self.dim)
        e[i] = 1.0
        return e

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, float]],
        basis: Sequence[str] | None = None,
        name: str = "",
        tol: float = TOL_ALG,
    ) -> "LieAlgebra":
        """Build from ``{(i, j): {k: coeff}}``; pairs may be given in either order."""
        s = np.zeros((dim, dim, dim))
        for (i, j), coeffs in brackets.items():
            if i == j:
                raise InvalidAlgebraError(f"bracket [{i}, {i}] must vanish")
            sign = 1.0
            if i > j:
                i, j, sign = j, i, -1.0
            for k, v in coeffs.items():
                s[i, j, k] = sign * float(v)
        return cls(s, basis=basis, name=name, tol=tol)

    @classmethod
    def abelian(cls, n: int, name: str | None = None) -> "LieAlgebra":
        return cls(np.zeros((n, n, n)), name=name or f"abelian_R{n}")

    def to_json(self) -> dict:
        brackets = []
        for i, j in itertools.combinations(range(self.dim), 2):
            coeffs = {str(k): float(v) for k, v in enumerate(self.structure[i, j]) if v != 0}
            if coeffs:
                brackets.append({"i": i, "j": j, "coeffs": coeffs})
        return {"name": self.name, "dim": self.dim, "basis": list(self.basis), "brackets": brackets}


def jacobi_residual(structure: np.ndarray) -> float:
    """Max-norm of the Jacobiator over all basis triples."""
    s = np.asarray(structure, dtype=float)
    # [[e_i,e_j],e_k] = sum_m c^m_ij c^l_mk
    t = np.einsum("ijm,mkl->ijkl", s, s)
    jac = t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)
    return float(np.max(np.abs(jac), initial=0.0))


def bracket(L: LieAlgebra, x: Any, y: Any) -> np.ndarray:
    x = conform(L.dim, x, "x")
    y = conform(L.dim, y, "y")
    return np.einsum("i,j,ijk->k", x, y, L.structure)


def ad_matrix(L: LieAlgebra, x: Any) -> np.ndarray:
    """Matrix of ``ad_x``, so that ``ad_matrix(L, x) @ y == bracket(L, x, y)``."""
    x = conform(L.dim, x, "x")
    return np.einsum("i,ijk->kj", x, L.structure)


def coad_matrix(L: LieAlgebra, x: Any) -> np.ndarray:
    """Matrix of ``ad*_x = -alpha o ad_x`` acting on covector coordinates."""
    return -ad_matrix(L, x).T


def pairing(alpha: Any, x: Any) -> float:
    return float(np.dot(alpha, x))


@dataclass(frozen=True, eq=False)
class GroupWord:
    """The group element ``exp(X_1) exp(X_2) ... exp(X_k)``.

    ``letters`` has shape ``(k, n)``.  Words are never simplified: the empty
    word is the identity, and ``w1 * w2`` is the concatenation (the product
    ``g1 g2``).  ``rep_images`` optionally carries the images of the factors
    ``exp(X_i)`` under a declared matrix representation.
    """

    letters: np.ndarray
    rep_images: np.ndarray | None = None

    def __post_init__(self):
        letters = np.asarray(self.letters, dtype=float)
        if letters.ndim != 2:
            raise DimensionError(f"letters must be a (k, n) array, got shape {letters.shape}")
        object.__setattr__(self, "letters", _frozen(letters))
        if self.rep_images is not None:
            imgs = np.asarray(self.rep_images, dtype=float)
            if imgs.ndim != 3 or imgs.shape[0] != letters.shape[0]:
                raise DimensionError(
                    f"{imgs.shape[0] if imgs.ndim == 3 else '?'} rep images for "
                    f"{letters.shape[0]} letters"
                )
            object.__setattr__(self, "rep_images", _frozen(imgs))

    @classmethod
    def of(cls, letters: Iterable[Any], dim: int) -> "GroupWord":
        rows = [conform(dim, x, "letter") for x in letters]
        return cls(np.array(rows).reshape(len(rows), dim))

    @classmethod
    def identity(cls, dim: int) -> "GroupWord":
        return cls(np.zeros((0, dim)))

    @property
    def dim(self) -> int:
        return self.letters.shape[1]

    def __len__(self) -> int:
        return self.letters.shape[0]

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if not isinstance(other, GroupWord):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionError(f"cannot multiply words of dimensions {self.dim} and {other.dim}")
        imgs = None
        if self.rep_images is not None and other.rep_images is not None:
            imgs = np.concatenate([self.rep_images, other.rep_images])
        return GroupWord(np.concatenate([self.letters, other.letters]), imgs)

    def inverse(self) -> "GroupWord":
        """Reverse the letters and negate them."""
        imgs = None
        if self.rep_images is not None:
            imgs = np.linalg.inv(self.rep_images[::-1])
        return GroupWord(-self.letters[::-1], imgs)

    def prepend(self, x: Any) -> "GroupWord":
        return GroupWord.of([x], self.dim) * GroupWord(self.letters)

    def to_json(self) -> dict:
        return {"letters": self.letters.tolist()}


def _check_word(L: LieAlgebra, w: GroupWord) -> None:
    if w.dim != L.dim:
        raise DimensionError(f"word letters have dimension {w.dim}, algebra has {L.dim}")


def exp_Ad(L: LieAlgebra, x: Any) -> np.ndarray:
    """``Ad_{exp x} = exp(ad_x)``."""
    return expm(ad_matrix(L, x))


def exp_coAd(L: LieAlgebra, x: Any) -> np.ndarray:
    """``Ad*_{exp x} = exp(ad*_x)``."""
    return expm(coad_matrix(L, x))


def word_Ad(L: LieAlgebra, w: GroupWord) -> np.ndarray:
    _check_word(L, w)
    out = np.eye(L.dim)
    for x in w:
        out = out @ exp_Ad(L, x)
    return out


def word_coAd(L: LieAlgebra, w: GroupWord) -> np.ndarray:
    """``Ad*_g``, the transpose of ``Ad_{g^{-1}}``."""
    _check_word(L, w)
    return word_Ad(L, w.inverse()).T


@dataclass(frozen=True, eq=False)
class MatrixRep:
    """Matrix representation ``e_i -> generators[i]`` of an algebra.

    ``faithful`` is a flag asserted by the user and is not checked.
    """

    algebra: LieAlgebra
    generators: np.ndarray
    faithful: bool = False
    tol: float = field(default=TOL_ALG, repr=False)

    def __post_init__(self):
        gens = np.asarray(self.generators, dtype=float)
        n = self.algebra.dim
        if gens.ndim != 3 or gens.shape[0] != n or gens.shape[1] != gens.shape[2]:
            raise InvalidAlgebraError(
                f"expected {n} square generator matrices, got array of shape {gens.shape}"
            )
        object.__setattr__(self, "generators", _frozen(gens))
        res = self.homomorphism_residual()
        if res > self.tol:
            raise InvalidAlgebraError(
                f"representation is not a homomorphism: residual {res:.3e}", res
            )

    @property
    def dim_rep(self) -> int:
        return self.generators.shape[1]

    def homomorphism_residual(self) -> float:
        g = self.generators
        comm = np.einsum("iab,jbc->ijac", g, g)
        comm = comm - comm.transpose(1, 0, 2, 3)
        image = np.einsum("ijk,kac->ijac", self.algebra.structure, g)
        return float(np.max(np.abs(comm - image), initial=0.0))

    def of(self, x: Any) -> np.ndarray:
        x = conform(self.algebra.dim, x, "x")
        return np.einsum("i,iab->ab", x, self.generators)

    def image(self, w: GroupWord) -> np.ndarray:
        """Product of the factor images, taken from ``w.rep_images`` when present."""
        _check_word(self.algebra, w)
        out = np.eye(self.dim_rep)
        if w.rep_images is not None:
            for m in w.rep_images:
                out = out @ m
            return out
        for x in w:
            out = out @ expm(self.of(x))
        return out


def identity_word_residuals(L: LieAlgebra, rep: MatrixRep, w: GroupWord) -> tuple[float, float]:
    """Distances of ``rep(w)`` and ``Ad_w`` from the identity (max-norm)."""
    rep_res = float(np.max(np.abs(rep.image(w) - np.eye(rep.dim_rep))))
    ad_res = float(np.max(np.abs(word_Ad(L, w) - np.eye(L.dim))))
    return rep_res, ad_res


def require_identity_word(L: LieAlgebra, rep: MatrixRep, w: GroupWord, tol: float) -> None:
    rep_res, ad_res = identity_word_residuals(L, rep, w)
    if rep_res > tol or ad_res > tol:
        raise NotIdentityWordError(
            f"word is not an identity word: representation residual {rep_res:.3e}, "
            f"adjoint residual {ad_res:.3e} (tolerance {tol:.1e})",
            rep_res,
            ad_res,
        )
