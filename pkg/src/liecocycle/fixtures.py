"""Standard algebras and flat phase-space fixtures with affine actions.

A :class:`PhaseSpaceFixture` is ``R^{2m}`` with a constant symplectic form
``omega(u, v) = u^T W v``, fundamental vector fields ``xi_i(p) = M_i p + t_i``
and affine comoment functions ``phi_i(p) = <a_i, p> + b_i``.  Every quantity
of the moment-map pipeline (``mu``, ``theta``, ``c``, the extended comoment)
is then a polynomial of degree at most one in the point and can be checked
in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from ._linalg import TOL_ALG, TOL_FD, TOL_VERIFY, expm
from .cocycle import SymplecticCocycle, from_ce_cocycle, theta_word, trivialize
from .cohomology import TwoCochain, solve_coboundary
from .errors import CocycleMismatchError, DimensionError, InvalidAlgebraError
from .extension import CentralExtension, hat_coadjoint
from .lie_core import GroupWord, LieAlgebra, bracket, conform, word_coAd
from .sampling import (
    DEFAULT_SEED,
    VerificationReport,
    make_rng,
    random_ball,
    random_box,
    random_word,
)


# -- standard algebras ------------------------------------------------------

def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.abelian(n)


def so3() -> LieAlgebra:
    """``[e1, e2] = e3``, ``[e2, e3] = e1``, ``[e3, e1] = e2``."""
    return LieAlgebra.from_brackets(
        3, {(0, 1): {2: 1.0}, (1, 2): {0: 1.0}, (2, 0): {1: 1.0}}, name="so3"
    )


def sl2() -> LieAlgebra:
    """``[H, E] = 2E``, ``[H, F] = -2F``, ``[E, F] = H``."""
    return LieAlgebra.from_brackets(
        3,
        {(0, 1): {1: 2.0}, (0, 2): {2: -2.0}, (1, 2): {0: 1.0}},
        basis=["H", "E", "F"],
        name="sl2",
    )


def galilei_1d() -> LieAlgebra:
    """Basis ``(H, P, B)`` with the single bracket ``[B, H] = P``."""
    return LieAlgebra.from_brackets(3, {(2, 0): {1: 1.0}}, basis=["H", "P", "B"], name="galilei_1d")


def heisenberg_cocycle() -> TwoCochain:
    """``c(e1, e2) = 1`` on abelian ``R^2``."""
    return TwoCochain.from_entries(2, {(0, 1): 1.0})


def galilei_mass_cocycle(mass: float = 1.0) -> TwoCochain:
    """``c(B, P) = mass`` on :func:`galilei_1d`."""
    return TwoCochain.from_entries(3, {(2, 1): mass})


# -- phase-space fixtures ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class PhaseSpaceFixture:
    algebra: LieAlgebra
    omega: np.ndarray
    linear: np.ndarray
    translation: np.ndarray
    comoment_a: np.ndarray
    comoment_b: np.ndarray
    name: str = ""
    tol: float = field(default=TOL_ALG, repr=False)

    def __post_init__(self):
        n = self.algebra.dim
        w = np.asarray(self.omega, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] % 2:
            raise InvalidAlgebraError(f"omega must be an even-dimensional square matrix, got {w.shape}")
        d = w.shape[0]
        shapes = {
            "linear": (np.asarray(self.linear, dtype=float), (n, d, d)),
            "translation": (np.asarray(self.translation, dtype=float), (n, d)),
            "comoment_a": (np.asarray(self.comoment_a, dtype=float), (n, d)),
            "comoment_b": (np.asarray(self.comoment_b, dtype=float), (n,)),
        }
        for key, (arr, shape) in shapes.items():
            if arr.shape != shape:
                raise DimensionError(f"{key} has shape {arr.shape}, expected {shape}")
            arr.setflags(write=False)
            object.__setattr__(self, key, arr)
        w.setflags(write=False)
        object.__setattr__(self, "omega", w)
        for key, res in self.invariant_residuals().items():
            if res > self.tol:
                raise InvalidAlgebraError(f"fixture {self.name!r}: {key} residual {res:.3e}", res)

    @property
    def phase_dim(self) -> int:
        return self.omega.shape[0]

    def invariant_residuals(self) -> dict[str, float]:
        """Residuals of the invariants checked at construction."""
        w, m, t = self.omega, self.linear, self.translation
        s = self.algebra.structure
        res = {
            "omega_antisymmetry": float(np.max(np.abs(w + w.T))),
            "omega_degeneracy": 0.0 if np.linalg.matrix_rank(w) == w.shape[0] else 1.0,
        }
        # L_xi omega = 0  <=>  W M_i symmetric
        wm = np.einsum("ab,ibc->iac", w, m)
        res["symplectic_fields"] = float(np.max(np.abs(wm - wm.transpose(0, 2, 1)), initial=0.0))
        # [xi_i, xi_j] = -xi_[e_i, e_j] for affine fields
        mm = np.einsum("jab,ibc->ijac", m, m)
        lin = mm - mm.transpose(1, 0, 2, 3) + np.einsum("ijk,kac->ijac", s, m)
        trans = (
            np.einsum("jab,ib->ija", m, t)
            - np.einsum("iab,jb->ija", m, t)
            + np.einsum("ijk,ka->ija", s, t)
        )
        res["anti_homomorphism"] = float(
            max(np.max(np.abs(lin), initial=0.0), np.max(np.abs(trans), initial=0.0))
        )
        # i_xi omega = W^T (M p + t) must equal d phi = a
        res["comoment"] = float(
            max(
                np.max(np.abs(np.einsum("ba,ibc->iac", w, m)), initial=0.0),
                np.max(np.abs(t @ w - self.comoment_a), initial=0.0),
            )
        )
        return res

    def with_shifted_comoment(self, mu0: Any) -> "PhaseSpaceFixture":
        """Replace ``phi_X`` by ``phi_X - <mu0, X>``."""
        mu0 = conform(self.algebra.dim, mu0, "mu0")
        return PhaseSpaceFixture(
            self.algebra, self.omega, self.linear, self.translation,
            self.comoment_a, self.comoment_b - mu0, self.name, self.tol,
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "algebra": self.algebra.to_json(),
            "phase_dim": self.phase_dim,
            "omega": self.omega.tolist(),
            "action": [
                {"linear": m.tolist(), "translation": t.tolist()}
                for m, t in zip(self.linear, self.translation)
            ],
            "comoment": [
                {"a": a.tolist(), "b": float(b)} for a, b in zip(self.comoment_a, self.comoment_b)
            ],
        }


def _point(fx: PhaseSpaceFixture, p: Any) -> np.ndarray:
    return conform(fx.phase_dim, p, "point")


def xi(fx: PhaseSpaceFixture, x: Any, p: Any) -> np.ndarray:
    """Fundamental vector field of ``x`` at ``p``."""
    x = conform(fx.algebra.dim, x, "x")
    p = _point(fx, p)
    return np.einsum("i,iab,b->a", x, fx.linear, p) + x @ fx.translation


def comoment(fx: PhaseSpaceFixture, x: Any, p: Any) -> float:
    """``phi_x(p)`` evaluated straight from the comoment coefficients."""
    x = conform(fx.algebra.dim, x, "x")
    p = _point(fx, p)
    return float(x @ (fx.comoment_a @ p + fx.comoment_b))


def moment(fx: PhaseSpaceFixture, p: Any) -> np.ndarray:
    p = _point(fx, p)
    return fx.comoment_a @ p + fx.comoment_b


def poisson(fx: PhaseSpaceFixture, x: Any, y: Any, p: Any) -> float:
    """``{phi_X, phi_Y}(p) = omega(xi_X(p), xi_Y(p))``."""
    u, v = xi(fx, x, p), xi(fx, y, p)
    # written so that swapping X and Y flips the sign exactly
    return 0.5 * (float(u @ fx.omega @ v) - float(v @ fx.omega @ u))


def act(fx: PhaseSpaceFixture, w: GroupWord, p: Any) -> np.ndarray:
    """``w . p``, each letter acting by the time-one flow of its affine field."""
    p = _point(fx, p)
    if w.dim != fx.algebra.dim:
        raise DimensionError(f"word letters have dimension {w.dim}, algebra has {fx.algebra.dim}")
    d = fx.phase_dim
    for x in w.letters[::-1]:
        aug = np.zeros((d + 1, d + 1))
        aug[:d, :d] = np.einsum("i,iab->ab", x, fx.linear)
        aug[:d, d] = x @ fx.translation
        p = expm(aug) @ np.append(p, 1.0)
        p = p[:d]
    return p


def _probes(fx: PhaseSpaceFixture, probes: Sequence[Any]) -> list[np.ndarray]:
    pts = [_point(fx, p) for p in probes]
    if not pts:
        raise ValueError("at least one probe point is required")
    return pts


def fixture_theta(
    fx: PhaseSpaceFixture, w: GroupWord, probes: Sequence[Any], tol: float = TOL_VERIFY
) -> tuple[np.ndarray, VerificationReport]:
    """``Ad*_g mu(p) - mu(g . p)`` at the first probe, with its spread over all probes."""
    pts = _probes(fx, probes)
    coad = word_coAd(fx.algebra, w)
    values = [coad @ moment(fx, p) - moment(fx, act(fx, w, p)) for p in pts]
    dev = max(float(np.max(np.abs(v - values[0]))) for v in values)
    return values[0], VerificationReport(dev, len(pts), tol)


def fixture_c(
    fx: PhaseSpaceFixture,
    x: Any,
    y: Any,
    probes: Sequence[Any],
    tol: float = TOL_VERIFY,
    fd_step: float = 1e-4,
    tol_fd: float = TOL_FD,
) -> tuple[float, VerificationReport]:
    """``{phi_X, phi_Y} - phi_[X,Y]`` at the first probe.

    The report's residual is the spread over the probes.  ``details`` also
    compares the value with ``<d_e theta(X), Y>`` obtained by central
    differences of :func:`fixture_theta` along ``exp(tX)``.
    """
    L = fx.algebra
    x = conform(L.dim, x, "x")
    y = conform(L.dim, y, "y")
    pts = _probes(fx, probes)
    xy = bracket(L, x, y)
    values = [poisson(fx, x, y, p) - comoment(fx, xy, p) for p in pts]
    dev = max(abs(v - values[0]) for v in values)
    plus, _ = fixture_theta(fx, GroupWord.of([fd_step * x], L.dim), pts[:1])
    minus, _ = fixture_theta(fx, GroupWord.of([-fd_step * x], L.dim), pts[:1])
    fd = float((plus - minus) @ y) / (2 * fd_step)
    fd_res = abs(fd - values[0])
    details = {"fd_derivative": fd, "fd_residual": fd_res, "fd_tolerance": tol_fd}
    report = VerificationReport(dev, len(pts), tol, details, conditions={"fd_match": fd_res <= tol_fd})
    return values[0], report


def fixture_cocycle(fx: PhaseSpaceFixture, probes: Sequence[Any] | None = None) -> TwoCochain:
    """The constant ``c`` on basis pairs, evaluated at the origin (or given probes)."""
    n = fx.algebra.dim
    pts = probes if probes is not None else [np.zeros(fx.phase_dim)]
    m = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j], _ = fixture_c(fx, fx.algebra.basis_vector(i), fx.algebra.basis_vector(j), pts)
    return TwoCochain(m)


def _check_fixture_cocycle(fx: PhaseSpaceFixture, c: TwoCochain, tol: float) -> None:
    res = float(np.max(np.abs(fixture_cocycle(fx).matrix - c.matrix), initial=0.0))
    if res > tol:
        raise CocycleMismatchError(f"cocycle does not match fixture {fx.name!r} (mismatch {res:.3e})", res)


def extended_comoment_check(
    fx: PhaseSpaceFixture,
    E: CentralExtension,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
) -> VerificationReport:
    """``phi^_[(X,u),(Y,v)] = {phi^_(X,u), phi^_(Y,v)}`` and ``<mu^(p), (X,u)> = phi_X(p) + u``."""
    _check_fixture_cocycle(fx, E.cocycle, tol)
    L = fx.algebra
    rng = make_rng(seed)
    r_hom = r_pair = 0.0
    for _ in range(samples):
        x, y = random_ball(rng, L.dim), random_ball(rng, L.dim)
        u, v = rng.uniform(-1, 1, 2)
        p = random_box(rng, fx.phase_dim)
        z = bracket(E.extended, E.lift(x, u), E.lift(y, v))
        lhs = comoment(fx, z[:-1], p) + z[-1]
        # constants u, v drop out of the Poisson bracket
        r_hom = max(r_hom, abs(lhs - poisson(fx, x, y, p)))
        hat_mu = np.append(moment(fx, p), 1.0)
        r_pair = max(r_pair, abs(hat_mu @ E.lift(x, u) - (comoment(fx, x, p) + u)))
    details = {"homomorphism": float(r_hom), "pairing": float(r_pair)}
    return VerificationReport(max(r_hom, r_pair), samples, tol, details)


def hat_mu_equivariance_check(
    fx: PhaseSpaceFixture,
    E: CentralExtension,
    s: SymplecticCocycle,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
) -> VerificationReport:
    """``g . (mu(p), 1) = (mu(g . p), 1)`` under the factored coadjoint action."""
    _check_fixture_cocycle(fx, E.cocycle, tol)
    L = fx.algebra
    rng = make_rng(seed)
    worst = 0.0
    zeta_exact = True
    for _ in range(samples):
        w = random_word(rng, L.dim)
        p = random_box(rng, fx.phase_dim)
        moved, zeta = hat_coadjoint(E, s, w, (moment(fx, p), 1.0), tol)
        zeta_exact &= zeta == 1.0
        worst = max(worst, float(np.max(np.abs(moved - moment(fx, act(fx, w, p))))))
    return VerificationReport(
        worst, samples, tol, {"zeta_preserved": bool(zeta_exact)},
        conditions={"zeta_preserved": bool(zeta_exact)},
    )


def theorem_a_form_check(
    fx: PhaseSpaceFixture,
    E: CentralExtension,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
) -> VerificationReport:
    """``omega(xi_X, xi_Y)(o) = <mu(o), [X, Y]> + c(X, Y)`` at random points ``o``.

    The right side is computed as the KKS form of the extension at
    ``mu^(o) = (mu(o), 1)`` on the lifts ``(X, 0), (Y, 0)``.
    """
    _check_fixture_cocycle(fx, E.cocycle, tol)
    L = fx.algebra
    rng = make_rng(seed)
    worst = 0.0
    for _ in range(samples):
        o = random_box(rng, fx.phase_dim)
        x, y = random_ball(rng, L.dim), random_ball(rng, L.dim)
        hat_mu = np.append(moment(fx, o), 1.0)
        kks = float(hat_mu @ bracket(E.extended, E.lift(x), E.lift(y)))
        worst = max(worst, abs(poisson(fx, x, y, o) - kks))
    return VerificationReport(worst, samples, tol)


def theta_consistency_check(
    fx: PhaseSpaceFixture,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
    probes_per_word: int = 3,
) -> VerificationReport:
    """The fixture's ``theta`` agrees with the cocycle integrated from its ``c``.

    ``details["probe_spread"]`` records the largest variation of the fixture
    ``theta`` across probe points.
    """
    L = fx.algebra
    s = from_ce_cocycle(L, fixture_cocycle(fx), tol)
    rng = make_rng(seed)
    worst = spread = 0.0
    for _ in range(samples):
        w = random_word(rng, L.dim)
        probes = [random_box(rng, fx.phase_dim) for _ in range(probes_per_word)]
        theta, rep = fixture_theta(fx, w, probes, tol)
        spread = max(spread, rep.max_residual)
        worst = max(worst, float(np.max(np.abs(theta - theta_word(s, w)))))
    return VerificationReport(
        worst, samples, tol, {"probe_spread": spread}, conditions={"probe_spread": spread <= tol}
    )


@dataclass
class EquivalenceReport:
    """Three independent verdicts on whether the action is hamiltonian."""

    c_coboundary: bool
    theta_trivializable: bool
    theta_coboundary_sampled: bool
    shift: np.ndarray | None
    sampled_residual: float

    @property
    def consistent(self) -> bool:
        return len({self.c_coboundary, self.theta_trivializable, self.theta_coboundary_sampled}) == 1

    def to_json(self) -> dict:
        return {
            "c_coboundary": self.c_coboundary,
            "theta_trivializable": self.theta_trivializable,
            "theta_coboundary_sampled": self.theta_coboundary_sampled,
            "consistent": self.consistent,
            "shift": None if self.shift is None else self.shift.tolist(),
            "sampled_residual": self.sampled_residual,
        }


def hamiltonian_equivalence(
    fx: PhaseSpaceFixture,
    samples: int = 100,
    seed: int | np.random.Generator = DEFAULT_SEED,
    tol: float = TOL_VERIFY,
) -> EquivalenceReport:
    """Decide hamiltonicity three ways.

    (1) ``c`` vanishes after shifting the comoment by the best coboundary;
    (2) :func:`~liecocycle.cocycle.trivialize` succeeds on the integrated
    cocycle; (3) the fixture's own ``theta`` fits ``Ad*_g mu0 - mu0`` by
    least squares over sampled words.
    """
    L = fx.algebra
    c = fixture_cocycle(fx)
    mu0 = solve_coboundary(L, c, tol)
    c_cob = False
    if mu0 is not None:
        shifted = fixture_cocycle(fx.with_shifted_comoment(mu0))
        c_cob = float(np.max(np.abs(shifted.matrix), initial=0.0)) <= tol
    rng = make_rng(seed)
    theta_triv = trivialize(from_ce_cocycle(L, c), samples, rng, tol) is not None
    origin = [np.zeros(fx.phase_dim)]
    rows, rhs = [], []
    for _ in range(samples):
        w = random_word(rng, L.dim)
        theta, _ = fixture_theta(fx, w, origin)
        rows.append(word_coAd(L, w) - np.eye(L.dim))
        rhs.append(theta)
    a, b = np.vstack(rows), np.concatenate(rhs)
    fit, *_ = np.linalg.lstsq(a, b, rcond=None)
    resid = float(np.max(np.abs(a @ fit - b), initial=0.0))
    return EquivalenceReport(c_cob, theta_triv, resid <= tol, mu0, resid)


def translations() -> PhaseSpaceFixture:
    """``R^2`` translating ``(R^2, dq^dp)`` with ``phi_1 = p``, ``phi_2 = -q``; ``c(e1, e2) = 1``."""
    return PhaseSpaceFixture(
        algebra=LieAlgebra.abelian(2, "abelian_R2"),
        omega=np.array([[0.0, 1.0], [-1.0, 0.0]]),
        linear=np.zeros((2, 2, 2)),
        translation=np.eye(2),
        comoment_a=np.array([[0.0, 1.0], [-1.0, 0.0]]),
        comoment_b=np.zeros(2),
        name="translations",
    )


def translations_c0() -> PhaseSpaceFixture:
    """``R^2`` translating the positions of ``T*R^2``; ``phi_i = p_i + b_i`` and ``c = 0``."""
    w = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])
    t = np.zeros((2, 4))
    t[0, 0] = t[1, 1] = 1.0
    a = np.zeros((2, 4))
    a[0, 2] = a[1, 3] = 1.0
    return PhaseSpaceFixture(
        algebra=LieAlgebra.abelian(2, "abelian_R2"),
        omega=w,
        linear=np.zeros((2, 4, 4)),
        translation=t,
        comoment_a=a,
        comoment_b=np.array([0.5, -0.25]),
        name="translations_c0",
    )


def galilei_translations() -> PhaseSpaceFixture:
    """:func:`galilei_1d` on ``(R^2, dq^dp)``: ``H`` shifts ``q``, ``B`` shifts ``p``, ``P`` acts trivially.

    ``phi_H = p``, ``phi_B = -q``, ``phi_P = 1``, so the moment map is not
    equivariant and ``Ad*`` is non-trivial along the sampled words.
    """
    return PhaseSpaceFixture(
        algebra=galilei_1d(),
        omega=np.array([[0.0, 1.0], [-1.0, 0.0]]),
        linear=np.zeros((3, 2, 2)),
        translation=np.array([[1.0, 0.0], [0.0, 0.0], [0.0, 1.0]]),
        comoment_a=np.array([[0.0, 1.0], [0.0, 0.0], [-1.0, 0.0]]),
        comoment_b=np.array([0.0, 1.0, 0.0]),
        name="galilei_translations",
    )


SHIPPED_FIXTURES = {
    "translations": translations,
    "translations_c0": translations_c0,
    "galilei_translations": galilei_translations,
}
