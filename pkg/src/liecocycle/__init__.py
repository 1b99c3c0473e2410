"""Central extensions, symplectic cocycles and coadjoint orbits of real Lie algebras given by structure constants."""

from ._linalg import TOL_ALG, TOL_FD, TOL_RANK, TOL_VERIFY
from .cocycle import (
    SymplecticCocycle,
    from_ce_cocycle,
    holonomy_defect,
    theta_exp,
    theta_exp_rk4,
    theta_word,
    trivialize,
    verify_cocycle_identity,
    verify_symplectic_identity,
)
from .cohomology import H2Report, TwoCochain, ce_d1, ce_d2, ce_residual, h2_report, solve_coboundary
from .errors import (
    CocycleMismatchError,
    DimensionError,
    InputError,
    InvalidAlgebraError,
    LieCocycleError,
    NotACocycleError,
    NotIdentityWordError,
)
from .extension import CentralExtension, affine_action, central_extend, hat_adjoint, hat_coadjoint
from .fixtures import (
    PhaseSpaceFixture,
    abelian,
    fixture_c,
    fixture_theta,
    galilei_1d,
    galilei_mass_cocycle,
    heisenberg_cocycle,
    moment,
    poisson,
    sl2,
    so3,
)
from .lie_core import (
    GroupWord,
    LieAlgebra,
    MatrixRep,
    ad_matrix,
    bracket,
    coad_matrix,
    word_Ad,
    word_coAd,
)
from .orbits import (
    OrbitPointReport,
    affine_stabilizer,
    affine_symplectic_form,
    correspondence_check,
    kks_form,
    stabilizer,
)
from .presymplectic import (
    LeftInvariantTwoForm,
    neeb_verify,
    omega_left,
    omega_right,
    phi_potential,
    self_hamiltonian_check,
)
from .sampling import VerificationReport

__version__ = "0.1.0"
