"""Exact structure analysis of finite-dimensional Lie algebras over GF(p)."""

from .gfp import PrimeField
from .subspace import (
    CapExceededError,
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
)
from .liealg import (
    InvalidAlgebraError,
    JacobiError,
    LieAlgebra,
    abelian,
    catalog,
    counterexample_L1,
    counterexample_double,
    heisenberg,
    L1_gamma,
    sl2,
)
from .lattice import (
    LatticeCache,
    build_lattice,
    core,
    frattini,
    is_semisimple,
    is_simple,
    is_supersolvable,
    minimal_ideals,
    abelian_socle,
    radical,
)
from .classify import (
    Analyzer,
    ClassificationReport,
    SupplementWitness,
    c_supplement,
    check_main_decomposition,
    check_semisimple_shape,
    classify_algebra,
    complement_subalgebra,
    is_E_algebra,
    is_c_supplemented_algebra,
    is_completely_factorisable,
    is_elementary,
    is_isomorphic_small,
    is_phi_free,
    canonical_form_small,
)
from .census import CensusSpec, VerdictLog, generate, verify

__version__ = "0.1.0"
