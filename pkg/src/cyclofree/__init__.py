"""Exact arithmetic for k-free cyclotomic integers.

The package materializes the k-free elements of Z[zeta_n] as point sets
in Z^d (d = phi(n)), computes their density and entropy constants from
rigorous Dedekind zeta enclosures, and constructs and verifies the
unit-times-Galois symmetries that stabilise them.
"""

__version__ = "0.1.0"

from .cyclotomic import (
    ConductorError,
    CycInt,
    IntPolynomial,
    cyclotomic_polynomial,
    euler_phi,
    reduce_polynomial,
    resultant,
    ring_degree,
    validate_conductor,
)
from .gfpoly import factor_mod_p
from .prime_ideals import (
    PrimeIdeal,
    enumerate_prime_ideals,
    factor_poly_mod_p,
    is_in_Wk,
    is_kfree,
    ramified_primes,
    split_prime,
    splitting_type,
    valuation,
)
from .lattices import IdealLattice, RankError, box_points, determinant, hnf, ideal_lattice
from .kfree import (
    DensityReport,
    KFreeBox,
    PatchConfig,
    ResourceCapError,
    density_estimate,
    extract_patches,
    hereditary_check,
    is_admissible,
    norm_bound,
    patch_entropy_estimate,
    sieve_box,
)
from .zeta import Interval, ZetaValue, dedekind_zeta, density_constant, entropy_constant
from .symmetries import (
    AqCandidate,
    AqNotFound,
    FourSumsReport,
    GaloisGroup,
    SplittingPrimeSet,
    SymmetryElement,
    aq_search,
    galois_group,
    generator_elements,
    identity_element,
    scan_for_violation,
    splitting_primes,
    symmetry_element,
    unit_generators,
    vanishing_four_sums,
    verify_Wk_preservation,
    verify_coprimality_transport,
    verify_lemma_factors,
    verify_stabiliser_action,
)

__all__ = [
    "AqCandidate",
    "AqNotFound",
    "ConductorError",
    "CycInt",
    "DensityReport",
    "FourSumsReport",
    "GaloisGroup",
    "IdealLattice",
    "IntPolynomial",
    "Interval",
    "KFreeBox",
    "PatchConfig",
    "PrimeIdeal",
    "RankError",
    "ResourceCapError",
    "SplittingPrimeSet",
    "SymmetryElement",
    "ZetaValue",
    "aq_search",
    "box_points",
    "cyclotomic_polynomial",
    "dedekind_zeta",
    "density_constant",
    "density_estimate",
    "determinant",
    "enumerate_prime_ideals",
    "entropy_constant",
    "euler_phi",
    "extract_patches",
    "factor_mod_p",
    "factor_poly_mod_p",
    "galois_group",
    "generator_elements",
    "hereditary_check",
    "hnf",
    "ideal_lattice",
    "identity_element",
    "is_admissible",
    "is_in_Wk",
    "is_kfree",
    "norm_bound",
    "patch_entropy_estimate",
    "ramified_primes",
    "reduce_polynomial",
    "resultant",
    "ring_degree",
    "scan_for_violation",
    "sieve_box",
    "split_prime",
    "splitting_primes",
    "splitting_type",
    "symmetry_element",
    "unit_generators",
    "valuation",
    "validate_conductor",
    "vanishing_four_sums",
    "verify_Wk_preservation",
    "verify_coprimality_transport",
    "verify_lemma_factors",
    "verify_stabiliser_action",
]
