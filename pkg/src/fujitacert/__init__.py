"""Exact-arithmetic analysis of cyclic covers of the line branched at 4 points.

Library layers, bottom up: residues (Z/n arithmetic), eigenspace (per-character
Hodge data), cyclotomic (exact field arithmetic), monodromy (irreducibility and
finiteness, criteria and matrix oracle), surfaces (family admissibility and
surface invariants), certify (splitting reports and counterexample
certificates), sweep (criterion/oracle equivalence), cli (JSON front end).
"""

from .certify import (
    Certificate,
    EnumerationMode,
    SplittingReport,
    certify,
    enumerate_families,
    flat_summand_census,
    shimura_count,
    splitting,
)
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, finite_order_bound, real_sign, zeta
from .eigenspace import (
    DegenerateCharacterError,
    EigenspaceReport,
    ResidueWeights,
    SplitClass,
    WeightTuple,
    eigenspace_table,
    hodge_dims,
    mu,
    sigma_sum,
    signature,
)
from .monodromy import (
    FinitenessVerdict,
    HypergeometricParams,
    MonodromyTriple,
    finiteness_by_signature,
    find_infinite_character,
    group_closure,
    has_common_eigenvector,
    infinite_order_witness,
    invariant_hermitian_form,
    is_irreducible,
    levelt_triple,
    params_from_weights,
    triple_from_weights,
)
from .residues import euler_phi, galois_orbit, is_unit, reduce_mod, units
from .surfaces import (
    FamilyData,
    SurfaceInvariants,
    admissible_exists,
    branch_table,
    canonical_family,
    family,
    invariants,
    is_admissible,
    iter_admissible_families,
    singular_fibre_profile,
    smoothness_check,
    standard_family,
)
from .sweep import run_sweep

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CyclotomicNumber",
    "DegenerateCharacterError",
    "EigenspaceReport",
    "EnumerationMode",
    "FamilyData",
    "FinitenessVerdict",
    "HypergeometricParams",
    "MonodromyTriple",
    "ResidueWeights",
    "SplitClass",
    "SplittingReport",
    "SurfaceInvariants",
    "WeightTuple",
    "admissible_exists",
    "branch_table",
    "canonical_family",
    "certify",
    "cyclotomic_polynomial",
    "eigenspace_table",
    "enumerate_families",
    "euler_phi",
    "family",
    "find_infinite_character",
    "finite_order_bound",
    "finiteness_by_signature",
    "flat_summand_census",
    "galois_orbit",
    "group_closure",
    "has_common_eigenvector",
    "hodge_dims",
    "infinite_order_witness",
    "invariant_hermitian_form",
    "invariants",
    "is_admissible",
    "is_irreducible",
    "is_unit",
    "iter_admissible_families",
    "levelt_triple",
    "mu",
    "params_from_weights",
    "real_sign",
    "reduce_mod",
    "run_sweep",
    "shimura_count",
    "sigma_sum",
    "signature",
    "singular_fibre_profile",
    "smoothness_check",
    "splitting",
    "standard_family",
    "triple_from_weights",
    "units",
    "zeta",
]
