"""Exact arithmetic for cyclic covers of the line.

Eigenspace Hodge types, pure (1,n) classification, cyclotomic braid-twist
monodromy, and the attached Hodge-number calculus, all over exact rationals.
"""

from ._core import (
    CoverFamily,
    Cyclotomic,
    EigenspaceProfile,
    Matrix,
    all_profiles,
    borcea_voisin_hodge,
    canonical_form,
    classify,
    collide,
    dehn_twist_matrix,
    default_m_max,
    distinguished_data,
    eigenspace_profile,
    enumerate_pure,
    euler_phi,
    exceptional_analysis,
    galois_conjugate,
    genus,
    has_fermat_cm_fiber,
    int_check,
    intertwiner_identity,
    is_stable_partition,
    matrix_order,
    nikulin_fixed_locus,
    quotient_family,
    sint_check,
    triangle_family,
    twist_order,
    yukawa_length,
)

__version__ = "1.0.0"

__all__ = [
    "CoverFamily",
    "Cyclotomic",
    "EigenspaceProfile",
    "Matrix",
    "all_profiles",
    "borcea_voisin_hodge",
    "canonical_form",
    "classify",
    "collide",
    "dehn_twist_matrix",
    "default_m_max",
    "distinguished_data",
    "eigenspace_profile",
    "enumerate_pure",
    "euler_phi",
    "exceptional_analysis",
    "galois_conjugate",
    "genus",
    "has_fermat_cm_fiber",
    "int_check",
    "intertwiner_identity",
    "is_stable_partition",
    "matrix_order",
    "nikulin_fixed_locus",
    "quotient_family",
    "sint_check",
    "triangle_family",
    "twist_order",
    "yukawa_length",
]
