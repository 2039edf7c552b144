"""Exact computations in the rank-1 free-boson vertex algebra, its Z2 orbifold
and their untwisted/twisted Whittaker modules.

All scalars are exact rationals (fractions.Fraction at this boundary); there is
no floating point anywhere in the computation.
"""

from ._core import (
    DegenerateInput,
    DegenerateType,
    FockVector,
    IrrationalParameter,
    ModuleDescriptor,
    NotWhittaker,
    ParseError,
    SectorError,
    WhittakerParams,
    WhittakerType,
    annihilate,
    assemble_relation,
    canonicalize,
    central_charge,
    classify,
    cmn_table,
    commutator_expansion,
    create,
    cyclic_vector,
    exp_delta,
    fiber_check,
    generator,
    graded_dim,
    j_eigenvalues,
    jay,
    module_mode_action,
    nth_product,
    omega,
    params_from_type,
    parse,
    translate,
    verify_borcherds,
    verify_determinant_lemma,
    verify_jj_commutator,
    verify_lie_oj,
    whittaker_type_of,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateInput",
    "DegenerateType",
    "FockVector",
    "IrrationalParameter",
    "ModuleDescriptor",
    "NotWhittaker",
    "ParseError",
    "SectorError",
    "WhittakerParams",
    "WhittakerType",
    "annihilate",
    "assemble_relation",
    "canonicalize",
    "central_charge",
    "classify",
    "cmn_table",
    "commutator_expansion",
    "create",
    "cyclic_vector",
    "exp_delta",
    "fiber_check",
    "generator",
    "graded_dim",
    "j_eigenvalues",
    "jay",
    "module_mode_action",
    "nth_product",
    "omega",
    "params_from_type",
    "parse",
    "translate",
    "verify_borcherds",
    "verify_determinant_lemma",
    "verify_jj_commutator",
    "verify_lie_oj",
    "whittaker_type_of",
]
