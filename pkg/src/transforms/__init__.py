"""
Transforms package for Submodel Lab.
Normal forms, witness bounds and equality-free rewriting.
"""
from .monadic import build_theta_monadic, is_monadic_normal_form, normalize_monadic
from .normal_forms import NNFizer, is_literal, nnf, nnf_negated, simplify, top_conjuncts
from .relativization import (
    eliminate_equality_monadic,
    expand_bounded_quantifiers,
    relativize_one_param,
)
from .witness_bound import WitnessProfile, ea_witness_bound, ea_witness_profile

__all__ = [
    "build_theta_monadic",
    "is_monadic_normal_form",
    "normalize_monadic",
    "NNFizer",
    "is_literal",
    "nnf",
    "nnf_negated",
    "simplify",
    "top_conjuncts",
    "eliminate_equality_monadic",
    "expand_bounded_quantifiers",
    "relativize_one_param",
    "WitnessProfile",
    "ea_witness_bound",
    "ea_witness_profile",
]
