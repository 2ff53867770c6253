"""
Modal package for Submodel Lab.
The θ-family and θ* operators and the θ sentence builders.
"""
from .builders import (
    TUPLE_PREFIX,
    Theory,
    build_t_phi,
    build_theta_eq,
    build_theta_le,
    build_theta_lt,
    distinctness,
    relativize,
    submodel_formula,
    tuple_variables,
)
from .operators import (
    generated_subuniverses,
    theta_eq_sem,
    theta_gen_sem,
    theta_le_sem,
    theta_lt_sem,
    theta_sem,
    theta_star_sem,
    theta_star_witness,
    theta_witness,
)

__all__ = [
    "TUPLE_PREFIX",
    "Theory",
    "build_t_phi",
    "build_theta_eq",
    "build_theta_le",
    "build_theta_lt",
    "distinctness",
    "relativize",
    "submodel_formula",
    "tuple_variables",
    "generated_subuniverses",
    "theta_eq_sem",
    "theta_gen_sem",
    "theta_le_sem",
    "theta_lt_sem",
    "theta_sem",
    "theta_star_sem",
    "theta_star_witness",
    "theta_witness",
]
