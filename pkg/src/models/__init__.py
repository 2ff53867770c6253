"""
Models package for Submodel Lab.
Finite structures, satisfaction, and submodel/extension/model search.
"""
from .canonical import are_isomorphic, canonical_form, count_isomorphism_classes
from .finite_model import FiniteModel, Submodel, model_from_rows
from .model_finder import (
    ModelFinder,
    SearchStats,
    enumerate_extensions,
    enumerate_models,
    enumerate_models_up_to,
    model_cells,
)
from .semantics import (
    closure,
    enumerate_submodels,
    enumerate_subuniverses,
    evaluate,
    evaluate_term,
    generated_submodel,
)

__all__ = [
    "are_isomorphic",
    "canonical_form",
    "count_isomorphism_classes",
    "FiniteModel",
    "Submodel",
    "model_from_rows",
    "ModelFinder",
    "SearchStats",
    "enumerate_extensions",
    "enumerate_models",
    "enumerate_models_up_to",
    "model_cells",
    "closure",
    "enumerate_submodels",
    "enumerate_subuniverses",
    "evaluate",
    "evaluate_term",
    "generated_submodel",
]
