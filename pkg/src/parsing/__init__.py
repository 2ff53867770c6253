"""
Parsing package for Submodel Lab.
Text formats for signatures (.sig), formulas (.fml) and models (.mdl).
"""
from .documents import DocumentKind, SourceDocument, load_document
from .formula_parser import FormulaBuilder, infer_signature, parse_formula, parse_formulas
from .model_parser import ModelParser, parse_model
from .render import render_formula, render_model, render_signature
from .signature_parser import SignatureParser, parse_signature

__all__ = [
    "DocumentKind",
    "SourceDocument",
    "load_document",
    "FormulaBuilder",
    "infer_signature",
    "parse_formula",
    "parse_formulas",
    "ModelParser",
    "parse_model",
    "render_formula",
    "render_model",
    "render_signature",
    "SignatureParser",
    "parse_signature",
]
