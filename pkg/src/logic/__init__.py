"""
Logic package for Submodel Lab.
Contains signatures, the formula AST and its syntactic algebra.
"""
from .classification import Classification, classify, is_monadic_like
from .errors import (
    BoundError,
    FormulaError,
    LogicError,
    ModelError,
    ParseError,
    SearchError,
    SignatureError,
    TransformError,
    UnboundVariableError,
)
from .operations import (
    RESERVED_PREFIX,
    TUPLE_PREFIX,
    all_variables,
    alpha_equivalent,
    alpha_normalize,
    atoms,
    check_formula,
    check_term,
    flatten,
    free_vars,
    fresh_variable,
    is_open,
    is_sentence,
    node_count,
    quantifier_depth,
    rename_bound,
    require_sentence,
    subformulas,
    substitute,
    substitute_term,
    uses_equality,
)
from .syntax import (
    FALSE,
    TRUE,
    And,
    Apply,
    Const,
    EqAtom,
    Exists,
    Forall,
    Formula,
    Not,
    Or,
    PredAtom,
    Signature,
    SymbolKind,
    Term,
    Var,
    conjunction,
    disjunction,
    implies,
    negate,
    term_variables,
)

__all__ = [
    "Classification",
    "classify",
    "is_monadic_like",
    "BoundError",
    "FormulaError",
    "LogicError",
    "ModelError",
    "ParseError",
    "SearchError",
    "SignatureError",
    "TransformError",
    "UnboundVariableError",
    "RESERVED_PREFIX",
    "TUPLE_PREFIX",
    "all_variables",
    "alpha_equivalent",
    "alpha_normalize",
    "atoms",
    "check_formula",
    "check_term",
    "flatten",
    "free_vars",
    "fresh_variable",
    "is_open",
    "is_sentence",
    "node_count",
    "quantifier_depth",
    "rename_bound",
    "require_sentence",
    "subformulas",
    "substitute",
    "substitute_term",
    "uses_equality",
    "FALSE",
    "TRUE",
    "And",
    "Apply",
    "Const",
    "EqAtom",
    "Exists",
    "Forall",
    "Formula",
    "Not",
    "Or",
    "PredAtom",
    "Signature",
    "SymbolKind",
    "Term",
    "Var",
    "conjunction",
    "disjunction",
    "implies",
    "negate",
    "term_variables",
]
