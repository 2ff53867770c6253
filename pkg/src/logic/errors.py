"""
Error types shared by every Submodel Lab package.
"""
from typing import Optional


class LogicError(ValueError):
    """Base class for all domain errors."""


class SignatureError(LogicError):
    """Invalid or inconsistent signature."""


class FormulaError(LogicError):
    """Ill-formed formula, or a formula used where a sentence is required."""


class UnboundVariableError(FormulaError):
    """A free variable has no value in the assignment."""

    def __init__(self, variable: str):
        super().__init__(f"unbound free variable: {variable}")
        self.variable = variable


class ParseError(LogicError):
    """Malformed input text; carries the offending line when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class ModelError(LogicError):
    """A finite model violates its totality or range invariants."""


class BoundError(LogicError):
    """A size or extension bound is out of range."""


class TransformError(LogicError):
    """A rewrite was applied outside its precondition."""


class SearchError(LogicError):
    """Model search was configured inconsistently."""
