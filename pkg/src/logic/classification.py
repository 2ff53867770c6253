"""
Syntactic classification of formulas.

Quantifiers and connectives are read with their effective polarity, so a
negated universal block counts as existential and a negated conjunction as
a disjunction. Classes are therefore stable under negation normal form.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from .operations import atoms, free_vars, is_open, uses_equality
from .syntax import And, Exists, Forall, Formula, Not, Or


@dataclass(frozen=True)
class Classification:
    """Syntactic class record of a formula."""
    is_open: bool
    is_existential: bool
    is_universal: bool
    is_sigma2: bool
    is_ea_combination: bool
    is_monadic_like: bool
    uses_equality: bool
    existential_width: Optional[int] = None  # set only when is_sigma2


def _strip_negations(formula: Formula, positive: bool) -> Tuple[Formula, bool]:
    while isinstance(formula, Not):
        formula = formula.body
        positive = not positive
    return formula, positive


def _is_existential_block(formula: Formula, positive: bool) -> bool:
    return isinstance(formula, Exists) == positive


def _has_effective(formula: Formula, positive: bool, existential: bool) -> bool:
    """True if some quantifier block acts existentially (or universally)."""
    formula, positive = _strip_negations(formula, positive)
    if isinstance(formula, (And, Or)):
        return any(_has_effective(i, positive, existential) for i in formula.items)
    if isinstance(formula, (Exists, Forall)):
        if _is_existential_block(formula, positive) == existential:
            return True
        return _has_effective(formula.body, positive, existential)
    return False


def _sigma2_width(formula: Formula, positive: bool, universal_phase: bool = False) -> Optional[int]:
    """Width of the leading existential prefix, or None if not prenex Σ2."""
    formula, positive = _strip_negations(formula, positive)
    if is_open(formula):
        return 0
    if not isinstance(formula, (Exists, Forall)):
        return None
    if _is_existential_block(formula, positive):
        if universal_phase:
            return None
        inner = _sigma2_width(formula.body, positive, False)
        return None if inner is None else len(formula.variables) + inner
    inner = _sigma2_width(formula.body, positive, True)
    return None if inner is None else 0


def _is_ea_combination(formula: Formula, positive: bool) -> bool:
    formula, positive = _strip_negations(formula, positive)
    if isinstance(formula, (And, Or)):
        return all(_is_ea_combination(i, positive) for i in formula.items)
    return _sigma2_width(formula, positive) is not None


def is_monadic_like(formula: Formula) -> bool:
    """Every atomic subformula mentions at most one variable."""
    return all(len(free_vars(atom)) <= 1 for atom in atoms(formula))


def classify(formula: Formula) -> Classification:
    width = _sigma2_width(formula, True)
    return Classification(
        is_open=is_open(formula),
        is_existential=not _has_effective(formula, True, existential=False),
        is_universal=not _has_effective(formula, True, existential=True),
        is_sigma2=width is not None,
        is_ea_combination=_is_ea_combination(formula, True),
        is_monadic_like=is_monadic_like(formula),
        uses_equality=uses_equality(formula),
        existential_width=width,
    )
