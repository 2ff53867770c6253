"""
Witness bounds for combinations of prenex ∃∀ sentences.

A model of an ∃∀-combination satisfies some selection of its components
(one disjunct per disjunction, every conjunct of a conjunction). The
witnesses of the selected existential blocks generate a submodel that still
satisfies the sentence, so the sum of the selected block widths bounds the
generators needed. The reported bound is the maximum over selections.
"""
from dataclasses import dataclass
from itertools import product
from typing import List, Tuple

from ..logic.classification import classify
from ..logic.errors import TransformError
from ..logic.syntax import And, Formula, Or
from .normal_forms import nnf


@dataclass(frozen=True)
class WitnessProfile:
    """Witness bound of an ∃∀-combination with its diagnostics."""
    raw: int
    bound: int
    adjusted: bool
    selections: Tuple[int, ...]


def _selection_widths(formula: Formula) -> List[int]:
    """Sum of existential widths for every disjunct selection."""
    if isinstance(formula, Or):
        widths: List[int] = []
        for item in formula.items:
            widths.extend(_selection_widths(item))
        return widths
    if isinstance(formula, And):
        parts = [_selection_widths(item) for item in formula.items]
        return [sum(choice) for choice in product(*parts)]
    width = classify(formula).existential_width
    if width is None:
        raise TransformError(f"component is not a prenex ∃∀ sentence: {formula}")
    return [width]


def ea_witness_profile(formula: Formula) -> WitnessProfile:
    """
    Witness bound with the per-selection vector.

    Raises:
        TransformError: formula is not an ∃∀-combination after nnf
    """
    normal = nnf(formula)
    if not classify(normal).is_ea_combination:
        raise TransformError(f"not an ∃∀-combination: {formula}")
    selections = tuple(_selection_widths(normal))
    raw = max(selections, default=0)
    bound = max(raw, 1)
    return WitnessProfile(raw=raw, bound=bound, adjusted=bound != raw, selections=selections)


def ea_witness_bound(formula: Formula) -> int:
    """Reported witness bound, at least 1."""
    return ea_witness_profile(formula).bound
