"""
Semantic θ-family and θ* operators on finite models.

θ(φ) holds in 𝔄 when some submodel (a nonempty closed subuniverse with
induced structure, 𝔄 itself included) satisfies φ. θ*(φ) holds when some
extension does; extensions are searched up to an explicit size bound.
"""
from itertools import combinations
from typing import Callable, FrozenSet, Iterator, Optional, Set

from ..logic.errors import BoundError
from ..logic.operations import check_formula, require_sentence
from ..logic.syntax import Formula
from ..models.finite_model import FiniteModel
from ..models.model_finder import enumerate_extensions
from ..models.semantics import closure, enumerate_subuniverses, evaluate

SizeFilter = Callable[[int], bool]


def _check_sentence(model: FiniteModel, formula: Formula) -> None:
    require_sentence(formula)
    check_formula(formula, model.signature.with_equality(True))


def _check_bound(n: int) -> None:
    if n < 1:
        raise BoundError("submodel bound must be >= 1")


def theta_witness(
    model: FiniteModel,
    formula: Formula,
    size_filter: Optional[SizeFilter] = None,
) -> Optional[FrozenSet[int]]:
    """
    Least subuniverse (by size, then lexicographically) whose submodel
    satisfies ``formula``, or None.
    """
    _check_sentence(model, formula)
    for elements in enumerate_subuniverses(model):
        if size_filter is not None and not size_filter(len(elements)):
            continue
        if evaluate(model.restrict(elements).model, formula):
            return elements
    return None


def theta_sem(model: FiniteModel, formula: Formula) -> bool:
    return theta_witness(model, formula) is not None


def theta_le_sem(model: FiniteModel, formula: Formula, n: int) -> bool:
    _check_bound(n)
    return theta_witness(model, formula, lambda size: size <= n) is not None


def theta_lt_sem(model: FiniteModel, formula: Formula, n: int) -> bool:
    _check_bound(n)
    return theta_witness(model, formula, lambda size: size < n) is not None


def theta_eq_sem(model: FiniteModel, formula: Formula, n: int) -> bool:
    _check_bound(n)
    return theta_witness(model, formula, lambda size: size == n) is not None


def generated_subuniverses(model: FiniteModel, n: int) -> Iterator[FrozenSet[int]]:
    """Distinct subuniverses generated by at most n elements."""
    seen: Set[FrozenSet[int]] = set()
    for count in range(1, min(n, model.size) + 1):
        for seeds in combinations(range(model.size), count):
            elements = closure(model, seeds)
            if elements not in seen:
                seen.add(elements)
                yield elements


def theta_gen_sem(model: FiniteModel, formula: Formula, n: int) -> bool:
    """Some submodel generated by at most n elements satisfies ``formula``."""
    _check_bound(n)
    _check_sentence(model, formula)
    return any(
        evaluate(model.restrict(elements).model, formula)
        for elements in generated_subuniverses(model, n)
    )


def theta_star_witness(model: FiniteModel, formula: Formula, bound: int) -> Optional[FiniteModel]:
    """
    First extension of ``model`` with at most ``bound`` elements satisfying
    ``formula``.

    Raises:
        BoundError: bound is below the model size
    """
    _check_sentence(model, formula)
    if bound < model.size:
        raise BoundError(f"extension bound {bound} is below the model size {model.size}")
    if bound == model.size:
        # the only extension within the bound is the model itself
        return model if evaluate(model, formula) else None
    return next(enumerate_extensions(model, bound, prune=formula), None)


def theta_star_sem(model: FiniteModel, formula: Formula, bound: int) -> bool:
    return theta_star_witness(model, formula, bound) is not None
