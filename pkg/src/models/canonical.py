"""
Isomorphism reduction via canonical forms.
Used for reporting counts only.
"""
from itertools import permutations
from typing import Iterable, Set

from .finite_model import FiniteModel


def canonical_form(model: FiniteModel) -> FiniteModel:
    """Lexicographically least relabelling of ``model``."""
    best = model
    best_key = model.sort_key()
    for permutation in permutations(range(model.size)):
        candidate = model.relabel(permutation)
        key = candidate.sort_key()
        if key < best_key:
            best, best_key = candidate, key
    return best


def are_isomorphic(left: FiniteModel, right: FiniteModel) -> bool:
    if left.signature != right.signature or left.size != right.size:
        return False
    return canonical_form(left) == canonical_form(right)


def count_isomorphism_classes(models: Iterable[FiniteModel]) -> int:
    seen: Set[FiniteModel] = set()
    for model in models:
        seen.add(canonical_form(model))
    return len(seen)
