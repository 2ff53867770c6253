"""
Tarski semantics and submodel enumeration.
"""
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Set

from ..logic.errors import FormulaError, ModelError, UnboundVariableError
from ..logic.operations import free_vars
from ..logic.syntax import (
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
    Term,
    Var,
)
from .finite_model import FiniteModel, Submodel

Assignment = Mapping[str, int]

_MISSING = object()


def evaluate_term(model: FiniteModel, term: Term, assignment: Dict[str, int]) -> int:
    if isinstance(term, Var):
        try:
            return assignment[term.name]
        except KeyError:
            raise UnboundVariableError(term.name) from None
    if isinstance(term, Const):
        return model.const_vals[term.name]
    if isinstance(term, Apply):
        args = tuple(evaluate_term(model, a, assignment) for a in term.args)
        return model.func_tables[term.function][args]
    raise FormulaError(f"unknown term node: {term!r}")


def evaluate(model: FiniteModel, formula: Formula, assignment: Optional[Assignment] = None) -> bool:
    """
    Truth value of ``formula`` in ``model`` under ``assignment``.

    Raises:
        UnboundVariableError: a free variable has no value
    """
    env = dict(assignment or {})
    missing = free_vars(formula) - env.keys()
    if missing:
        raise UnboundVariableError(sorted(missing)[0])
    return _evaluate(model, formula, env)


def _evaluate(model: FiniteModel, formula: Formula, env: Dict[str, int]) -> bool:
    if isinstance(formula, PredAtom):
        args = tuple(evaluate_term(model, a, env) for a in formula.args)
        return args in model.relations[formula.predicate]
    if isinstance(formula, EqAtom):
        return evaluate_term(model, formula.left, env) == evaluate_term(model, formula.right, env)
    if isinstance(formula, Not):
        return not _evaluate(model, formula.body, env)
    if isinstance(formula, And):
        return all(_evaluate(model, item, env) for item in formula.items)
    if isinstance(formula, Or):
        return any(_evaluate(model, item, env) for item in formula.items)
    if isinstance(formula, (Exists, Forall)):
        names = formula.variables
        saved = [env.get(name, _MISSING) for name in names]
        existential = isinstance(formula, Exists)
        result = not existential
        for values in product(range(model.size), repeat=len(names)):
            env.update(zip(names, values))
            if _evaluate(model, formula.body, env) == existential:
                result = existential
                break
        for name, old in zip(names, saved):
            if old is _MISSING:
                env.pop(name, None)
            else:
                env[name] = old
        return result
    raise FormulaError(f"unknown formula node: {formula!r}")


# ----------------------------------------------------------------------
# Submodels


def closure(model: FiniteModel, seeds: Iterable[int]) -> FrozenSet[int]:
    """Least superset of ``seeds`` holding the constants and closed under the tables."""
    elements: Set[int] = set(seeds) | set(model.const_vals.values())
    changed = True
    while changed:
        changed = False
        for name, arity in model.signature.functions.items():
            table = model.func_tables[name]
            for args in product(sorted(elements), repeat=arity):
                value = table[args]
                if value not in elements:
                    elements.add(value)
                    changed = True
    return frozenset(elements)


def generated_submodel(model: FiniteModel, seeds: Iterable[int]) -> Submodel:
    seeds = set(seeds)
    if not seeds:
        raise ModelError("seed set must be nonempty")
    for seed in seeds:
        if not 0 <= seed < model.size:
            raise ModelError(f"seed {seed} outside the universe")
    return model.restrict(closure(model, seeds))


def enumerate_subuniverses(model: FiniteModel) -> Iterator[FrozenSet[int]]:
    """Closed nonempty subsets, by size and then lexicographically."""
    for size in range(1, model.size + 1):
        for subset in combinations(range(model.size), size):
            elements = frozenset(subset)
            if model.is_closed(elements):
                yield elements


def enumerate_submodels(model: FiniteModel) -> Iterator[Submodel]:
    for elements in enumerate_subuniverses(model):
        yield model.restrict(elements)
