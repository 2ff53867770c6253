"""
Negation normal form.
"""
from typing import Tuple

from ..logic.errors import FormulaError
from ..logic.syntax import And, EqAtom, Exists, Forall, Formula, Not, Or, PredAtom


class NNFizer:
    """
    Pushes negations down to the atoms.

    Each rule either removes a negation or moves it strictly closer to
    the leaves, so rewriting terminates.
    """

    def convert(self, formula: Formula) -> Formula:
        return self._walk(formula, positive=True)

    def _walk(self, formula: Formula, positive: bool) -> Formula:
        if isinstance(formula, (PredAtom, EqAtom)):
            return formula if positive else Not(formula)
        if isinstance(formula, Not):
            return self._walk(formula.body, not positive)
        if isinstance(formula, (And, Or)):
            items = tuple(self._walk(i, positive) for i in formula.items)
            keep = isinstance(formula, And) == positive
            return And(items) if keep else Or(items)
        if isinstance(formula, (Exists, Forall)):
            body = self._walk(formula.body, positive)
            keep = isinstance(formula, Exists) == positive
            return Exists(formula.variables, body) if keep else Forall(formula.variables, body)
        raise FormulaError(f"unknown formula node: {formula!r}")


_NNF = NNFizer()


def nnf(formula: Formula) -> Formula:
    return _NNF.convert(formula)


def nnf_negated(formula: Formula) -> Formula:
    """nnf(¬formula)."""
    return _NNF._walk(formula, positive=False)


def top_conjuncts(formula: Formula) -> Tuple[Formula, ...]:
    """Items of nested top-level conjunctions."""
    if isinstance(formula, And):
        result = []
        for item in formula.items:
            result.extend(top_conjuncts(item))
        return tuple(result)
    return (formula,)


def is_literal(formula: Formula) -> bool:
    if isinstance(formula, Not):
        formula = formula.body
    return isinstance(formula, (PredAtom, EqAtom))


def simplify(formula: Formula) -> Formula:
    """
    Flatten connectives and fold the constants (and) / (or).

    Item order is preserved; single-item connectives are unwrapped and
    double negations removed.
    """
    if isinstance(formula, (PredAtom, EqAtom)):
        return formula
    if isinstance(formula, Not):
        body = simplify(formula.body)
        if isinstance(body, Not):
            return body.body
        if body == And(()):
            return Or(())
        if body == Or(()):
            return And(())
        return Not(body)
    if isinstance(formula, (Exists, Forall)):
        return type(formula)(formula.variables, simplify(formula.body))

    conjunctive = isinstance(formula, And)
    unit, absorbing = (And(()), Or(())) if conjunctive else (Or(()), And(()))
    items = []
    for item in formula.items:
        item = simplify(item)
        if item == absorbing:
            return absorbing
        if item == unit:
            continue
        if type(item) is type(formula):
            items.extend(item.items)
        else:
            items.append(item)
    if len(items) == 1:
        return items[0]
    return type(formula)(tuple(items))
