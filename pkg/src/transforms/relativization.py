"""
Rewriting relativized quantifiers.

A quantifier relativized to a tuple X = (x0, ..., x_{n-1}) ranges over the
values of X only, so it can be replaced by a finite disjunction or
conjunction of substitution instances. The membership patterns recognised
here are exactly the ones ``src.modal.builders.relativize`` emits:

    ∃ys (δ ∧ M(ys))           M(ys) = ⋀_y ⋁_α y = x_α
    ∀ys (¬M(ys) ∨ δ)
"""
from itertools import product
from typing import Dict, Optional, Sequence, Tuple

from ..logic.errors import TransformError
from ..logic.operations import free_vars, is_open, subformulas, substitute, uses_equality
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
    Var,
    conjunction,
    disjunction,
)
from .normal_forms import simplify

Targets = Dict[str, Tuple[str, ...]]


def relativize_one_param(formula: Formula, variables: Sequence[str]) -> Formula:
    """
    (∃y δ)^X as ⋁ δ(x_α) and (∀y δ)^X as ⋀ δ(x_α).

    Raises:
        TransformError: not a one-variable quantifier over an open formula,
            or X is empty
    """
    variables = tuple(variables)
    if not variables:
        raise TransformError("relativization tuple must be nonempty")
    if not isinstance(formula, (Exists, Forall)) or len(formula.variables) != 1:
        raise TransformError(f"expected a one-variable quantifier: {formula}")
    (name,) = formula.variables
    body = formula.body
    if not is_open(body):
        raise TransformError(f"quantified formula is not open: {body}")
    if free_vars(body) - {name}:
        raise TransformError(f"quantified formula has more than one variable: {body}")

    instances = [substitute(body, {name: Var(x)}) for x in variables]
    if isinstance(formula, Exists):
        return disjunction(instances)
    return conjunction(instances)


# ----------------------------------------------------------------------
# Bounded quantifier expansion


def _membership_targets(node: Formula, name: str) -> Optional[Tuple[str, ...]]:
    """Targets of ``name = x0 ∨ name = x1 ∨ ...``, or None."""
    disjuncts = node.items if isinstance(node, Or) else (node,)
    targets = []
    for item in disjuncts:
        if not (isinstance(item, EqAtom)
                and item.left == Var(name)
                and isinstance(item.right, Var)):
            return None
        targets.append(item.right.name)
    return tuple(targets) if targets else None


def _block_targets(node: Formula, names: Tuple[str, ...]) -> Optional[Targets]:
    parts = node.items if len(names) > 1 and isinstance(node, And) else (node,)
    if len(parts) != len(names):
        return None
    targets: Targets = {}
    for name, part in zip(names, parts):
        found = _membership_targets(part, name)
        if found is None or set(found) & set(names):
            return None
        targets[name] = found
    return targets


def _instances(body: Formula, names: Tuple[str, ...], targets: Targets):
    for choice in product(*(targets[name] for name in names)):
        yield substitute(body, {name: Var(x) for name, x in zip(names, choice)})


def _expand(formula: Formula) -> Formula:
    if isinstance(formula, (PredAtom, EqAtom)):
        return formula
    if isinstance(formula, Not):
        return Not(_expand(formula.body))
    if isinstance(formula, (And, Or)):
        return type(formula)(tuple(_expand(i) for i in formula.items))

    body = _expand(formula.body)
    names = formula.variables
    if isinstance(formula, Exists) and isinstance(body, And) and body.items:
        targets = _block_targets(body.items[-1], names)
        if targets is not None:
            rest = conjunction(body.items[:-1]) if len(body.items) > 1 else And(())
            return disjunction(tuple(_instances(rest, names, targets)))
    if (isinstance(formula, Forall) and isinstance(body, Or) and body.items
            and isinstance(body.items[0], Not)):
        targets = _block_targets(body.items[0].body, names)
        if targets is not None:
            rest = disjunction(body.items[1:]) if len(body.items) > 1 else Or(())
            return conjunction(tuple(_instances(rest, names, targets)))
    return type(formula)(names, body)


def expand_bounded_quantifiers(formula: Formula) -> Formula:
    """
    Replace every relativized block by its finite expansion.

    Works for any signature; quantifiers without a membership pattern are
    kept. Constant (and) / (or) items left by the expansion are folded.
    """
    return simplify(_expand(formula))


# ----------------------------------------------------------------------
# Equality elimination


def _is_distinctness_clause(node: Formula) -> bool:
    if not isinstance(node, Not) or not isinstance(node.body, (Or, EqAtom)):
        return False
    items = node.body.items if isinstance(node.body, Or) else (node.body,)
    return bool(items) and all(
        isinstance(i, EqAtom) and isinstance(i.left, Var) and isinstance(i.right, Var)
        for i in items
    )


def _check_monadic_terms(formula: Formula) -> None:
    for node in subformulas(formula):
        if isinstance(node, PredAtom):
            if len(node.args) != 1:
                raise TransformError(f"predicate {node.predicate} is not unary")
            if isinstance(node.args[0], (Apply, Const)):
                raise TransformError("function and constant symbols are not monadic")
        elif isinstance(node, EqAtom):
            if not (isinstance(node.left, Var) and isinstance(node.right, Var)):
                raise TransformError("function and constant symbols are not monadic")


def eliminate_equality_monadic(formula: Formula) -> Formula:
    """
    Equality-free equivalent of a relativized formula over a purely monadic
    signature.

    Raises:
        TransformError: a distinctness clause is present, or equality is
            left outside the membership patterns
    """
    _check_monadic_terms(formula)
    if not uses_equality(formula):
        return formula
    result = expand_bounded_quantifiers(formula)
    if not uses_equality(result):
        return result
    # membership guards are gone at this point
    if any(_is_distinctness_clause(node) for node in subformulas(result)):
        raise TransformError(
            "distinctness clause found; the exact-size sentence needs "
            "build_theta_eq, not the monadic route"
        )
    raise TransformError("equality outside the relativization membership pattern")
