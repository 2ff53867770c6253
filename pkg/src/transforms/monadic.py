"""
Monadic-like normal form and the closed-form θ sentence over monadic
signatures.

In a monadic-like formula every atom mentions at most one variable, so an
existential quantifier can always be pushed past material that does not
mention its variable. The normal form is a Boolean combination of
one-variable units ∃y δ(y) with δ open, plus open atoms in the free
variables. Universal blocks are written ¬∃¬.

Rewriting rules for ∃v over a formula F in negation normal form over units:

    v not free in F            ->  F
    F literal                  ->  ∃v F
    F = ⋁ Fi                   ->  ⋁ ∃v Fi
    F = ⋀ Fi, one Fi mentions v ->  replace that Fi by ∃v Fi
    F = ⋀ Fi, all v-items open in v alone -> group them under one ∃v
    otherwise                  ->  distribute over the first mixed ⋁ item

Each rule either removes ∃v, moves it strictly inward, or distributes the
conjunction so that the mixed disjunction disappears from the scope.
"""
from typing import List, Optional, Sequence, Tuple

from ..logic.classification import is_monadic_like
from ..logic.errors import TransformError
from ..logic.operations import (
    TUPLE_PREFIX,
    free_vars,
    is_open,
    require_sentence,
    subformulas,
)
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
    Signature,
    conjunction,
)
from .normal_forms import nnf, simplify
from .relativization import relativize_one_param
from .witness_bound import ea_witness_bound


def _is_unit(formula: Formula) -> bool:
    return isinstance(formula, Exists)


def _unit_nnf(formula: Formula, positive: bool = True) -> Formula:
    """Negation normal form treating atoms and units as literals."""
    if isinstance(formula, (PredAtom, EqAtom)) or _is_unit(formula):
        return formula if positive else Not(formula)
    if isinstance(formula, Not):
        return _unit_nnf(formula.body, not positive)
    if isinstance(formula, (And, Or)):
        items = tuple(_unit_nnf(i, positive) for i in formula.items)
        keep = isinstance(formula, And) == positive
        return And(items) if keep else Or(items)
    raise TransformError(f"unexpected node in monadic normal form: {formula}")


def _open_in(formula: Formula, name: str) -> bool:
    return is_open(formula) and free_vars(formula) == {name}


def _conjuncts(formula: And) -> List[Formula]:
    items: List[Formula] = []
    for item in formula.items:
        if isinstance(item, And):
            items.extend(_conjuncts(item))
        else:
            items.append(item)
    return items


def _push_exists(name: str, formula: Formula) -> Formula:
    if name not in free_vars(formula):
        return formula
    if isinstance(formula, Or):
        return Or(tuple(_push_exists(name, i) for i in formula.items))
    if not isinstance(formula, And):
        # literal in ``name``
        return Exists((name,), formula)

    items = _conjuncts(formula)
    mentioning = [i for i, item in enumerate(items) if name in free_vars(item)]
    if len(mentioning) == 1:
        (index,) = mentioning
        items[index] = _push_exists(name, items[index])
        return conjunction(items)

    if all(_open_in(items[i], name) for i in mentioning):
        unit = Exists((name,), conjunction([items[i] for i in mentioning]))
        first = mentioning[0]
        grouped = [unit if i == first else item
                   for i, item in enumerate(items) if i == first or i not in mentioning]
        return conjunction(grouped)

    split = next(i for i in mentioning if isinstance(items[i], Or) and not _open_in(items[i], name))
    branches = tuple(
        conjunction(items[:split] + [choice] + items[split + 1:])
        for choice in items[split].items
    )
    return _push_exists(name, Or(branches))


def _exists_block(names: Sequence[str], body: Formula) -> Formula:
    result = _unit_nnf(body)
    for name in reversed(tuple(names)):
        result = _push_exists(name, result)
    return result


def _normalize(formula: Formula) -> Formula:
    if isinstance(formula, (PredAtom, EqAtom)):
        return formula
    if isinstance(formula, Not):
        return Not(_normalize(formula.body))
    if isinstance(formula, (And, Or)):
        return type(formula)(tuple(_normalize(i) for i in formula.items))
    body = _normalize(formula.body)
    if isinstance(formula, Exists):
        return _exists_block(formula.variables, body)
    return Not(_exists_block(formula.variables, Not(body)))


def normalize_monadic(formula: Formula) -> Formula:
    """
    Boolean combination of one-variable existential units.

    Raises:
        TransformError: formula is not monadic-like
    """
    if not is_monadic_like(formula):
        raise TransformError(f"not monadic-like: {formula}")
    return simplify(_normalize(formula))


def is_monadic_normal_form(formula: Formula) -> bool:
    """No quantifier nests another and every block has one variable."""
    for node in subformulas(formula):
        if isinstance(node, Forall):
            return False
        if isinstance(node, Exists):
            if len(node.variables) != 1 or not is_open(node.body):
                return False
    return True


# ----------------------------------------------------------------------
# Closed-form θ over purely monadic signatures


def _check_monadic_signature(formula: Formula, signature: Optional[Signature]) -> None:
    if signature is not None:
        if not signature.purely_monadic:
            raise TransformError("signature is not purely monadic")
        if signature.equality_allowed:
            raise TransformError("signature allows equality")
    for node in subformulas(formula):
        if isinstance(node, EqAtom):
            raise TransformError("equality is not allowed on the monadic route")
        if isinstance(node, PredAtom):
            if len(node.args) != 1 or isinstance(node.args[0], (Apply, Const)):
                raise TransformError(f"atom {node} is not purely monadic")


def _relativize_units(formula: Formula, variables: Tuple[str, ...]) -> Formula:
    if _is_unit(formula):
        return relativize_one_param(formula, variables)
    if isinstance(formula, Not):
        return Not(_relativize_units(formula.body, variables))
    if isinstance(formula, (And, Or)):
        return type(formula)(tuple(_relativize_units(i, variables) for i in formula.items))
    return formula


def build_theta_monadic(formula: Formula, signature: Optional[Signature] = None) -> Formula:
    """
    Equality-free sentence equivalent to θ(formula) on every model of a
    purely monadic signature.

    Args:
        formula: Sentence over a purely monadic, equality-free signature
        signature: Ambient signature; when omitted only the atoms are checked

    Raises:
        TransformError: signature not purely monadic or has equality
    """
    require_sentence(formula)
    _check_monadic_signature(formula, signature)

    normal = normalize_monadic(nnf(formula))
    width = ea_witness_bound(nnf(normal))
    variables = tuple(f"{TUPLE_PREFIX}{i}" for i in range(width))
    relativized = Exists(variables, _relativize_units(normal, variables))
    return normalize_monadic(relativized)
