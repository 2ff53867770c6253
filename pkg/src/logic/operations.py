"""
Syntactic algebra on formulas.
Free variables, capture-avoiding substitution, well-formedness,
flattening and alpha-normalization.
"""
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Set

from .errors import FormulaError
from .syntax import (
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
    Term,
    Var,
    term_variables,
)

# Prefix of generated bound variable names.
RESERVED_PREFIX = "_"

# Tuple variables x0, x1, ... of the θ sentence builders.
TUPLE_PREFIX = "x"


def free_vars(formula: Formula) -> FrozenSet[str]:
    """Variables with at least one free occurrence."""
    if isinstance(formula, PredAtom):
        result = frozenset()
        for arg in formula.args:
            result |= term_variables(arg)
        return result
    if isinstance(formula, EqAtom):
        return term_variables(formula.left) | term_variables(formula.right)
    if isinstance(formula, Not):
        return free_vars(formula.body)
    if isinstance(formula, (And, Or)):
        result = frozenset()
        for item in formula.items:
            result |= free_vars(item)
        return result
    if isinstance(formula, (Exists, Forall)):
        return free_vars(formula.body) - frozenset(formula.variables)
    raise FormulaError(f"unknown formula node: {formula!r}")


def is_sentence(formula: Formula) -> bool:
    return not free_vars(formula)


def require_sentence(formula: Formula) -> None:
    free = free_vars(formula)
    if free:
        raise FormulaError(f"expected a sentence; free variables {sorted(free)}")


def all_variables(formula: Formula) -> FrozenSet[str]:
    """Every variable name occurring in ``formula``, free or bound."""
    if isinstance(formula, (PredAtom, EqAtom)):
        return free_vars(formula)
    if isinstance(formula, Not):
        return all_variables(formula.body)
    if isinstance(formula, (And, Or)):
        result = frozenset()
        for item in formula.items:
            result |= all_variables(item)
        return result
    return all_variables(formula.body) | frozenset(formula.variables)


def subformulas(formula: Formula) -> Iterator[Formula]:
    """Pre-order traversal."""
    yield formula
    if isinstance(formula, Not):
        yield from subformulas(formula.body)
    elif isinstance(formula, (And, Or)):
        for item in formula.items:
            yield from subformulas(item)
    elif isinstance(formula, (Exists, Forall)):
        yield from subformulas(formula.body)


def atoms(formula: Formula) -> Iterator[Formula]:
    for node in subformulas(formula):
        if isinstance(node, (PredAtom, EqAtom)):
            yield node


def uses_equality(formula: Formula) -> bool:
    return any(isinstance(a, EqAtom) for a in atoms(formula))


def is_open(formula: Formula) -> bool:
    return not any(isinstance(n, (Exists, Forall)) for n in subformulas(formula))


def quantifier_depth(formula: Formula) -> int:
    """Nesting depth of quantified variables; a block of k variables counts k."""
    if isinstance(formula, (PredAtom, EqAtom)):
        return 0
    if isinstance(formula, Not):
        return quantifier_depth(formula.body)
    if isinstance(formula, (And, Or)):
        return max((quantifier_depth(i) for i in formula.items), default=0)
    return len(formula.variables) + quantifier_depth(formula.body)


def _term_size(term: Term) -> int:
    if isinstance(term, Apply):
        return 1 + sum(_term_size(a) for a in term.args)
    return 1


def node_count(formula: Formula) -> int:
    """Formula and term nodes."""
    if isinstance(formula, PredAtom):
        return 1 + sum(_term_size(a) for a in formula.args)
    if isinstance(formula, EqAtom):
        return 1 + _term_size(formula.left) + _term_size(formula.right)
    if isinstance(formula, Not):
        return 1 + node_count(formula.body)
    if isinstance(formula, (And, Or)):
        return 1 + sum(node_count(i) for i in formula.items)
    return 1 + node_count(formula.body)


# ----------------------------------------------------------------------
# Well-formedness


def check_term(term: Term, signature: Signature) -> None:
    if isinstance(term, Var):
        if signature.kind_of(term.name) is not None:
            raise FormulaError(f"variable {term.name} clashes with a declared symbol")
        return
    if isinstance(term, Const):
        if term.name not in signature.constants:
            raise FormulaError(f"unknown constant: {term.name}")
        return
    if isinstance(term, Apply):
        arity = signature.functions.get(term.function)
        if arity is None:
            raise FormulaError(f"unknown function: {term.function}")
        if arity != len(term.args):
            raise FormulaError(
                f"arity mismatch for {term.function}: expected {arity}, got {len(term.args)}"
            )
        for arg in term.args:
            check_term(arg, signature)
        return
    raise FormulaError(f"unknown term node: {term!r}")


def check_formula(formula: Formula, signature: Signature) -> None:
    """Raise FormulaError unless ``formula`` is well formed over ``signature``."""
    if isinstance(formula, PredAtom):
        arity = signature.predicates.get(formula.predicate)
        if arity is None:
            raise FormulaError(f"unknown predicate: {formula.predicate}")
        if arity != len(formula.args):
            raise FormulaError(
                f"arity mismatch for {formula.predicate}: expected {arity}, got {len(formula.args)}"
            )
        for arg in formula.args:
            check_term(arg, signature)
    elif isinstance(formula, EqAtom):
        if not signature.equality_allowed:
            raise FormulaError("equality used in an equality-free signature")
        check_term(formula.left, signature)
        check_term(formula.right, signature)
    elif isinstance(formula, Not):
        check_formula(formula.body, signature)
    elif isinstance(formula, (And, Or)):
        for item in formula.items:
            check_formula(item, signature)
    elif isinstance(formula, (Exists, Forall)):
        for name in formula.variables:
            if signature.kind_of(name) is not None:
                raise FormulaError(f"bound variable {name} clashes with a declared symbol")
        check_formula(formula.body, signature)
    else:
        raise FormulaError(f"unknown formula node: {formula!r}")


# ----------------------------------------------------------------------
# Substitution


def fresh_variable(base: str, avoid: Iterable[str]) -> str:
    """Prime ``base`` until it avoids every name in ``avoid``."""
    avoid = set(avoid)
    candidate = base + "'"
    while candidate in avoid:
        candidate += "'"
    return candidate


def substitute_term(term: Term, mapping: Mapping[str, Term]) -> Term:
    if isinstance(term, Var):
        return mapping.get(term.name, term)
    if isinstance(term, Apply):
        return Apply(term.function, tuple(substitute_term(a, mapping) for a in term.args))
    return term


def substitute(
    formula: Formula,
    mapping: Mapping[str, Term],
    signature: Optional[Signature] = None,
) -> Formula:
    """
    Replace free occurrences of variables by terms.

    Bound variables that would capture a variable of an incoming term are
    renamed with ``fresh_variable``.

    Args:
        formula: Formula to rewrite
        mapping: Variable name to replacement term
        signature: When given, replacement terms are checked against it
    """
    if signature is not None:
        for term in mapping.values():
            check_term(term, signature)
    return _substitute(formula, dict(mapping))


def _substitute(formula: Formula, mapping: Dict[str, Term]) -> Formula:
    if not mapping:
        return formula
    if isinstance(formula, PredAtom):
        return PredAtom(formula.predicate, tuple(substitute_term(a, mapping) for a in formula.args))
    if isinstance(formula, EqAtom):
        return EqAtom(substitute_term(formula.left, mapping), substitute_term(formula.right, mapping))
    if isinstance(formula, Not):
        return Not(_substitute(formula.body, mapping))
    if isinstance(formula, (And, Or)):
        return type(formula)(tuple(_substitute(i, mapping) for i in formula.items))

    body_free = free_vars(formula.body)
    inner = {
        v: t for v, t in mapping.items()
        if v not in formula.variables and v in body_free
    }
    if not inner:
        return formula

    incoming: Set[str] = set()
    for term in inner.values():
        incoming |= term_variables(term)
    avoid = incoming | set(all_variables(formula.body)) | set(inner)

    renaming: Dict[str, Term] = {}
    variables = []
    for name in formula.variables:
        if name in incoming:
            fresh = fresh_variable(name, avoid)
            avoid.add(fresh)
            renaming[name] = Var(fresh)
            variables.append(fresh)
        else:
            variables.append(name)

    body = _substitute(formula.body, renaming) if renaming else formula.body
    return type(formula)(tuple(variables), _substitute(body, inner))


def rename_bound(formula: Formula, avoid: Iterable[str]) -> Formula:
    """Alpha-rename every bound variable that occurs in ``avoid``."""
    avoid = set(avoid)
    if isinstance(formula, (PredAtom, EqAtom)):
        return formula
    if isinstance(formula, Not):
        return Not(rename_bound(formula.body, avoid))
    if isinstance(formula, (And, Or)):
        return type(formula)(tuple(rename_bound(i, avoid) for i in formula.items))

    taken = avoid | set(all_variables(formula))
    renaming: Dict[str, Term] = {}
    variables = []
    for name in formula.variables:
        if name in avoid:
            fresh = fresh_variable(name, taken)
            taken.add(fresh)
            renaming[name] = Var(fresh)
            variables.append(fresh)
        else:
            variables.append(name)
    body = _substitute(formula.body, renaming) if renaming else formula.body
    return type(formula)(tuple(variables), rename_bound(body, avoid))


# ----------------------------------------------------------------------
# Comparison helpers


def flatten(formula: Formula) -> Formula:
    """Merge nested same-kind connectives and adjacent same-kind blocks."""
    if isinstance(formula, (PredAtom, EqAtom)):
        return formula
    if isinstance(formula, Not):
        return Not(flatten(formula.body))
    if isinstance(formula, (And, Or)):
        merged = []
        for item in formula.items:
            item = flatten(item)
            if type(item) is type(formula):
                merged.extend(item.items)
            else:
                merged.append(item)
        if len(merged) == 1:
            return merged[0]
        return type(formula)(tuple(merged))

    body = flatten(formula.body)
    if type(body) is type(formula) and not set(body.variables) & set(formula.variables):
        return type(formula)(formula.variables + body.variables, body.body)
    return type(formula)(formula.variables, body)


def alpha_normalize(formula: Formula) -> Formula:
    """Rename bound variables to ``_b0, _b1, ...`` in pre-order."""
    counter = [0]

    def walk(node: Formula, env: Dict[str, Term]) -> Formula:
        if isinstance(node, (PredAtom, EqAtom)):
            return _substitute(node, env)
        if isinstance(node, Not):
            return Not(walk(node.body, env))
        if isinstance(node, (And, Or)):
            return type(node)(tuple(walk(i, env) for i in node.items))
        inner = dict(env)
        names = []
        for name in node.variables:
            fresh = f"{RESERVED_PREFIX}b{counter[0]}"
            counter[0] += 1
            inner[name] = Var(fresh)
            names.append(fresh)
        return type(node)(tuple(names), walk(node.body, inner))

    return walk(formula, {})


def alpha_equivalent(left: Formula, right: Formula) -> bool:
    return alpha_normalize(left) == alpha_normalize(right)
