"""
Syntactic constructions for the submodel modality.

``build_theta_le(φ, n)`` is the sentence

    ∃x0..x_{n-1} (ψ(x0..x_{n-1}) ∧ φ^X)

where ψ says that {x0..x_{n-1}} is closed under every function and
constant of the signature and φ^X is φ with its quantifiers relativized to
that set. Tuple variables are always ``x0, x1, ...``; bound variables of φ
that clash with them are primed.
"""
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from ..logic.errors import BoundError, FormulaError, SignatureError
from ..logic.operations import (
    TUPLE_PREFIX,
    check_formula,
    rename_bound,
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
    Term,
    Var,
    conjunction,
    disjunction,
)
from ..models.finite_model import FiniteModel
from ..models.semantics import evaluate
from ..transforms.normal_forms import nnf
from ..transforms.relativization import expand_bounded_quantifiers


@dataclass(frozen=True)
class Theory:
    """A finite sequence of sentences over one signature."""
    sentences: Tuple[Formula, ...]
    signature: Optional[Signature] = None

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        for sentence in self.sentences:
            require_sentence(sentence)
            if self.signature is not None:
                check_formula(sentence, self.signature)

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.sentences)

    def holds_in(self, model: FiniteModel) -> bool:
        return all(evaluate(model, s) for s in self.sentences)

    def failing(self, model: FiniteModel) -> List[int]:
        """Indices of members false in ``model``."""
        return [i for i, s in enumerate(self.sentences) if not evaluate(model, s)]

    def as_formula(self) -> Formula:
        return conjunction(self.sentences) if self.sentences else And(())


def tuple_variables(n: int) -> Tuple[str, ...]:
    return tuple(f"{TUPLE_PREFIX}{i}" for i in range(n))


# ----------------------------------------------------------------------
# Relativization


def _membership(names: Sequence[str], variables: Tuple[str, ...]) -> Formula:
    return conjunction(
        disjunction(EqAtom(Var(y), Var(x)) for x in variables) for y in names
    )


def _relativize(formula: Formula, variables: Tuple[str, ...]) -> Formula:
    if isinstance(formula, (PredAtom, EqAtom)):
        return formula
    if isinstance(formula, Not):
        return Not(_relativize(formula.body, variables))
    if isinstance(formula, (And, Or)):
        return type(formula)(tuple(_relativize(i, variables) for i in formula.items))
    body = _relativize(formula.body, variables)
    guard = _membership(formula.variables, variables)
    if isinstance(formula, Exists):
        return Exists(formula.variables, And((body, guard)))
    return Forall(formula.variables, Or((Not(guard), body)))


def relativize(formula: Formula, variables: Sequence[str]) -> Formula:
    """
    φ^X: every quantifier of φ restricted to the values of X.

    Atoms are unchanged and connectives commute. An ∃-block acquires the
    membership conjunct ⋀_y ⋁_α y = x_α; ∀-blocks and disjunctions use
    the dual forms. Bound variables of φ that occur in X are renamed.

    Raises:
        FormulaError: X is empty or repeats a variable
    """
    variables = tuple(variables)
    if not variables:
        raise FormulaError("relativization tuple must be nonempty")
    if len(set(variables)) != len(variables):
        raise FormulaError(f"relativization tuple repeats a variable: {variables}")
    return _relativize(rename_bound(formula, variables), variables)


# ----------------------------------------------------------------------
# Submodel sentences


def _symbol_signature(formula: Formula) -> Signature:
    functions = {}
    constants = set()

    def visit(term: Term) -> None:
        if isinstance(term, Apply):
            functions[term.function] = len(term.args)
            for arg in term.args:
                visit(arg)
        elif isinstance(term, Const):
            constants.add(term.name)

    for node in subformulas(formula):
        if isinstance(node, PredAtom):
            for arg in node.args:
                visit(arg)
        elif isinstance(node, EqAtom):
            visit(node.left)
            visit(node.right)
    return Signature(functions=functions, constants=frozenset(constants))


def submodel_formula(signature: Signature, n: int) -> Formula:
    """
    ψ(x0..x_{n-1}): the values of the tuple form a subuniverse.

    One disjunction ⋁_γ f(args) = x_γ per function or constant symbol and
    argument tuple drawn from X. ``(and)`` when the signature is relational.
    """
    if n < 1:
        raise BoundError("tuple length must be >= 1")
    variables = tuple_variables(n)
    clauses = []
    for name, arity in signature.fnc:
        if arity == 0:
            terms: List[Term] = [Const(name)]
        else:
            terms = [
                Apply(name, tuple(Var(a) for a in args))
                for args in product(variables, repeat=arity)
            ]
        for term in terms:
            clauses.append(disjunction(EqAtom(term, Var(x)) for x in variables))
    return conjunction(clauses) if clauses else And(())


def _resolve_signature(formula: Formula, signature: Optional[Signature]) -> Signature:
    return signature if signature is not None else _symbol_signature(formula)


def _check_builder_input(formula: Formula, n: int) -> None:
    require_sentence(formula)
    if n < 1:
        raise BoundError("submodel size bound must be >= 1")


def build_theta_le(formula: Formula, n: int, signature: Optional[Signature] = None) -> Formula:
    """
    Sentence true in exactly the models with a submodel of size <= n
    satisfying ``formula``.

    Args:
        formula: Sentence φ
        n: Size bound, at least 1
        signature: Ambient signature; its functions and constants define
            closure. Defaults to the symbols occurring in φ.
    """
    _check_builder_input(formula, n)
    sig = _resolve_signature(formula, signature)
    variables = tuple_variables(n)
    return Exists(variables, And((submodel_formula(sig, n), relativize(formula, variables))))


def distinctness(variables: Sequence[str]) -> Formula:
    """¬⋁_{a<b} x_a = x_b."""
    return Not(Or(tuple(EqAtom(Var(a), Var(b)) for a, b in combinations(variables, 2))))


def build_theta_eq(formula: Formula, n: int, signature: Optional[Signature] = None) -> Formula:
    """As ``build_theta_le`` with the submodel of exactly n elements."""
    _check_builder_input(formula, n)
    sig = _resolve_signature(formula, signature)
    variables = tuple_variables(n)
    return Exists(variables, And((
        submodel_formula(sig, n),
        distinctness(variables),
        relativize(formula, variables),
    )))


def build_theta_lt(formula: Formula, n: int, signature: Optional[Signature] = None) -> Formula:
    """θ_{<n}: ``build_theta_le`` at n - 1, and ``(or)`` when n = 1."""
    _check_builder_input(formula, n)
    if n == 1:
        return Or(())
    return build_theta_le(formula, n - 1, signature)


def build_t_phi(formula: Formula, bound: int, signature: Optional[Signature] = None) -> Theory:
    """
    Finite fragment {¬θ_{≤n}(φ) : 1 <= n <= bound}.

    Each member is returned as a universal sentence over an open matrix:
    the relativized quantifiers are expanded over the tuple and the
    negation pushed to the atoms.

    Raises:
        SignatureError: the signature has function or constant symbols
    """
    sig = _resolve_signature(formula, signature)
    if sig.fnc:
        raise SignatureError(
            "T_phi needs a relational signature; found " + ", ".join(n for n, _ in sig.fnc)
        )
    require_sentence(formula)
    if bound < 1:
        raise BoundError("fragment bound must be >= 1")
    members = [
        nnf(Not(expand_bounded_quantifiers(build_theta_le(formula, n, sig))))
        for n in range(1, bound + 1)
    ]
    return Theory(tuple(members))
