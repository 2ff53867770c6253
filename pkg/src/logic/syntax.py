"""
Signatures, terms and formulas.
Immutable first-order syntax with n-ary connectives and quantifier blocks.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Optional, Tuple, Union

from .errors import FormulaError, SignatureError


class SymbolKind(Enum):
    """Kinds of non-logical symbols."""
    PREDICATE = "pred"
    FUNCTION = "fun"
    CONSTANT = "const"


@dataclass(frozen=True)
class Signature:
    """
    A first-order signature.

    Symbol names are distinct across predicates, functions and constants.
    Equality is a logical symbol; whether formulas may use it is governed
    by ``equality_allowed``.
    """
    predicates: Dict[str, int] = field(default_factory=dict)
    functions: Dict[str, int] = field(default_factory=dict)
    constants: FrozenSet[str] = frozenset()
    equality_allowed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "predicates", dict(sorted(self.predicates.items())))
        object.__setattr__(self, "functions", dict(sorted(self.functions.items())))
        object.__setattr__(self, "constants", frozenset(self.constants))

        for name, arity in self.predicates.items():
            if arity < 1:
                raise SignatureError(f"predicate {name} must have arity >= 1")
        for name, arity in self.functions.items():
            if arity < 1:
                raise SignatureError(f"function {name} must have arity >= 1 (use a constant)")

        seen = set()
        for name in list(self.predicates) + list(self.functions) + sorted(self.constants):
            if name in seen:
                raise SignatureError(f"duplicate symbol: {name}")
            seen.add(name)

    def __hash__(self):
        return hash((
            tuple(self.predicates.items()),
            tuple(self.functions.items()),
            tuple(sorted(self.constants)),
            self.equality_allowed,
        ))

    # ------------------------------------------------------------------
    # Derived views

    @property
    def fnc(self) -> Tuple[Tuple[str, int], ...]:
        """Functions and constants (arity 0), sorted by name."""
        items = list(self.functions.items()) + [(c, 0) for c in self.constants]
        return tuple(sorted(items))

    @property
    def is_relational(self) -> bool:
        return not self.functions and not self.constants

    @property
    def purely_monadic(self) -> bool:
        return self.is_relational and all(a == 1 for a in self.predicates.values())

    def kind_of(self, name: str) -> Optional[SymbolKind]:
        if name in self.predicates:
            return SymbolKind.PREDICATE
        if name in self.functions:
            return SymbolKind.FUNCTION
        if name in self.constants:
            return SymbolKind.CONSTANT
        return None

    def with_equality(self, allowed: bool = True) -> "Signature":
        return Signature(
            predicates=self.predicates,
            functions=self.functions,
            constants=self.constants,
            equality_allowed=allowed,
        )

    def union(self, other: "Signature") -> "Signature":
        """Merge two signatures; shared symbols must agree."""
        predicates = dict(self.predicates)
        functions = dict(self.functions)
        for name, arity in other.predicates.items():
            if predicates.get(name, arity) != arity:
                raise SignatureError(f"conflicting arity for {name}")
            predicates[name] = arity
        for name, arity in other.functions.items():
            if functions.get(name, arity) != arity:
                raise SignatureError(f"conflicting arity for {name}")
            functions[name] = arity
        return Signature(
            predicates=predicates,
            functions=functions,
            constants=self.constants | other.constants,
            equality_allowed=self.equality_allowed or other.equality_allowed,
        )


# ----------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Apply:
    function: str
    args: Tuple["Term", ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if not self.args:
            raise FormulaError(f"function application {self.function} needs arguments")

    def __str__(self):
        return "(" + " ".join([self.function] + [str(a) for a in self.args]) + ")"


Term = Union[Var, Const, Apply]


# ----------------------------------------------------------------------
# Formulas


@dataclass(frozen=True)
class PredAtom:
    predicate: str
    args: Tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))

    def __str__(self):
        return "(" + " ".join([self.predicate] + [str(a) for a in self.args]) + ")"


@dataclass(frozen=True)
class EqAtom:
    left: Term
    right: Term

    def __str__(self):
        return f"(= {self.left} {self.right})"


@dataclass(frozen=True)
class Not:
    body: "Formula"

    def __str__(self):
        return f"(not {self.body})"


@dataclass(frozen=True)
class And:
    items: Tuple["Formula", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    def __str__(self):
        return "(" + " ".join(["and"] + [str(i) for i in self.items]) + ")"


@dataclass(frozen=True)
class Or:
    items: Tuple["Formula", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    def __str__(self):
        return "(" + " ".join(["or"] + [str(i) for i in self.items]) + ")"


def _check_block(variables: Tuple[str, ...]) -> None:
    if not variables:
        raise FormulaError("empty quantifier block")
    if len(set(variables)) != len(variables):
        raise FormulaError(f"repeated variable in quantifier block: {variables}")


@dataclass(frozen=True)
class Exists:
    variables: Tuple[str, ...]
    body: "Formula"

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        _check_block(self.variables)

    def __str__(self):
        return f"(exists ({' '.join(self.variables)}) {self.body})"


@dataclass(frozen=True)
class Forall:
    variables: Tuple[str, ...]
    body: "Formula"

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        _check_block(self.variables)

    def __str__(self):
        return f"(forall ({' '.join(self.variables)}) {self.body})"


Formula = Union[PredAtom, EqAtom, Not, And, Or, Exists, Forall]
TRUE = And(())
FALSE = Or(())


# ----------------------------------------------------------------------
# Constructors


def conjunction(items: Iterable["Formula"]) -> "Formula":
    """And of ``items``; a single item is returned unwrapped."""
    items = tuple(items)
    return items[0] if len(items) == 1 else And(items)


def disjunction(items: Iterable["Formula"]) -> "Formula":
    """Or of ``items``; a single item is returned unwrapped."""
    items = tuple(items)
    return items[0] if len(items) == 1 else Or(items)


def implies(premise: "Formula", conclusion: "Formula") -> "Formula":
    return Or((Not(premise), conclusion))


def negate(formula: "Formula") -> "Formula":
    """Negation that cancels an outer double negation."""
    return formula.body if isinstance(formula, Not) else Not(formula)


def term_variables(term: Term) -> FrozenSet[str]:
    if isinstance(term, Var):
        return frozenset((term.name,))
    if isinstance(term, Apply):
        result = frozenset()
        for arg in term.args:
            result |= term_variables(arg)
        return result
    return frozenset()
