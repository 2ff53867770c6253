"""
S-expression formula parser.

A lark grammar tokenizes nested lists; FormulaBuilder then resolves every
symbol against the signature:

    (forall (x y) (or (< x y) (< y x) (= x y)))
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple, Union

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput

from ..logic.errors import FormulaError, ParseError, SignatureError
from ..logic.operations import check_formula
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
)

SEXPR_GRAMMAR = r"""
    start: _expr*
    _expr: list | symbol
    list: "(" _expr* ")"
    symbol: SYMBOL

    SYMBOL: /[^\s();]+/
    COMMENT: /;[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

KEYWORDS = frozenset({"not", "and", "or", "exists", "forall", "="})


@dataclass(frozen=True)
class SList:
    """A parenthesized list with the line it starts on."""
    items: Tuple["SExpr", ...]
    line: int


SExpr = Union[SList, Token]


class _SExprTransformer(Transformer):
    @v_args(meta=True)
    def list(self, meta, children):
        line = getattr(meta, "line", None) if not getattr(meta, "empty", False) else None
        return SList(tuple(children), line or 0)

    def symbol(self, children):
        return children[0]

    def start(self, children):
        return children


_PARSER = Lark(SEXPR_GRAMMAR, parser="lalr", propagate_positions=True)


def read_sexprs(text: str) -> List[SExpr]:
    """Tokenize ``text`` into top-level s-expressions."""
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as exc:
        raise ParseError(f"malformed s-expression: {exc.__class__.__name__}", line=exc.line) from exc
    return _SExprTransformer().transform(tree)


def _line_of(expr: SExpr) -> Optional[int]:
    if isinstance(expr, SList):
        return expr.line or None
    return getattr(expr, "line", None)


class FormulaBuilder:
    """Turns s-expressions into Formula values over a fixed signature."""

    def __init__(self, signature: Signature):
        self.signature = signature

    def formula(self, expr: SExpr) -> Formula:
        line = _line_of(expr)
        if not isinstance(expr, SList):
            raise ParseError(f"expected a formula, found symbol {str(expr)!r}", line=line)
        if not expr.items:
            raise ParseError("empty list is not a formula", line=line)

        head, args = expr.items[0], expr.items[1:]
        if isinstance(head, SList):
            raise ParseError("formula head must be a symbol", line=line)
        head = str(head)

        if head == "not":
            if len(args) != 1:
                raise ParseError("not takes exactly one formula", line=line)
            return Not(self.formula(args[0]))
        if head in ("and", "or"):
            items = tuple(self.formula(a) for a in args)
            return And(items) if head == "and" else Or(items)
        if head in ("exists", "forall"):
            return self._quantifier(head, args, line)
        if head == "=":
            if not self.signature.equality_allowed:
                raise ParseError("equality in equality-free signature", line=line)
            if len(args) != 2:
                raise ParseError("= takes exactly two terms", line=line)
            return EqAtom(self.term(args[0]), self.term(args[1]))

        arity = self.signature.predicates.get(head)
        if arity is None:
            raise ParseError(f"unknown symbol: {head}", line=line)
        if arity != len(args):
            raise ParseError(f"arity mismatch for {head}: expected {arity}, got {len(args)}", line=line)
        return PredAtom(head, tuple(self.term(a) for a in args))

    def _quantifier(self, head: str, args, line: Optional[int]) -> Formula:
        if len(args) != 2 or not isinstance(args[0], SList):
            raise ParseError(f"{head} takes a variable list and a formula", line=line)
        names = []
        for item in args[0].items:
            if isinstance(item, SList):
                raise ParseError("quantified variables must be symbols", line=line)
            name = str(item)
            if name in KEYWORDS or self.signature.kind_of(name) is not None:
                raise ParseError(f"cannot quantify over symbol {name}", line=line)
            names.append(name)
        if not names:
            raise ParseError("empty quantifier block", line=line)
        if len(set(names)) != len(names):
            raise ParseError("repeated variable in quantifier block", line=line)
        body = self.formula(args[1])
        block = Exists if head == "exists" else Forall
        return block(tuple(names), body)

    def term(self, expr: SExpr) -> Term:
        line = _line_of(expr)
        if not isinstance(expr, SList):
            name = str(expr)
            if name in KEYWORDS:
                raise ParseError(f"keyword {name} used as a term", line=line)
            kind = self.signature.kind_of(name)
            if name in self.signature.constants:
                return Const(name)
            if kind is not None:
                raise ParseError(f"{name} is not a term", line=line)
            return Var(name)

        if not expr.items or isinstance(expr.items[0], SList):
            raise ParseError("malformed term", line=line)
        head, args = str(expr.items[0]), expr.items[1:]
        arity = self.signature.functions.get(head)
        if arity is None:
            raise ParseError(f"unknown symbol: {head}", line=line)
        if arity != len(args):
            raise ParseError(f"arity mismatch for {head}: expected {arity}, got {len(args)}", line=line)
        return Apply(head, tuple(self.term(a) for a in args))


def parse_formulas(text: str, signature: Signature) -> List[Formula]:
    """Parse every top-level formula in ``text``."""
    builder = FormulaBuilder(signature)
    result = []
    for expr in read_sexprs(text):
        formula = builder.formula(expr)
        try:
            check_formula(formula, signature)
        except FormulaError as exc:
            raise ParseError(str(exc), line=_line_of(expr)) from exc
        result.append(formula)
    return result


def parse_formula(text: str, signature: Signature) -> Formula:
    """Parse exactly one formula."""
    formulas = parse_formulas(text, signature)
    if len(formulas) != 1:
        raise ParseError(f"expected one formula, found {len(formulas)}")
    return formulas[0]


# ----------------------------------------------------------------------
# Signature inference


class _SignatureCollector:
    """Collects symbol usage from raw s-expressions."""

    def __init__(self):
        self.predicates: Dict[str, int] = {}
        self.functions: Dict[str, int] = {}
        self.constants: Set[str] = set()
        self.equality = False

    def _record(self, table: Dict[str, int], name: str, arity: int) -> None:
        if table.get(name, arity) != arity:
            raise SignatureError(f"symbol {name} used with arities {table[name]} and {arity}")
        table[name] = arity

    def formula(self, expr: SExpr, bound: FrozenSet[str]) -> None:
        if not isinstance(expr, SList) or not expr.items:
            raise ParseError("expected a formula", line=_line_of(expr))
        head, args = str(expr.items[0]), expr.items[1:]
        if head == "not" or head in ("and", "or"):
            for arg in args:
                self.formula(arg, bound)
        elif head in ("exists", "forall"):
            if len(args) != 2 or not isinstance(args[0], SList):
                raise ParseError(f"{head} takes a variable list and a formula", line=expr.line)
            names = frozenset(str(v) for v in args[0].items)
            self.formula(args[1], bound | names)
        elif head == "=":
            self.equality = True
            for arg in args:
                self.term(arg, bound)
        else:
            self._record(self.predicates, head, len(args))
            for arg in args:
                self.term(arg, bound)

    def term(self, expr: SExpr, bound: FrozenSet[str]) -> None:
        if isinstance(expr, SList):
            if not expr.items:
                raise ParseError("malformed term", line=expr.line)
            head, args = str(expr.items[0]), expr.items[1:]
            self._record(self.functions, head, len(args))
            for arg in args:
                self.term(arg, bound)
        elif str(expr) not in bound:
            self.constants.add(str(expr))

    def signature(self) -> Signature:
        return Signature(
            predicates=self.predicates,
            functions=self.functions,
            constants=frozenset(self.constants),
            equality_allowed=self.equality,
        )


def infer_signature(text: str) -> Signature:
    """
    Guess the signature of sentences written in ``text``.

    Atom heads become predicates, application heads functions, and free
    bare names constants. Inconsistent arities raise SignatureError.
    """
    collector = _SignatureCollector()
    for expr in read_sexprs(text):
        collector.formula(expr, frozenset())
    return collector.signature()
